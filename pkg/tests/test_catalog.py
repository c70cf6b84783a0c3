import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ppbound.catalog import (
    CENSUS_ENV,
    Case,
    CatalogError,
    CensusError,
    GroupId,
    census_format_row,
    choose_m,
    classical_torus,
    exceptional_torus,
    group_info,
    group_order,
    lemma51_case,
    lemma52_case,
    load_class_census,
    out_order,
    parse_census,
    torus_specs,
)
from ppbound.numtheory import is_prime, prime_powers_upto, s_part

Q32 = prime_powers_upto(32)
Q64 = prime_powers_upto(64)


def G(family, d=None, q=None):
    return GroupId(family, d=d, q=q)


# Orders as printed in standard tables of finite simple groups, typed in
# independently of the formulas in the catalog.
KNOWN_ORDERS = [
    (GroupId.alt(5), 60),
    (GroupId.alt(8), 20160),
    (G("PSL", 2, 7), 168),
    (G("PSL", 2, 8), 504),
    (G("PSL", 3, 4), 20160),
    (G("PSL", 4, 2), 20160),
    (G("PSU", 3, 3), 6048),
    (G("PSU", 3, 5), 126000),
    (G("PSU", 4, 2), 25920),
    (G("PSU", 4, 3), 3265920),
    (G("PSp", 2, 3), 25920),
    (G("PSp", 2, 4), 979200),
    (G("PSp", 3, 2), 1451520),
    (G("OmegaOdd", 3, 3), 4585351680),
    (G("OmegaPlus", 4, 2), 174182400),
    (G("OmegaMinus", 4, 2), 197406720),
    (G("2B2", q=8), 29120),
    (G("2B2", q=32), 32537600),
    (G("2G2", q=27), 10073444472),
    (G("3D4", q=2), 211341312),
    (G("G2", q=3), 4245696),
    (G("G2", q=4), 251596800),
    (G("F4", q=2), 3311126603366400),
    (G("E6", q=2), 214841575522005575270400),
    (G("2E6", q=2), 76532479683774853939200),
]


@pytest.mark.parametrize("g,order", KNOWN_ORDERS, ids=[str(g) for g, _ in KNOWN_ORDERS])
def test_group_order_matches_tables(g, order):
    assert group_order(g) == order


def test_out_orders():
    assert out_order(G("2B2", q=8)) == 3
    assert out_order(G("PSL", 2, 7)) == 2
    assert out_order(G("PSL", 2, 9)) == 4
    assert out_order(GroupId.alt(6)) == 4
    assert out_order(GroupId.alt(7)) == 2
    # E6: 2 a e with e = (3, q-1)
    assert out_order(G("E6", q=4)) == 2 * 2 * 3
    assert out_order(G("E6", q=2)) == 2
    assert out_order(G("E8", q=8)) == 3
    info = group_info(G("G2", q=3))
    assert info.order > 1 and info.out_order >= 1


@pytest.mark.parametrize(
    "family,d,q",
    [
        ("PSL", 2, 2), ("PSL", 2, 3), ("PSL", 1, 5), ("PSU", 3, 2), ("PSU", 2, 5),
        ("PSp", 2, 2), ("PSp", 1, 3), ("OmegaOdd", 3, 4), ("OmegaOdd", 2, 3),
        ("OmegaPlus", 3, 3), ("OmegaMinus", 3, 2), ("PSL", 3, 6), ("PSL", 3, None),
        ("2B2", None, 2), ("2B2", None, 4), ("2G2", None, 3), ("2G2", None, 9),
        ("2F4", None, 2), ("G2", None, 2), ("E8", 2, 2), ("Foo", 2, 2),
    ],
)  # fmt: skip
def test_excluded_parameters_rejected(family, d, q):
    with pytest.raises(CatalogError):
        GroupId(family, d=d, q=q)


def test_alt_parameters():
    with pytest.raises(CatalogError):
        GroupId.alt(4)
    with pytest.raises(CatalogError):
        GroupId("Alt", degree=7, q=2)
    assert str(GroupId.alt(7)) == "Alt(7)"
    assert str(G("PSp", 2, 3)) == "PSp(4,3)"
    assert str(G("OmegaOdd", 3, 3)) == "OmegaOdd(7,3)"
    assert str(G("2B2", q=8)) == "2B2(8)"


def test_choose_m_examples():
    assert choose_m(2) == 2
    assert choose_m(3) == 3
    assert choose_m(4) == 3
    assert choose_m(7) == 5
    with pytest.raises(CatalogError):
        choose_m(1)


def test_choose_m_range():
    for d in range(2, 501):
        m = choose_m(d)
        assert is_prime(m) and d < 2 * m <= 2 * d
        smaller = [k for k in range(d // 2 + 1, m) if is_prime(k)]
        assert d == 3 or not smaller


def test_classical_torus_examples():
    t = classical_torus(G("PSp", 2, 3))
    # 4a * (2,q) with a = 1, q = 3
    assert (t.order, t.r_divides, t.z) == (5, 4, None)
    assert classical_torus(G("PSp", 2, 4)).r_divides == 4 * 2 * 2
    assert classical_torus(G("PSU", 3, 3)).order == 7
    t = classical_torus(G("PSL", 2, 7))
    assert (t.order, t.r_divides) == (3, 2)
    assert classical_torus(G("PSL", 2, 9)).order == 5
    assert classical_torus(G("PSL", 2, 8)).order == 9
    with pytest.raises(CatalogError):
        classical_torus(G("G2", q=3))


def test_classical_torus_degenerate_unitary_rows():
    # (2^3+1)/((2+1)(3,3)) = 1 for PSU(4,2) and PSU(5,2)
    for d in (4, 5):
        with pytest.raises(CatalogError):
            classical_torus(G("PSU", d, 2))


def test_exceptional_torus_examples():
    specs = exceptional_torus(G("2B2", q=8))
    assert sorted(t.order for t in specs) == [5, 13]
    assert {t.z for t in specs} == {4}
    (t,) = exceptional_torus(G("3D4", q=2))
    assert (t.order, t.z) == (13, 4)
    (t,) = exceptional_torus(G("E8", q=2))
    assert (t.order, t.z) == (15 * 10 + 1, 30)
    for g in (G("F4", q=2), G("2E6", q=2)):
        with pytest.raises(CatalogError):
            exceptional_torus(g)


def test_e7_row_selection():
    (t,) = exceptional_torus(G("E7", q=5))
    assert t.order == 2 and t.condition == "q = 2 mod 3"
    (t,) = exceptional_torus(G("E7", q=3))
    assert t.order == 2 and t.condition == "q != 2 mod 3"
    (t,) = exceptional_torus(G("E7", q=4))
    assert t.order == 5


def test_r_divides_is_z_times_out():
    for g in (G("2B2", q=32), G("3D4", q=3), G("E6", q=7), G("E8", q=3), G("G2", q=5)):
        for t in exceptional_torus(g):
            assert t.r_divides == t.z * out_order(g)


def _classical_ids(max_q, max_d):
    for fam, lo in (("PSL", 2), ("PSU", 3), ("PSp", 2), ("OmegaOdd", 3), ("OmegaPlus", 4), ("OmegaMinus", 4)):
        for d in range(lo, max_d + 1):
            for q in prime_powers_upto(max_q):
                try:
                    yield G(fam, d, q)
                except CatalogError:
                    continue


def _exceptional_ids(max_q):
    for fam in ("2B2", "2G2", "2F4", "3D4", "G2", "F4", "E6", "2E6", "E7", "E8"):
        for q in prime_powers_upto(max_q):
            try:
                yield G(fam, q=q)
            except CatalogError:
                continue


def test_torus_orders_divide_group_orders():
    checked = 0
    for g in list(_classical_ids(32, 8)) + list(_exceptional_ids(32)):
        try:
            specs = torus_specs(g)
        except CatalogError:
            continue
        order = group_order(g)
        for t in specs:
            assert t.order > 1 and order % t.order == 0, (str(g), t.order)
            if t.case == "O":
                assert t.order % 2 == 1
            checked += 1
    assert checked > 600


@given(st.sampled_from(["PSL", "PSU", "PSp", "OmegaOdd", "OmegaPlus", "OmegaMinus"]), st.integers(2, 12), st.sampled_from(Q32))
def test_torus_divides_order_property(fam, d, q):
    try:
        g = G(fam, d, q)
        (t,) = torus_specs(g)
    except CatalogError:
        assume(False)
    assert group_order(g) % t.order == 0


def test_twisted_pairs_coprime():
    for t in range(1, 7):
        q = 2 ** (2 * t + 1)
        a, b = exceptional_torus(G("2B2", q=q))
        assert math.gcd(a.order, b.order) == 1 and a.order * b.order == q * q + 1
    for t in range(1, 5):
        q = 3 ** (2 * t + 1)
        a, b = exceptional_torus(G("2G2", q=q))
        assert math.gcd(a.order, b.order) == 1 and a.order * b.order == q * q - q + 1


def test_2f4_pair_divides_order():
    for q in (8, 32, 128):
        for t in exceptional_torus(G("2F4", q=q)):
            assert group_order(G("2F4", q=q)) % t.order == 0


def test_e_family_quotients_are_integral():
    for q in Q64:
        assert (q * q + q + 1) % math.gcd(3, q - 1) == 0
        assert (q * q - q + 1) % math.gcd(3, q + 1) == 0
        dd = math.gcd(2, q - 1)
        assert (q - 1) % dd == 0 and (q + 1) % dd == 0


def test_lemma51_cases():
    v = lemma51_case(G("3D4", q=2), 13)
    assert v.case is Case.CHARACTERISTIC
    v = lemma51_case(G("E7", q=3), 2)
    assert v.case is Case.E7_SMALL2 and v.s_part == 2
    v = lemma51_case(G("E7", q=5), 2)
    assert v.case is Case.E7_SMALL2
    v = lemma51_case(G("E7", q=7), 2)
    assert v.case is Case.E7_Y2 and v.s_part == 4 and v.y2_lower_bound == 2
    with pytest.raises(CatalogError):
        lemma51_case(G("E7", q=5), 3)
    with pytest.raises(CatalogError):
        lemma51_case(G("G2", q=3), 13)


def test_lemma52_cases():
    v = lemma52_case(G("G2", q=4), 3)
    assert v.case is Case.G2_3 and v.s_part == 3
    assert lemma52_case(G("G2", q=3), 13).case is Case.CHARACTERISTIC
    v = lemma52_case(G("F4", q=3), 2)
    assert v.case is Case.F4_2 and v.s_part == 2
    with pytest.raises(CatalogError):
        lemma52_case(G("G2", q=3), 2)
    with pytest.raises(CatalogError):
        lemma52_case(G("F4", q=4), 2)


def test_case_assertions_on_range():
    for q in Q64:
        if q % 3 == 1 and q > 2:
            assert s_part(q * q + q + 1, 3) == 3
            assert lemma52_case(G("G2", q=q), 3).case is Case.G2_3
        if q % 2:
            assert s_part(q**4 + 1, 2) == 2


# --- census ---------------------------------------------------------------


def test_census_examples(tmp_path):
    text = "# comment\nPSL,2,7,2,2,oracle\n\nAlt,6,,2,2,paper\n"
    rows = parse_census(text)
    assert [(str(r.group), r.p, r.count, r.provenance, r.line) for r in rows] == [
        ("PSL(2,7)", 2, 2, "oracle", 2),
        ("Alt(6)", 2, 2, "paper", 4),
    ]
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    assert load_class_census(empty) == {}


@pytest.mark.parametrize(
    "line,needle",
    [
        ("PSL,2,7,2", "expected 6 fields"),
        ("Foo,2,7,2,2,oracle", "unknown family"),
        ("PSL,2,6,2,2,oracle", "line 1"),
        ("PSL,2,7,5,2,oracle", "prime divisor"),
        ("PSL,2,7,2,0,oracle", "count"),
        ("PSL,2,7,2,x,oracle", "not an integer"),
        ("PSL,2,7,2,2,rumour", "provenance"),
        ("PSL,2,2,2,2,oracle", "excluded"),
    ],
)
def test_census_rejects(line, needle):
    with pytest.raises(CensusError, match=needle):
        parse_census(line)


def test_census_line_number_reported():
    with pytest.raises(CensusError, match="line 3"):
        parse_census("# h\nPSL,2,7,2,2,oracle\nPSL,2,7,2\n")


def test_census_conflicting_rows(tmp_path):
    p = tmp_path / "c.csv"
    p.write_text("PSL,2,7,2,2,oracle\nPSL,2,7,2,3,literature\n")
    with pytest.raises(CensusError, match="conflicting"):
        load_class_census(p)


def test_bundled_census_loads(monkeypatch):
    monkeypatch.delenv(CENSUS_ENV, raising=False)
    table = load_class_census()
    assert table[(G("PSL", 2, 7), 2)] == 2
    assert table[(GroupId.alt(6), 2)] == 2
    assert table[(G("2B2", q=8), 2)] == 3


def test_census_env_override(tmp_path, monkeypatch):
    p = tmp_path / "c.csv"
    p.write_text("PSL,2,8,3,1,literature\n")
    monkeypatch.setenv(CENSUS_ENV, str(p))
    assert load_class_census() == {(G("PSL", 2, 8), 3): 1}


def test_census_format_roundtrip():
    for g, p, c in ((GroupId.alt(6), 3, 2), (G("PSp", 2, 3), 5, 1), (G("2B2", q=8), 13, 1)):
        (row,) = parse_census(census_format_row(g, p, c, "literature"))
        assert (row.group, row.p, row.count) == (g, p, c)
