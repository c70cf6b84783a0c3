import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ppbound.catalog import GroupId, classical_torus, exceptional_torus, group_order, out_order
from ppbound.numtheory import factorize, prime_powers_upto
from ppbound.oracle.fusion import (
    _partitions,
    alt_order_pk_classes,
    alt_p_classes,
    aut_class_count,
    fusion_map,
    m_of,
    m_p_table,
    unipotent_class_count,
    verify_lemma23,
)
from ppbound.oracle.groups import UnsupportedGroup, realize, supported_ids
from ppbound.oracle.perm import (
    CapacityError,
    PermGroup,
    conjugacy_classes,
    conjugate,
    cycle_type,
    from_cycles,
    identity,
    inverse,
    mul,
    order,
    perm,
    power,
)

ENUMERATED = [g for g in supported_ids() if not (g.family == "Alt" and g.degree >= 10)]


def PSL(d, q):
    return GroupId("PSL", d, q)


# --- permutations ----------------------------------------------------------------

perms5 = st.permutations(range(5)).map(perm)


@given(perms5, perms5, perms5)
def test_mul_associative(x, y, z):
    assert mul(mul(x, y), z) == mul(x, mul(y, z))


@given(perms5, perms5)
def test_inverse_and_conjugate(x, g):
    e = identity(5)
    assert mul(x, inverse(x)) == e == mul(inverse(x), x)
    assert conjugate(x, g) == mul(mul(inverse(g), x), g)
    assert order(conjugate(x, g)) == order(x)
    assert power(x, order(x)) == e


def test_perm_helpers():
    with pytest.raises(ValueError):
        perm([0, 0, 1])
    x = from_cycles(6, (0, 1, 2), (3, 4))
    assert cycle_type(x) == (3, 2, 1)
    assert order(x) == 6
    # mul(x, y) applies x first
    a, b = from_cycles(3, (0, 1)), from_cycles(3, (1, 2))
    assert mul(a, b)[0] == b[a[0]]


# --- enumeration and classes -------------------------------------------------------


@pytest.mark.parametrize("g", ENUMERATED, ids=str)
def test_enumeration_matches_catalog_order(g):
    real = realize(g)
    assert real.group.order == group_order(g)


def test_sz8_enumerates():
    assert realize(GroupId("2B2", q=8)).group.order == 29120


def test_capacity_refusal():
    g = PermGroup(5, (from_cycles(5, (0, 1, 2)), from_cycles(5, (0, 1, 2, 3, 4))), cap=10)
    with pytest.raises(CapacityError, match="cap"):
        g.elements
    big = PermGroup(5, (from_cycles(5, (0, 1)),), expected_order=10**8)
    with pytest.raises(CapacityError, match="10000000"):
        big.elements


def test_closure():
    g = realize(PSL(2, 7)).group
    els = g.elements
    sample = sorted(els)[::7]
    for x in sample:
        assert inverse(x) in els
        for y in sample[:10]:
            assert mul(x, y) in els


def test_alt5_classes():
    classes = conjugacy_classes(realize(GroupId.alt(5)).group)
    assert sorted(c.size for c in classes) == [1, 12, 12, 15, 20]


def test_psl27_classes():
    classes = conjugacy_classes(realize(PSL(2, 7)).group)
    assert [c.element_order for c in classes] == [1, 2, 3, 4, 7, 7]


def test_cyclic_classes():
    g = PermGroup(4, (from_cycles(4, (0, 1, 2, 3)),))
    classes = conjugacy_classes(g)
    assert len(classes) == 4 and all(c.size == 1 for c in classes)


@pytest.mark.parametrize("g", ENUMERATED, ids=str)
def test_class_and_fusion_invariants(g):
    fm = fusion_map(g)
    assert sum(c.size for c in fm.t_classes) == group_order(g)
    for orbit in fm.aut_orbits:
        assert len({fm.t_classes[i].element_order for i in orbit}) == 1
    reps = [c.representative for c in fm.t_classes]
    assert all(fm.class_of[r] == i for i, r in enumerate(reps))


@pytest.mark.parametrize("g", ENUMERATED, ids=str)
def test_outer_generators_model_aut(g):
    real = realize(g)
    t = real.group.elements
    for a in real.outer:
        for x in real.group.generators:
            assert conjugate(x, a) in t
    if g.family == "Alt" and g.degree != 6:
        expected = 2 * group_order(g)
    else:
        expected = group_order(g) * out_order(g)
    assert real.aut_group().order == expected


def test_classes_deterministic():
    a = conjugacy_classes(realize(PSL(2, 8)).group)
    b = conjugacy_classes(PermGroup(realize(PSL(2, 8)).group.degree, realize(PSL(2, 8)).group.generators))
    assert a == b


def test_unsupported_refused():
    for g in (GroupId.alt(13), PSL(2, 37), PSL(4, 2), GroupId("2B2", q=32)):
        with pytest.raises(UnsupportedGroup):
            aut_class_count(g, 2)


# --- class counts -------------------------------------------------------------------


def test_aut_class_count_examples():
    assert aut_class_count(GroupId.alt(6), 2) == 2
    assert aut_class_count(PSL(2, 7), 7) == 1
    assert aut_class_count(PSL(2, 7), 2) == 2
    assert aut_class_count(PSL(2, 7), 2, include_identity=True) == 3


def test_m_of_examples():
    assert m_of(GroupId.alt(5)) == (1, 2)
    assert m_of(PSL(2, 7)) == (2, 2)
    assert m_of(GroupId.alt(7)) == (2, 2)
    assert m_p_table(GroupId.alt(7)) == {2: 2, 3: 2, 5: 1, 7: 1}
    assert m_p_table(PSL(2, 7)) == {2: 2, 3: 1, 7: 1}


def test_m_values_across_small_groups():
    assert m_of(GroupId.alt(6)) == (2, 2)
    assert m_of(GroupId.alt(8))[0] == 4
    assert m_of(GroupId.alt(9))[0] == 4
    assert m_of(PSL(3, 3))[0] == 3
    assert m_of(GroupId("2B2", q=8)) == (3, 2)
    assert m_of(PSL(2, 31)) == (8, 2)


def test_alt6_exceptional_fusion():
    # the outer automorphism of Alt(6) swaps 3-cycles with double 3-cycles
    # and fuses the two 5-classes; cycle types alone would give m_3 = 2
    assert m_p_table(GroupId.alt(6)) == {2: 2, 3: 1, 5: 1}
    assert alt_p_classes(6, 3)[0] == 1
    assert len(alt_p_classes(6, 3)[1]) == 2
    for p in (2, 3, 5):
        assert alt_p_classes(6, p)[0] == aut_class_count(GroupId.alt(6), p)


def test_alt_p_classes_examples():
    n, types = alt_p_classes(7, 3)
    assert n == 2 == 7 // 3 and set(types) == {(3, 1, 1, 1, 1), (3, 3, 1)}
    n, types = alt_p_classes(9, 3)
    assert n == 4 and set(types) == {(3,) + (1,) * 6, (3, 3, 1, 1, 1), (3, 3, 3), (9,)}
    n, types = alt_p_classes(7, 2)
    assert n == 2 and set(types) == {(2, 2, 1, 1, 1), (4, 2, 1)}
    assert alt_p_classes(7, 2, include_identity=True)[0] == 3
    with pytest.raises(ValueError):
        alt_p_classes(4, 2)


@pytest.mark.parametrize("m", [5, 7, 8, 9])
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_alt_partitions_match_enumeration(m, p):
    for ident in (False, True):
        assert alt_p_classes(m, p, ident)[0] == aut_class_count(GroupId.alt(m), p, ident)


def test_large_alt_three_classes():
    for m in range(5, 13):
        if m == 6:
            continue
        # order-3 classes are floor(m/3); order 9 appears once m >= 9
        assert alt_order_pk_classes(m, 3, 1) == m // 3
        assert aut_class_count(GroupId.alt(m), 3) == alt_p_classes(m, 3)[0]
        assert alt_p_classes(m, 3)[0] == m // 3 + alt_order_pk_classes(m, 3, 2)


def _brute_pk(m, p, k):
    def ok(ct):
        parts_ok = all(x == 1 or (x % p == 0 and p ** round(math.log(x, p)) == x) for x in ct)
        even = sum(1 for x in ct if x % 2 == 0) % 2 == 0
        return parts_ok and even and max(ct) == p**k

    return sum(1 for ct in _partitions(m) if ok(ct))


def test_alt_order_pk_examples():
    assert alt_order_pk_classes(50, 5, 2) == 7
    assert alt_order_pk_classes(18, 3, 2) == 5 >= 3
    assert alt_order_pk_classes(20, 5, 3) == 0
    for bad in (4, 6):
        with pytest.raises(ValueError):
            alt_order_pk_classes(bad, 2, 1)


@given(st.integers(5, 30).filter(lambda m: m != 6), st.sampled_from([2, 3, 5]), st.integers(1, 3))
def test_alt_order_pk_matches_partition_scan(m, p, k):
    assert alt_order_pk_classes(m, p, k) == _brute_pk(m, p, k)


def test_alt_order_p2_at_least_p():
    for p in (5, 7, 11, 13):
        for m in range(2 * p * p, 3 * p * p):
            assert alt_order_pk_classes(m, p, 2) >= p


# --- torus normalizers and unipotent classes ---------------------------------------------


def test_lemma23_examples():
    rec = verify_lemma23(PSL(2, 7), classical_torus(PSL(2, 7)), 3)
    assert (rec.s_order, rec.phi, rec.r, rec.classes) == (3, 2, 2, 1) and rec.holds
    rec = verify_lemma23(PSL(2, 9), classical_torus(PSL(2, 9)), 5)
    assert (rec.phi, rec.r, rec.classes) == (4, 4, 1) and rec.holds
    rec = verify_lemma23(PSL(2, 4), classical_torus(PSL(2, 4)), 5)
    assert rec.classes == 1 and rec.holds
    with pytest.raises(ValueError):
        verify_lemma23(PSL(2, 7), classical_torus(PSL(2, 7)), 7)


@pytest.mark.parametrize("q", [5, 7, 8, 9, 11, 13])
def test_lemma23_psl2(q):
    g = PSL(2, q)
    t = classical_torus(g)
    for s in factorize(t.order).primes:
        rec = verify_lemma23(g, t, s)
        assert rec.holds and rec.classes * rec.r == rec.phi and t.r_divides % rec.r == 0
        assert rec.classes_all >= rec.classes


def test_lemma23_other_models():
    for g in (PSL(3, 2), PSL(3, 3)):
        t = classical_torus(g)
        for s in factorize(t.order).primes:
            assert verify_lemma23(g, t, s).holds
    sz = GroupId("2B2", q=8)
    for t in exceptional_torus(sz):
        for s in factorize(t.order).primes:
            assert verify_lemma23(sz, t, s).holds


def test_unipotent_examples():
    u = unipotent_class_count(PSL(3, 2))
    assert (u.count, u.d, u.holds) == (3, 3, True)
    assert unipotent_class_count(PSL(2, 5)).count == 2
    assert unipotent_class_count(PSL(2, 4)).count == 2
    with pytest.raises(UnsupportedGroup):
        unipotent_class_count(GroupId.alt(5))


def test_unipotent_all_supported():
    ids = [PSL(2, q) for q in prime_powers_upto(32, 4)] + [PSL(3, 2), PSL(3, 3)]
    for g in ids:
        assert unipotent_class_count(g).holds
