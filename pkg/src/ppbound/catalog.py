"""Group families, their orders and outer automorphism orders, and the cyclic
"torus" subgroups used by the order bounds for classical and exceptional
groups of Lie type.  Also loads the class-count census file.
"""

from __future__ import annotations

import csv
import enum
import io
import math
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .numtheory import is_prime, prime_power, s_part, s_prime_part

CLASSICAL = ("PSL", "PSU", "PSp", "OmegaOdd", "OmegaPlus", "OmegaMinus")
EXCEPTIONAL = ("2B2", "2G2", "2F4", "3D4", "G2", "F4", "E6", "2E6", "E7", "E8")
FAMILIES = ("Alt",) + CLASSICAL + EXCEPTIONAL

CENSUS_ENV = "PPBOUND_CENSUS"
PROVENANCES = ("oracle", "paper", "literature")


class CatalogError(ValueError):
    """Parameters outside the families and conditions this catalog knows."""


@dataclass(frozen=True, order=True)
class GroupId:
    """A finite simple group by family and parameters.

    ``d`` follows the classical-table convention: PSL(d,q), PSU(d,q),
    PSp(2d,q), POmega(2d+1,q), POmega^+-(2d,q).  ``degree`` is only used by
    Alt.
    """

    family: str
    d: int | None = None
    q: int | None = None
    degree: int | None = None

    def __post_init__(self):
        _validate(self)

    @classmethod
    def alt(cls, m: int) -> "GroupId":
        return cls("Alt", degree=m)

    @property
    def p(self) -> int:
        return prime_power(self.q)[0]

    @property
    def a(self) -> int:
        return prime_power(self.q)[1]

    @property
    def is_classical(self) -> bool:
        return self.family in CLASSICAL

    @property
    def is_exceptional(self) -> bool:
        return self.family in EXCEPTIONAL

    def __str__(self) -> str:
        if self.family == "Alt":
            return f"Alt({self.degree})"
        if self.family in CLASSICAL:
            dim = {"PSp": 2 * self.d, "OmegaOdd": 2 * self.d + 1,
                   "OmegaPlus": 2 * self.d, "OmegaMinus": 2 * self.d}.get(self.family, self.d)  # fmt: skip
            return f"{self.family}({dim},{self.q})"
        return f"{self.family}({self.q})"


def _odd_power(q: int, p: int) -> bool:
    try:
        r, a = prime_power(q)
    except ValueError:
        return False
    return r == p and a % 2 == 1


def _validate(g: GroupId) -> None:
    fam = g.family
    if fam not in FAMILIES:
        raise CatalogError(f"unknown family {fam!r}")
    if fam == "Alt":
        if g.degree is None or g.degree < 5 or g.d is not None or g.q is not None:
            raise CatalogError("Alt needs degree >= 5 and no d, q")
        return
    if g.degree is not None or g.q is None:
        raise CatalogError(f"{fam} needs q and no degree")
    try:
        p, a = prime_power(g.q)
    except (ValueError, TypeError) as exc:
        raise CatalogError(f"q = {g.q} is not a prime power") from exc
    if fam in CLASSICAL:
        d, q = g.d, g.q
        if d is None:
            raise CatalogError(f"{fam} needs d")
        ok = {
            "PSL": d >= 2 and (d, q) not in ((2, 2), (2, 3)),
            "PSU": d >= 3 and (d, q) != (3, 2),
            "PSp": d >= 2 and (d, q) != (2, 2),
            "OmegaOdd": d >= 3 and q % 2 == 1,
            "OmegaPlus": d >= 4,
            "OmegaMinus": d >= 4,
        }[fam]
        if not ok:
            raise CatalogError(f"{fam} with d={d}, q={q} is excluded")
        return
    if g.d is not None:
        raise CatalogError(f"{fam} takes no d")
    # Suzuki/Ree: q an odd power of 2 or 3; q = 2, 3 give non-simple groups
    if fam in ("2B2", "2F4") and not (_odd_power(g.q, 2) and g.q > 2):
        raise CatalogError(f"{fam} needs q = 2^(2t+1) with t >= 1")
    if fam == "2G2" and not (_odd_power(g.q, 3) and g.q > 3):
        raise CatalogError("2G2 needs q = 3^(2t+1) with t >= 1")
    if fam == "G2" and g.q == 2:
        raise CatalogError("G2(2) is not simple")


def _prod(xs) -> int:
    return math.prod(xs)


def group_order(g: GroupId) -> int:
    """Exact order of the simple group."""
    fam = g.family
    if fam == "Alt":
        return math.factorial(g.degree) // 2
    q, d = g.q, g.d
    if fam == "PSL":
        return q ** (d * (d - 1) // 2) * _prod(q**i - 1 for i in range(2, d + 1)) // math.gcd(d, q - 1)
    if fam == "PSU":
        return q ** (d * (d - 1) // 2) * _prod(q**i - (-1) ** i for i in range(2, d + 1)) // math.gcd(d, q + 1)
    if fam in ("PSp", "OmegaOdd"):
        return q ** (d * d) * _prod(q ** (2 * i) - 1 for i in range(1, d + 1)) // math.gcd(2, q - 1)
    if fam in ("OmegaPlus", "OmegaMinus"):
        eps = 1 if fam == "OmegaPlus" else -1
        top = q**d - eps
        return q ** (d * (d - 1)) * top * _prod(q ** (2 * i) - 1 for i in range(1, d)) // math.gcd(4, top)
    if fam == "2B2":
        return q**2 * (q**2 + 1) * (q - 1)
    if fam == "2G2":
        return q**3 * (q**3 + 1) * (q - 1)
    if fam == "2F4":
        return q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)
    if fam == "3D4":
        return q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
    if fam == "G2":
        return q**6 * (q**6 - 1) * (q**2 - 1)
    if fam == "F4":
        return q**24 * _prod(q**i - 1 for i in (12, 8, 6, 2))
    if fam == "E6":
        return q**36 * _prod(q**i - 1 for i in (12, 9, 8, 6, 5, 2)) // math.gcd(3, q - 1)
    if fam == "2E6":
        return (q**36 * (q**12 - 1) * (q**9 + 1) * (q**8 - 1) * (q**6 - 1) * (q**5 + 1) * (q**2 - 1)
                // math.gcd(3, q + 1))  # fmt: skip
    if fam == "E7":
        return q**63 * _prod(q**i - 1 for i in (18, 14, 12, 10, 8, 6, 2)) // math.gcd(2, q - 1)
    if fam == "E8":
        return q**120 * _prod(q**i - 1 for i in (30, 24, 20, 18, 14, 12, 8, 2))
    raise CatalogError(f"no order formula for {fam}")


def out_order(g: GroupId) -> int:
    """|Out(T)|.  Exceptional families follow the torus tables' column,
    which lists a for 3D4 and a*e' for 2E6 where the usual values are 3a and
    2a*e'; both usual values still divide the 360a used by the bounds."""
    fam = g.family
    if fam == "Alt":
        return 4 if g.degree == 6 else 2
    p, a = g.p, g.a
    q, d = g.q, g.d
    if fam == "PSL":
        return math.gcd(2, q - 1) * a if d == 2 else 2 * math.gcd(d, q - 1) * a
    if fam == "PSU":
        return 2 * math.gcd(d, q + 1) * a
    if fam == "PSp":
        return 2 * a if (d == 2 and p == 2) else math.gcd(2, q - 1) * a
    if fam == "OmegaOdd":
        return 2 * a
    if fam in ("OmegaPlus", "OmegaMinus"):
        eps = 1 if fam == "OmegaPlus" else -1
        graph = 6 if (fam == "OmegaPlus" and d == 4) else 2
        return graph * math.gcd(4, q**d - eps) * a
    e, e2, dd = math.gcd(3, q - 1), math.gcd(3, q + 1), math.gcd(2, q - 1)
    return {
        "2B2": a, "2G2": a, "2F4": a, "3D4": a,
        "G2": 2 * a if p == 3 else a,
        "F4": 2 * a if p == 2 else a,
        "E6": 2 * a * e, "2E6": a * e2, "E7": a * dd, "E8": a,
    }[fam]  # fmt: skip


@dataclass(frozen=True)
class GroupInfo:
    id: GroupId
    order: int
    out_order: int


def group_info(g: GroupId) -> GroupInfo:
    return GroupInfo(g, group_order(g), out_order(g))


@dataclass(frozen=True)
class TorusSpec:
    """A cyclic subgroup H of T of a tabulated order.

    ``r_divides`` is a multiple of r = |N_Aut(T)(H) : C_Aut(T)(H)|.  ``z`` is
    the normalizer index factor; it is None for the classical tables, which
    do not carry one.
    """

    owner: GroupId
    order: int
    z: int | None
    r_divides: int
    normalizer_shape: str
    source: str
    condition: str = ""
    case: str = ""


def choose_m(d: int) -> int:
    """Smallest prime m with d/2 < m <= d, except m = 3 when d = 3."""
    if d < 2:
        raise CatalogError(f"choose_m needs d >= 2, got {d}")
    if d == 3:
        return 3
    m = d // 2 + 1
    while not is_prime(m):
        m += 1
    return m


def classical_torus(g: GroupId) -> TorusSpec:
    if not g.is_classical:
        raise CatalogError(f"{g} is not a classical group")
    fam, d, q, a = g.family, g.d, g.q, g.a
    m = choose_m(d)

    def spec(order, r, shape, source, case, condition=""):
        if order <= 1:
            # happens for PSU(4,2), PSU(5,2): (2^3+1)/((2+1)(3,3)) = 1
            raise CatalogError(f"{g}: tabulated torus order is {order}; no usable cyclic subgroup")
        return TorusSpec(g, order, None, r, shape, source, condition, case)

    if fam == "PSL" and d == 2:
        if q % 2 == 0:
            return spec(q + 1, 2 * a, "D_2(q+1) in PSL(2,q)", "classical (L), m=d=2", "L")
        odd = (q + 1) // 2 if ((q + 1) // 2) % 2 else (q - 1) // 2
        return spec(odd, 2 * a, "D_(q+-1) in PSL(2,q)", "classical (L), PSL(2,q) q odd", "L",
                    "order = the odd one of (q+1)/2, (q-1)/2")  # fmt: skip
    if fam == "PSp" and d == 2:
        return spec((q**2 + 1) // math.gcd(2, q - 1), 4 * a * math.gcd(2, q), "", "classical, m=d", "Sp")
    if fam == "PSU" and d == 3:
        return spec((q**2 - q + 1) // math.gcd(3, q + 1), 6 * a, "", "classical, m=d", "U")
    if fam == "PSp" and d == 3:
        return spec((q**3 + 1) // math.gcd(2, q + 1), 6 * a, "", "classical, m=d", "Sp")
    if fam == "OmegaOdd" and d == 3:
        return spec(s_prime_part(q**3 + 1, 2), 6 * a, "", "classical, m=d", "O")
    if fam == "PSL":
        order = (q**m - 1) // ((q - 1) * math.gcd(m, q - 1))
        shape = f"(GL(1,q^{m}).{m} x GL({d - m},q)).{a}" if m < d else f"GL(1,q^{m}).{m * a}"
        return spec(order, 2 * a * m, shape, "classical (L)", "L")
    if fam == "PSU":
        order = (q**m + 1) // ((q + 1) * math.gcd(m, q + 1))
        return spec(order, 12 * m * a, "", "classical (U)", "U")
    if fam == "PSp":
        return spec(q**m + 1, 12 * m * a, "", "classical (Sp)", "Sp")
    return spec(s_prime_part(q**m + 1, 2), 12 * m * a, "", "classical (O)", "O")


def _e7_row_condition(q: int) -> str:
    return "q = 2 mod 3" if q % 3 == 2 else "q != 2 mod 3"


def exceptional_torus(g: GroupId) -> list[TorusSpec]:
    if not g.is_exceptional:
        raise CatalogError(f"{g} is not exceptional")
    fam, q, a, p = g.family, g.q, g.a, g.p
    out = out_order(g)

    def row(order, z, shape, source, condition=""):
        if order <= 1:
            raise CatalogError(f"{g}: torus order {order} is trivial; row needs q > 2")
        return TorusSpec(g, order, z, z * out, shape, source, condition)

    if fam in ("2B2", "2G2"):
        k = 2 if fam == "2B2" else 3
        root = math.isqrt(k * q)
        z = 4 if fam == "2B2" else 6
        return [row(q + root + 1, z, f"H.{z}", "exceptional, maximal normalizer", f"q = {k}^(2t+1)"),
                row(q - root + 1, z, f"H.{z}", "exceptional, maximal normalizer", f"q = {k}^(2t+1)")]  # fmt: skip
    if fam == "2F4":
        root = math.isqrt(2 * q)
        base = q * q + q + 1
        return [row(base + root * (q + 1), 12, "H.12", "exceptional, maximal normalizer", "q = 2^(2t+1)"),
                row(base - root * (q + 1), 12, "H.12", "exceptional, maximal normalizer", "q = 2^(2t+1)")]  # fmt: skip
    if fam == "3D4":
        return [row(q**4 - q**2 + 1, 4, "H.4", "exceptional, maximal normalizer")]
    if fam == "F4":
        if p == 2:
            if q == 2:
                raise CatalogError("F4 row for even q needs q > 2")
            return [row(q**4 - q**2 + 1, 12, "H.12", "exceptional, maximal normalizer", "q even, q > 2")]
        return [row(q**4 + 1, 4, "H.4 < 2.Omega_9(q)", "exceptional, non-maximal normalizer", "q odd")]
    if fam == "G2":
        return [row(q * q + q + 1, 6, "H:6 < SL(3,q):2", "exceptional, non-maximal normalizer")]
    if fam == "E6":
        return [row((q * q + q + 1) // math.gcd(3, q - 1), 3, "(3D4(q) x H).3", "exceptional, maximal normalizer")]
    if fam == "2E6":
        if q == 2:
            raise CatalogError("2E6 row needs q > 2")
        return [row((q * q - q + 1) // math.gcd(3, q + 1), 3, "(3D4(q) x H).3", "exceptional, maximal normalizer", "q > 2")]
    if fam == "E7":
        dd = math.gcd(2, q - 1)
        if q % 3 == 2:
            return [row((q - 1) // dd, 2, "(E6(q) x H).2", "exceptional, maximal normalizer", _e7_row_condition(q))]
        return [row((q + 1) // dd, 2, "(2E6(q) x H).2", "exceptional, maximal normalizer", _e7_row_condition(q))]
    return [row((q**4 - 1) * (q**4 - q**3 + q) + 1, 30, "H.30", "exceptional, maximal normalizer")]


def torus_specs(g: GroupId) -> list[TorusSpec]:
    if g.is_classical:
        return [classical_torus(g)]
    if g.is_exceptional:
        return exceptional_torus(g)
    raise CatalogError(f"no torus data for {g}")


class Case(enum.Enum):
    CHARACTERISTIC = "CHARACTERISTIC"
    E7_Y2 = "E7_Y2"
    E7_SMALL2 = "E7_SMALL2"
    G2_3 = "G2_3"
    F4_2 = "F4_2"


@dataclass(frozen=True)
class CaseVerdict:
    case: Case
    torus: TorusSpec
    s: int
    s_part: int
    y2_lower_bound: int | None = None


def _torus_for_prime(g: GroupId, s: int, tori: list[TorusSpec]) -> TorusSpec:
    for t in tori:
        if t.order % s == 0:
            return t
    raise CatalogError(f"{s} divides no torus order of {g}")


def lemma51_case(g: GroupId, s: int) -> CaseVerdict:
    """Outcome of the normalizer lemma for the rows whose torus normalizer is maximal."""
    if not g.is_exceptional or g.family == "G2" or (g.family == "F4" and g.q % 2):
        raise CatalogError(f"{g} has no maximal-normalizer row")
    t = _torus_for_prime(g, s, exceptional_torus(g))
    h_s = s_part(t.order, s)
    if g.family == "E7" and g.q % 2 and s == 2:
        if h_s > 2:
            return CaseVerdict(Case.E7_Y2, t, s, h_s, h_s // 2)
        return CaseVerdict(Case.E7_SMALL2, t, s, h_s)
    return CaseVerdict(Case.CHARACTERISTIC, t, s, h_s)


def lemma52_case(g: GroupId, s: int) -> CaseVerdict:
    """Outcome of the normalizer lemma for the rows whose torus normalizer is not maximal (G2, F4 q odd)."""
    if not (g.family == "G2" or (g.family == "F4" and g.q % 2)):
        raise CatalogError(f"{g} has no non-maximal-normalizer row")
    t = _torus_for_prime(g, s, exceptional_torus(g))
    h_s = s_part(t.order, s)
    q = g.q
    if g.family == "G2" and s == 3 and q % 3 == 1:
        if h_s != 3:
            raise AssertionError(f"(q^2+q+1)_3 = {h_s} != 3 for q = {q}")
        return CaseVerdict(Case.G2_3, t, s, h_s)
    if g.family == "F4" and s == 2:
        if h_s != 2:
            raise AssertionError(f"(q^4+1)_2 = {h_s} != 2 for q = {q}")
        return CaseVerdict(Case.F4_2, t, s, h_s)
    return CaseVerdict(Case.CHARACTERISTIC, t, s, h_s)


# --- census -----------------------------------------------------------------


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class CensusRow:
    group: GroupId
    p: int
    count: int
    provenance: str
    line: int = 0


def _opt_int(text: str, line: int, what: str) -> int | None:
    text = text.strip()
    if not text:
        return None
    try:
        return int(text)
    except ValueError:
        raise CensusError(f"line {line}: {what} {text!r} is not an integer") from None


def group_from_fields(family: str, d_or_degree: int | None, q: int | None) -> GroupId:
    if family == "Alt":
        return GroupId("Alt", degree=d_or_degree, q=q)
    return GroupId(family, d=d_or_degree, q=q)


def parse_census(text: str) -> list[CensusRow]:
    rows = []
    for line_no, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = next(csv.reader([line]))
        if len(fields) != 6:
            raise CensusError(f"line {line_no}: expected 6 fields, got {len(fields)}")
        family, dd, qq, pp, cc, prov = (f.strip() for f in fields)
        if family not in FAMILIES:
            raise CensusError(f"line {line_no}: unknown family {family!r}")
        try:
            g = group_from_fields(family, _opt_int(dd, line_no, "d"), _opt_int(qq, line_no, "q"))
        except CatalogError as exc:
            raise CensusError(f"line {line_no}: {exc}") from None
        p = _opt_int(pp, line_no, "p")
        count = _opt_int(cc, line_no, "count")
        if p is None or not is_prime(p) or group_order(g) % p:
            raise CensusError(f"line {line_no}: p = {pp!r} is not a prime divisor of |{g}|")
        if count is None or count < 1:
            raise CensusError(f"line {line_no}: count must be >= 1")
        if prov not in PROVENANCES:
            raise CensusError(f"line {line_no}: unknown provenance {prov!r}")
        rows.append(CensusRow(g, p, count, prov, line_no))
    return rows


def census_path() -> Path:
    env = os.environ.get(CENSUS_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("ppbound") / "data" / "census.csv"))


def load_census_rows(path=None) -> list[CensusRow]:
    path = census_path() if path is None else path
    if str(path) == "-":
        import sys

        return parse_census(sys.stdin.read())
    return parse_census(Path(path).read_text(encoding="utf-8"))


def load_class_census(path=None) -> dict[tuple[GroupId, int], int]:
    """Map (group, prime) to the number of nontrivial Aut-classes of p-elements."""
    out: dict[tuple[GroupId, int], int] = {}
    for row in load_census_rows(path):
        key = (row.group, row.p)
        if key in out and out[key] != row.count:
            raise CensusError(f"line {row.line}: conflicting count for {row.group}, p={row.p}")
        out[key] = row.count
    return out


def census_format_row(g: GroupId, p: int, count: int, provenance: str) -> str:
    d = g.degree if g.family == "Alt" else g.d
    cells = [g.family, "" if d is None else str(d), "" if g.q is None else str(g.q), str(p), str(count), provenance]
    return ",".join(cells)
