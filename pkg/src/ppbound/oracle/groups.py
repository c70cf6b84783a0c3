"""Concrete permutation realizations of the small simple groups the oracle
supports, each with extra generators that extend it to Aut(T)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from ..catalog import GroupId, group_order
from ..fields import GF, field
from ..numtheory import prime_powers_upto
from .perm import PermGroup, Permutation, from_cycles, perm

PSL2_MAX_Q = 32
ALT_ENUMERATED = range(5, 10)
ALT_SUPPORTED = range(5, 13)


class UnsupportedGroup(LookupError):
    """The oracle has no model of this group; use census data instead."""


@dataclass(frozen=True)
class Realization:
    """T as a permutation group plus ``outer`` generators normalizing T so
    that T and outer together generate Aut(T)."""

    id: GroupId
    group: PermGroup
    outer: tuple[Permutation, ...]
    model: str

    def aut_group(self) -> PermGroup:
        return PermGroup(self.group.degree, self.group.generators + self.outer)


def alternating(m: int) -> tuple[PermGroup, tuple[Permutation, ...]]:
    cyc = tuple(range(m)) if m % 2 else tuple(range(1, m))
    gens = (from_cycles(m, (0, 1, 2)), from_cycles(m, cyc))
    return PermGroup(m, gens), (from_cycles(m, (0, 1)),)


def _mobius(F: GF, a: int, b: int, c: int, d: int) -> Permutation:
    """x -> (ax+b)/(cx+d) on the projective line; point q is infinity."""
    inf = F.q
    images = []
    for x in range(F.q + 1):
        if x == inf:
            num, den = a, c
        else:
            num, den = F.add(F.mul(a, x), b), F.add(F.mul(c, x), d)
        images.append(inf if den == 0 else F.mul(num, F.inv(den)))
    return perm(images)


def _frobenius_line(F: GF) -> Permutation:
    return perm([F.frobenius(x) for x in range(F.q)] + [F.q])


def psl2(q: int) -> tuple[PermGroup, tuple[Permutation, ...]]:
    """PSL(2,q) on the q+1 points of the projective line, with PGL and field
    automorphisms as the outer generators (together: PGammaL(2,q))."""
    F = field(q)
    w = F.primitive
    gens = (
        _mobius(F, 1, 1, 0, 1),
        _mobius(F, w, 0, 0, F.inv(w)),
        _mobius(F, 0, F.neg(1), 1, 0),
    )
    outer = (_mobius(F, w, 0, 0, 1), _frobenius_line(F))
    return PermGroup(q + 1, gens), outer


def _projective_points(F: GF, n: int) -> list[tuple[int, ...]]:
    pts = []
    for v in product(range(F.q), repeat=n):
        lead = next((c for c in v if c), None)
        if lead == 1:
            pts.append(v)
    return sorted(pts)


def _normalize(F: GF, v) -> tuple[int, ...]:
    lead = next(c for c in v if c)
    inv = F.inv(lead)
    return tuple(F.mul(inv, c) for c in v)


def _apply(F: GF, mat, v) -> tuple[int, ...]:
    out = []
    for row in mat:
        s = 0
        for m_ij, v_j in zip(row, v):
            s = F.add(s, F.mul(m_ij, v_j))
        out.append(s)
    return tuple(out)


def psl3_prime(q: int) -> tuple[PermGroup, tuple[Permutation, ...]]:
    """PSL(3,q), q prime, on points followed by lines of PG(2,q).

    A matrix A moves points by A and lines by A^-T; the outer generator swaps
    each point with the line of the same coordinates, which conjugates A to
    A^-T (the graph automorphism).  Requires gcd(3, q-1) = 1 so that
    PGL = PSL and there is no field automorphism.
    """
    if q not in (2, 3):
        raise UnsupportedGroup(f"PSL(3,{q}) is not modelled")
    F = field(q)
    pts = _projective_points(F, 3)
    idx = {v: i for i, v in enumerate(pts)}
    n = len(pts)
    gens = []
    for i, j in product(range(3), repeat=2):
        if i == j:
            continue
        a = [[int(r == c) for c in range(3)] for r in range(3)]
        a[i][j] = 1
        # (I + e_ij)^-T = I - e_ji
        b = [[int(r == c) for c in range(3)] for r in range(3)]
        b[j][i] = F.neg(1)
        on_points = [idx[_normalize(F, _apply(F, a, v))] for v in pts]
        on_lines = [n + idx[_normalize(F, _apply(F, b, v))] for v in pts]
        gens.append(perm(on_points + on_lines))
    swap = perm([n + i for i in range(n)] + list(range(n)))
    return PermGroup(2 * n, tuple(gens)), (swap,)


def suzuki8() -> tuple[PermGroup, tuple[Permutation, ...]]:
    """2B2(8) on the 65 points of the Tits ovoid in PG(3,8).

    Ovoid: (0,0,0,1) and (1,x,y,z) with z = xy + x^(s+2) + y^s, s: x -> x^4.
    Generators: two translations fixing (0,0,0,1), a diagonal element and the
    anti-diagonal involution.  Outer generator: the Frobenius x -> x^2.
    """
    F = field(8)

    def sig(x):
        return F.pow(x, 4)

    def zeta(x, y):
        return F.add(F.add(F.mul(x, y), F.mul(F.mul(x, x), sig(x))), sig(y))

    pts = [(0, 0, 0, 1)] + [(1, x, y, zeta(x, y)) for x in range(8) for y in range(8)]
    idx = {v: i for i, v in enumerate(pts)}

    def act(mat) -> Permutation:
        return perm([idx[_normalize(F, _apply(F, mat, v))] for v in pts])

    def translation(a, b):
        c = F.add(F.add(F.mul(a, b), F.mul(F.mul(a, a), sig(a))), sig(b))
        return [[1, 0, 0, 0], [a, 1, 0, 0], [b, sig(a), 1, 0], [c, F.add(b, F.mul(a, sig(a))), a, 1]]

    k = F.primitive
    ks = F.mul(k, sig(k))
    diag = [[1, 0, 0, 0], [0, k, 0, 0], [0, 0, ks, 0], [0, 0, 0, F.mul(k, ks)]]
    anti = [[int(r + c == 3) for c in range(4)] for r in range(4)]
    gens = (act(translation(1, 0)), act(translation(0, 1)), act(diag), act(anti))
    frob = perm([idx[tuple(F.frobenius(c) for c in v)] for v in pts])
    return PermGroup(len(pts), gens), (frob,)


def is_supported(g: GroupId) -> bool:
    try:
        realize(g)
    except UnsupportedGroup:
        return False
    return True


@lru_cache(maxsize=None)
def realize(g: GroupId) -> Realization:
    """Permutation model of T with Aut(T) generators; raises UnsupportedGroup."""
    if g.family == "Alt" and g.degree == 6:
        group, outer = psl2(9)
        model = "Alt(6) as PSL(2,9) in PGammaL(2,9)"
    elif g.family == "Alt" and g.degree in ALT_ENUMERATED:
        group, outer = alternating(g.degree)
        model = f"Alt({g.degree}) in Sym({g.degree})"
    elif g.family == "PSL" and g.d == 2 and g.q <= PSL2_MAX_Q:
        group, outer = psl2(g.q)
        model = f"PSL(2,{g.q}) in PGammaL(2,{g.q}) on the projective line"
    elif g.family == "PSL" and g.d == 3 and g.q in (2, 3):
        group, outer = psl3_prime(g.q)
        model = f"PSL(3,{g.q}).2 on points and lines"
    elif g.family == "2B2" and g.q == 8:
        group, outer = suzuki8()
        model = "2B2(8):3 on the Tits ovoid"
    else:
        raise UnsupportedGroup(f"no permutation model for {g}")
    group.expected_order = group_order(g)
    return Realization(g, group, outer, model)


def supported_ids() -> list[GroupId]:
    """Every group the oracle can answer for, in a fixed order."""
    ids = [GroupId.alt(m) for m in ALT_SUPPORTED]
    ids += [GroupId("PSL", 2, q) for q in prime_powers_upto(PSL2_MAX_Q, 4)]
    ids += [GroupId("PSL", 3, 2), GroupId("PSL", 3, 3), GroupId("2B2", q=8)]
    return ids

