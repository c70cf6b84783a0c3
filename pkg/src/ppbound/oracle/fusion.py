"""Aut(T)-class counts by brute force: conjugacy classes of T, merged along
the outer generators of a permutation model of Aut(T)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from ..catalog import GroupId, TorusSpec, group_order
from ..numtheory import euler_phi, factorize, s_part
from .groups import ALT_ENUMERATED, ALT_SUPPORTED, UnsupportedGroup, realize
from .perm import ConjugacyClass, Permutation, class_members, conjugate, inverse, order, power


@dataclass(frozen=True)
class FusionMap:
    """Conjugacy classes of T and their grouping into Aut(T)-classes."""

    t_classes: tuple[ConjugacyClass, ...]
    aut_orbits: tuple[tuple[int, ...], ...]
    class_of: dict = None  # element -> index into t_classes

    def orbit_of_class(self) -> list[int]:
        out = [0] * len(self.t_classes)
        for k, orbit in enumerate(self.aut_orbits):
            for i in orbit:
                out[i] = k
        return out

    def orbit_order(self, k: int) -> int:
        return self.t_classes[self.aut_orbits[k][0]].element_order


def _find(parent: list[int], i: int) -> int:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


@lru_cache(maxsize=None)
def fusion_map(g: GroupId) -> FusionMap:
    real = realize(g)
    classes, index = class_members(real.group)
    parent = list(range(len(classes)))
    for a in real.outer:
        a_inv = inverse(a)
        for i, c in enumerate(classes):
            j = index[conjugate(c.representative, a, a_inv)]
            ri, rj = _find(parent, i), _find(parent, j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(len(classes)):
        groups.setdefault(_find(parent, i), []).append(i)
    orbits = tuple(sorted(tuple(v) for v in groups.values()))
    return FusionMap(tuple(classes), orbits, index)


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _partitions(n: int, largest: int | None = None):
    """All partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _is_even(cycle_type) -> bool:
    return sum(k - 1 for k in cycle_type) % 2 == 0


@lru_cache(maxsize=None)
def _alt_cycle_type_classes(m: int) -> tuple[tuple[int, ...], ...]:
    """Sym(m)-classes inside Alt(m), one cycle type each."""
    return tuple(ct for ct in _partitions(m) if _is_even(ct))


def aut_class_count(g: GroupId, p: int, include_identity: bool = False) -> int:
    """Number of Aut(T)-classes of elements of p-power order in T."""
    if g.family == "Alt" and g.degree in ALT_SUPPORTED and g.degree not in ALT_ENUMERATED and g.degree != 6:
        # too large to enumerate; Aut = Sym(m) and its classes are cycle types
        return sum(
            1
            for ct in _alt_cycle_type_classes(g.degree)
            if _is_p_power(math.lcm(*ct), p) and (include_identity or max(ct) > 1)
        )
    fm = fusion_map(g)
    count = 0
    for k in range(len(fm.aut_orbits)):
        o = fm.orbit_order(k)
        if _is_p_power(o, p) and (include_identity or o > 1):
            count += 1
    return count


def m_p_table(g: GroupId, include_identity: bool = False) -> dict[int, int]:
    return {p: aut_class_count(g, p, include_identity) for p in factorize(group_order(g)).primes}


def m_of(g: GroupId) -> tuple[int, int]:
    """(m(T), smallest prime attaining it)."""
    table = m_p_table(g)
    best = max(table.values())
    return best, min(p for p, c in table.items() if c == best)


def _p_power_parts(m: int, p: int, largest: int):
    if m == 0:
        yield ()
        return
    part = largest
    while part >= 1:
        if part <= m:
            for rest in _p_power_parts(m - part, p, part):
                yield (part,) + rest
        part //= p


def alt_p_classes(m: int, p: int, include_identity: bool = False) -> tuple[int, list[tuple[int, ...]]]:
    """Even cycle types of p-power order on m points.

    Every part is a power of p; for p = 2 the number of even parts must be
    even.  For m = 6 the count comes from the oracle, since Alt(6) has an
    exceptional outer automorphism that fuses distinct cycle types.
    """
    if m < 5:
        raise ValueError(f"need m >= 5, got {m}")
    top = 1
    while top * p <= m:
        top *= p
    types = [
        t
        for t in _p_power_parts(m, p, top)
        if sum(1 for k in t if k % 2 == 0) % 2 == 0 and (include_identity or max(t) > 1)
    ]
    if m == 6:
        return aut_class_count(GroupId.alt(6), p, include_identity), types
    return len(types), types


def alt_order_pk_classes(m: int, p: int, k: int) -> int:
    """Even cycle types with all parts powers of p and largest part exactly p^k."""
    if m < 5 or m == 6:
        raise ValueError(f"need m >= 5 and m != 6, got {m}")
    top = p**k
    if top > m:
        return 0
    # states: (points left, parity of number of even parts) -> multiplicity
    states: dict[tuple[int, int], int] = {}
    for c in range(1, m // top + 1):
        key = (m - c * top, (c if top % 2 == 0 else 0) % 2)
        states[key] = states.get(key, 0) + 1
    for i in range(k - 1, 0, -1):
        part = p**i
        nxt: dict[tuple[int, int], int] = {}
        for (rest, par), mult in states.items():
            for c in range(rest // part + 1):
                key = (rest - c * part, (par + (c if part % 2 == 0 else 0)) % 2)
                nxt[key] = nxt.get(key, 0) + mult
        states = nxt
    # the remaining points are fixed; parity must come out even
    return sum(mult for (_, par), mult in states.items() if par == 0)


@dataclass(frozen=True)
class Lemma23Record:
    group: str
    torus_order: int
    s: int
    s_order: int
    phi: int
    r: int
    classes: int
    classes_all: int
    r_divides: int
    holds: bool


def _first_element_of_order(elements, n: int) -> Permutation:
    for x in sorted(elements):
        if order(x) == n:
            return x
    raise LookupError(f"no element of order {n}")


def verify_lemma23(g: GroupId, torus: TorusSpec, s: int) -> Lemma23Record:
    """Measure r = |N:C| for the Sylow s-subgroup S of a torus, and the number
    of Aut(T)-classes met by generators of S."""
    if torus.order % s:
        raise ValueError(f"{s} does not divide the torus order {torus.order}")
    real = realize(g)
    try:
        h = _first_element_of_order(real.group.elements, torus.order)
    except LookupError:
        raise LookupError(f"{g}: no element of torus order {torus.order}; catalog or model bug") from None
    s_order = s_part(torus.order, s)
    x = power(h, torus.order // s_order)
    cyclic = {power(x, k) for k in range(s_order)}
    x_inv_free = [a for a in real.aut_group().elements]
    n_count = c_count = 0
    for a in x_inv_free:
        y = conjugate(x, a)
        if y in cyclic:
            n_count += 1
            if y == x:
                c_count += 1
    r = n_count // c_count
    fm = fusion_map(g)
    orbit_of = fm.orbit_of_class()
    met = {orbit_of[fm.class_of[power(x, k)]] for k in range(1, s_order) if math.gcd(k, s_order) == 1}
    classes_all = sum(1 for k in range(len(fm.aut_orbits)) if fm.orbit_order(k) == s_order)
    phi = euler_phi(s_order)
    holds = len(met) * r == phi and torus.r_divides % r == 0
    return Lemma23Record(str(g), torus.order, s, s_order, phi, r, len(met), classes_all, torus.r_divides, holds)


@dataclass(frozen=True)
class UnipotentCount:
    group: str
    p: int
    d: int
    count: int

    @property
    def holds(self) -> bool:
        return self.count >= self.d


def unipotent_class_count(g: GroupId) -> UnipotentCount:
    """Aut-classes of p-elements in characteristic p, identity included."""
    if g.family != "PSL":
        raise UnsupportedGroup(f"unipotent count only modelled for PSL, not {g}")
    realize(g)
    return UnipotentCount(str(g), g.p, g.d, aut_class_count(g, g.p, include_identity=True))
