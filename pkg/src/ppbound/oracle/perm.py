"""Permutations as ``bytes`` and permutation groups by breadth-first closure.

A permutation of degree n <= 256 is the byte string of its images
``p[0], ..., p[n-1]``.  Products act on the right: ``mul(x, y)`` applies x
first, then y, and is ``x.translate(table(y))``, so composition runs at C
speed.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

ENUMERATION_CAP = 10**7
MAX_DEGREE = 256

Permutation = bytes


class CapacityError(RuntimeError):
    """Raised instead of enumerating a group beyond the element cap."""


def perm(images) -> Permutation:
    p = bytes(images)
    if sorted(p) != list(range(len(p))):
        raise ValueError("not a permutation")
    return p


def identity(n: int) -> Permutation:
    return bytes(range(n))


def table(p: Permutation) -> bytes:
    return p + bytes(range(len(p), MAX_DEGREE))


def mul(x: Permutation, y: Permutation) -> Permutation:
    return x.translate(table(y))


def inverse(p: Permutation) -> Permutation:
    inv = bytearray(len(p))
    for i, j in enumerate(p):
        inv[j] = i
    return bytes(inv)


def conjugate(x: Permutation, g: Permutation, g_inv: Permutation | None = None) -> Permutation:
    """x^g = g^-1 x g."""
    if g_inv is None:
        g_inv = inverse(g)
    return g_inv.translate(table(x)).translate(table(g))


def power(x: Permutation, k: int) -> Permutation:
    result = identity(len(x))
    base = x
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def order(x: Permutation) -> int:
    return math.lcm(*cycle_type(x)) if x else 1


def cycle_type(x: Permutation) -> tuple[int, ...]:
    """Cycle lengths in decreasing order, fixed points included."""
    seen = bytearray(len(x))
    lengths = []
    for start in range(len(x)):
        if seen[start]:
            continue
        n = 0
        j = start
        while not seen[j]:
            seen[j] = 1
            j = x[j]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def from_cycles(n: int, *cycles) -> Permutation:
    images = list(range(n))
    for cyc in cycles:
        for i, a in enumerate(cyc):
            images[a] = cyc[(i + 1) % len(cyc)]
    return perm(images)


def fmt(p: Permutation) -> str:
    """Cycle notation, fixed points omitted."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


@dataclass
class PermGroup:
    """A permutation group given by generators; elements are materialized on
    first use and cached."""

    degree: int
    generators: tuple[Permutation, ...]
    expected_order: int | None = None
    cap: int = ENUMERATION_CAP
    _elements: frozenset | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if not 1 <= self.degree <= MAX_DEGREE:
            raise ValueError(f"degree must be in 1..{MAX_DEGREE}")
        self.generators = tuple(perm(g) for g in self.generators)
        for g in self.generators:
            if len(g) != self.degree:
                raise ValueError("generator degree mismatch")

    @property
    def elements(self) -> frozenset:
        if self._elements is None:
            self._elements = enumerate_group(self)
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Permutation) -> bool:
        return x in self.elements


def enumerate_group(group: PermGroup) -> frozenset:
    """All elements of ``group`` by breadth-first closure over its generators."""
    if group.expected_order is not None and group.expected_order > group.cap:
        raise CapacityError(f"order {group.expected_order} exceeds the enumeration cap {group.cap}")
    ident = identity(group.degree)
    tables = [table(g) for g in group.generators]
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for t in tables:
            y = x.translate(t)
            if y not in seen:
                seen.add(y)
                if len(seen) > group.cap:
                    raise CapacityError(f"more than {group.cap} elements; enumeration cap reached")
                queue.append(y)
    if group.expected_order is not None and len(seen) != group.expected_order:
        raise AssertionError(f"enumerated {len(seen)} elements, expected {group.expected_order}")
    return frozenset(seen)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    element_order: int


def _orbits_under_conjugation(elements, gens) -> list[list[Permutation]]:
    pairs = [(table(g), table(inverse(g))) for g in gens]
    todo = set(elements)
    orbits = []
    for x in sorted(elements):
        if x not in todo:
            continue
        todo.discard(x)
        orbit = [x]
        queue = [x]
        while queue:
            y = queue.pop()
            ty = table(y)
            for tg, tgi in pairs:
                # g^-1 y g, with g^-1 read off the inverse table
                z = tgi[: len(y)].translate(ty).translate(tg)
                if z in todo:
                    todo.discard(z)
                    orbit.append(z)
                    queue.append(z)
        orbits.append(orbit)
    return orbits


def conjugacy_classes(group: PermGroup) -> list[ConjugacyClass]:
    """Classes sorted by element order, then size, then least representative."""
    classes = [
        ConjugacyClass(min(orbit), len(orbit), order(orbit[0]))
        for orbit in _orbits_under_conjugation(group.elements, group.generators)
    ]
    classes.sort(key=lambda c: (c.element_order, c.size, c.representative))
    return classes


def class_members(group: PermGroup) -> tuple[list[ConjugacyClass], dict[Permutation, int]]:
    """Sorted classes plus the class index of every element."""
    orbits = _orbits_under_conjugation(group.elements, group.generators)
    keyed = sorted(
        ((order(orb[0]), len(orb), min(orb)), orb) for orb in orbits
    )
    classes = []
    index = {}
    for i, ((o, size, rep), orb) in enumerate(keyed):
        classes.append(ConjugacyClass(rep, size, o))
        for x in orb:
            index[x] = i
    return classes, index
