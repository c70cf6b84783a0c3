"""Small finite fields GF(p^a) with table-driven arithmetic.

Elements are the integers 0..q-1; an element is the base-p digit vector of
its polynomial coefficients (lowest degree first) modulo a primitive
polynomial found by exhaustive search.  Only meant for q in the low hundreds.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def _digits(n: int, p: int, a: int) -> list[int]:
    out = []
    for _ in range(a):
        n, r = divmod(n, p)
        out.append(r)
    return out


def _undigits(ds, p: int) -> int:
    n = 0
    for d in reversed(ds):
        n = n * p + d
    return n


def _times_x(vec: list[int], modulus: list[int], p: int) -> list[int]:
    # modulus is the monic polynomial minus its leading term, low degree first
    top = vec[-1]
    shifted = [0] + vec[:-1]
    return [(c - top * m) % p for c, m in zip(shifted, modulus)]


def _primitive_modulus(p: int, a: int) -> list[int]:
    q = p**a
    for tail in product(range(p), repeat=a):
        modulus = list(tail)
        if modulus[0] == 0:
            continue
        vec = [0] * a
        vec[0] = 1
        order = 0
        while True:
            vec = _times_x(vec, modulus, p) if a > 1 else [(vec[0] * -modulus[0]) % p]
            order += 1
            if vec == [1] + [0] * (a - 1):
                break
            if order > q:
                break
        if order == q - 1:
            return modulus
    raise ValueError(f"no primitive polynomial of degree {a} over GF({p})")


class GF:
    """The field with q = p**a elements."""

    def __init__(self, p: int, a: int = 1):
        if p < 2 or a < 1:
            raise ValueError("need a prime p and a >= 1")
        self.p = p
        self.a = a
        self.q = q = p**a
        modulus = _primitive_modulus(p, a)
        exp = [0] * (q - 1)
        log = [0] * q
        vec = [1] + [0] * (a - 1)
        for i in range(q - 1):
            e = _undigits(vec, p)
            exp[i] = e
            log[e] = i
            vec = _times_x(vec, modulus, p) if a > 1 else [(vec[0] * -modulus[0]) % p]
        self._exp = exp
        self._log = log
        self._add = [
            [_undigits([(x + y) % p for x, y in zip(_digits(u, p, a), _digits(v, p, a))], p) for v in range(q)]
            for u in range(q)
        ]
        self._neg = [_undigits([(-x) % p for x in _digits(u, p, a)], p) for u in range(q)]
        self.primitive = exp[1] if q > 2 else 1

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def add(self, u: int, v: int) -> int:
        return self._add[u][v]

    def neg(self, u: int) -> int:
        return self._neg[u]

    def sub(self, u: int, v: int) -> int:
        return self._add[u][self._neg[v]]

    def mul(self, u: int, v: int) -> int:
        if u == 0 or v == 0:
            return 0
        return self._exp[(self._log[u] + self._log[v]) % (self.q - 1)]

    def inv(self, u: int) -> int:
        if u == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(-self._log[u]) % (self.q - 1)]

    def pow(self, u: int, k: int) -> int:
        if u == 0:
            return 0 if k > 0 else 1
        return self._exp[(self._log[u] * k) % (self.q - 1)]

    def frobenius(self, u: int) -> int:
        return self.pow(u, self.p)

    def elements(self) -> range:
        return range(self.q)


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    from .numtheory import prime_power

    p, a = prime_power(q)
    return GF(p, a)
