"""Explicit order-bound functions, exact where the value is an integer and in
natural-log space otherwise.

All real arithmetic runs through mpmath at ``WORK_DPS`` decimal digits, which
keeps at least 30 significant digits in every reported ln value.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .numtheory import is_prime

WORK_DPS = 40
REL_TOL = mpmath.mpf("1e-25")

MONSTER_FACTORS = (
    (2, 46), (3, 20), (5, 9), (7, 6), (11, 2), (13, 3), (17, 1), (19, 1),
    (23, 1), (29, 1), (31, 1), (41, 1), (47, 1), (59, 1), (71, 1),
)  # fmt: skip

# |T| <= q^248 for every exceptional group of Lie type (dim E8 = 248)
EXCEPTIONAL_EXPONENT = 248


def _hp(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        with mpmath.workdps(WORK_DPS):
            return func(*args, **kwargs)

    return wrapper


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class LogMagnitude:
    """A positive quantity held as its natural log, plus the integer itself
    when that is known exactly."""

    ln_value: mpmath.mpf
    exact: int | None = None

    @classmethod
    @_hp
    def from_int(cls, n: int) -> "LogMagnitude":
        if n < 1:
            raise ValueError("magnitude must be positive")
        return cls(mpmath.log(mpmath.mpf(n)), n)

    def __eq__(self, other):
        if not isinstance(other, LogMagnitude):
            return NotImplemented
        if self.exact is not None and other.exact is not None:
            return self.exact == other.exact
        return self.ln_value == other.ln_value

    def __lt__(self, other):
        if not isinstance(other, LogMagnitude):
            return NotImplemented
        if self.exact is not None and other.exact is not None:
            return self.exact < other.exact
        return self.ln_value < other.ln_value

    def __repr__(self):
        return f"LogMagnitude({self.render()})"

    def __hash__(self):
        return hash((self.exact, str(self.ln_value)))

    @_hp
    def relative_error(self) -> mpmath.mpf | None:
        if self.exact is None:
            return None
        return abs(self.ln_value - mpmath.log(mpmath.mpf(self.exact))) / self.ln_value

    def render(self, max_digits: int = 10_000, shown: int = 12) -> str:
        """Exact decimal when short enough, else ``exp(X)``."""
        # compare against 10^max_digits rather than str(), which is length-capped
        if self.exact is not None and self.exact < 10**max_digits:
            return str(self.exact)
        return f"exp({mpmath.nstr(self.ln_value, shown)})"


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def c2(n: int) -> int:
    """(2n)! * n!"""
    _check_n(n)
    return math.factorial(2 * n) * math.factorial(n)


@_hp
def c3_log(n: int) -> LogMagnitude:
    c = mpmath.mpf(c2(n))
    return LogMagnitude(mpmath.log(2) + 2 * mpmath.sqrt(c) * mpmath.log(c))


@_hp
def g_log(n: int) -> LogMagnitude:
    """Classical-family bound: n^2 * 2 sqrt(c2) * log(2 c2)."""
    c = mpmath.mpf(c2(n))
    return LogMagnitude(n * n * 2 * mpmath.sqrt(c) * mpmath.log(2 * c))


def f_alt(n: int) -> int:
    """(3n+2)!/2, the alternating-group bound."""
    _check_n(n)
    return math.factorial(3 * n + 2) // 2


def alt_exp_bound(mexp: int) -> int:
    """(3 mexp^2)!/2."""
    _check_n(mexp)
    return math.factorial(3 * mexp * mexp) // 2


@_hp
def exceptional_constant() -> mpmath.mpf:
    """C with C q^(1/4) <= q / a^(3/2), from (log 2 / 2) sqrt(q) <= q/a."""
    return (mpmath.log(2) / 2) ** mpmath.mpf(1.5)


@_hp
def exceptional_case_bounds(n: int) -> dict[str, mpmath.mpf]:
    """Right-hand sides B(n) of q / a^(3/2) <= B(n) for the three cases."""
    _check_n(n)
    nf = mpmath.mpf(math.factorial(n))
    return {
        "a(i)": 480 * n * mpmath.sqrt(360 * nf),
        # (q-1)/a^(3/2) <= 64 n sqrt(4 n!) gives q/a^(3/2) <= that + 1
        "a(ii)": 64 * n * mpmath.sqrt(4 * nf) + 1,
        # q <= 2 sqrt(12 a n!) (24 a n) = a^(3/2) * 48 n sqrt(12 n!)
        "b": 48 * n * mpmath.sqrt(12 * nf),
    }


@_hp
def exceptional_log_q_max(n: int) -> dict[str, mpmath.mpf]:
    """log of the largest admissible q per case: q^(1/4) <= B(n)/C."""
    lc = mpmath.log(exceptional_constant())
    return {k: 4 * (mpmath.log(b) - lc) for k, b in exceptional_case_bounds(n).items()}


@_hp
def h_exceptional_log(n: int) -> LogMagnitude:
    return LogMagnitude(EXCEPTIONAL_EXPONENT * max(exceptional_log_q_max(n).values()))


@functools.lru_cache(maxsize=1)
def monster_order() -> int:
    return math.prod(p**e for p, e in MONSTER_FACTORS)


@_hp
@_hp
def log_add(x: LogMagnitude, y: LogMagnitude) -> LogMagnitude:
    if x < y:
        x, y = y, x
    ln = x.ln_value + mpmath.log1p(mpmath.exp(y.ln_value - x.ln_value))
    exact = x.exact + y.exact if x.exact is not None and y.exact is not None else None
    if exact is not None:
        ln = mpmath.log(mpmath.mpf(exact))
    return LogMagnitude(ln, exact)


@_hp
def f_final_log(n: int) -> LogMagnitude:
    """log of max{(3n+2)!/2, g(n), h(n)} + |M|."""
    branches = [LogMagnitude.from_int(f_alt(n)), g_log(n), h_exceptional_log(n)]
    return log_add(max(branches), LogMagnitude.from_int(monster_order()))


def _as_mpf(a) -> mpmath.mpf:
    if isinstance(a, Fraction):
        return mpmath.mpf(a.numerator) / a.denominator
    if isinstance(a, str):
        f = Fraction(a)
        return mpmath.mpf(f.numerator) / f.denominator
    return mpmath.mpf(a)


@_hp
def lemma24_margin(a) -> mpmath.mpf:
    """sqrt(a)/log(a) - a^(1/4)/4; +inf at the limit point a = 1."""
    x = _as_mpf(a)
    if x < 1:
        raise ValueError("need a >= 1")
    if x == 1:
        return mpmath.inf
    return mpmath.sqrt(x) / mpmath.log(x) - mpmath.root(x, 4) / 4


def check_lemma24(a) -> bool:
    return bool(lemma24_margin(a) > 0)


@_hp
def lemma25_margin(p: int, a: int) -> mpmath.mpf:
    """log(q/a) - log(log(2) sqrt(q) / 2) for q = p^a, computed in log space."""
    if p < 2 or a < 1:
        raise ValueError("need p >= 2 and a >= 1")
    log_q = a * mpmath.log(p)
    return (log_q - mpmath.log(a)) - (mpmath.log(mpmath.log(2) / 2) + log_q / 2)


def check_lemma25(p: int, a: int) -> bool:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    return bool(lemma25_margin(p, a) >= 0)
