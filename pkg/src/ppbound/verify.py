"""Named property suites: each binds one lemma or inequality chain to a
parameter sweep and returns a report of exact checks with margins.

Reports serialize to json, csv or text.  Serialized output excludes the
run timestamps, so identical grids give byte-identical output and the same
canonical hash.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import mpmath

from . import __version__, bounds
from .catalog import (
    CLASSICAL,
    CatalogError,
    GroupId,
    TorusSpec,
    census_path,
    choose_m,
    classical_torus,
    exceptional_torus,
    group_order,
    lemma51_case,
    lemma52_case,
    load_census_rows,
    out_order,
)
from .numtheory import (
    SIEVE_LIMIT,
    divisor_count,
    euler_phi,
    factorize,
    factorize_qm_minus_1,
    find_interval_prime,
    min_t,
    ppd_set,
    prime_powers_upto,
    primes_upto,
    s_part,
)
from .oracle import fusion
from .oracle.groups import PSL2_MAX_Q, supported_ids

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"
FORMATS = ("json", "csv", "text")


class VerifyError(ValueError):
    """Unknown suite, unknown grid key, or a grid beyond its cap."""


@dataclass(frozen=True)
class Check:
    name: str
    inputs: dict
    expected: str
    actual: str
    status: str
    margin: str | None = None
    source: str = "exact"

    @property
    def passed(self) -> bool | None:
        return None if self.status == SKIP else self.status == PASS

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "inputs": self.inputs,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
            "status": self.status,
            "margin": self.margin,
            "source": self.source,
        }


@dataclass
class SuiteReport:
    suite: str
    params: dict
    checks: list[Check] = field(default_factory=list)
    started: str = ""
    finished: str = ""
    version: str = __version__

    @property
    def overall(self) -> str:
        return FAIL if any(c.status == FAIL for c in self.checks) else PASS

    def count(self, status: str) -> int:
        return sum(1 for c in self.checks if c.status == status)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def canonical(self) -> dict:
        return {
            "suite": self.suite,
            "version": self.version,
            "params": self.params,
            "checks": [c.as_dict() for c in self.checks],
        }

    @property
    def canonical_hash(self) -> str:
        blob = json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def _fmt(x) -> str:
    if isinstance(x, mpmath.mpf):
        if mpmath.isinf(x):
            return "inf" if x > 0 else "-inf"
        return mpmath.nstr(x, 30)
    return str(x)


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _le(name, inputs, lhs, rhs, source="exact", lhs_text="", rhs_text="") -> Check:
    """lhs <= rhs; margin rhs - lhs (exact for ints, 30 digits for reals)."""
    with mpmath.workdps(bounds.WORK_DPS):
        margin = rhs - lhs
        return Check(name, inputs, f"{lhs_text or 'lhs'} <= {rhs_text or _fmt(rhs)}",
                     _fmt(lhs), _status(lhs <= rhs), _fmt(margin), source)  # fmt: skip


def _lt(name, inputs, lhs, rhs, source="exact", rhs_text="") -> Check:
    with mpmath.workdps(bounds.WORK_DPS):
        return Check(name, inputs, f"< {rhs_text or _fmt(rhs)}", _fmt(lhs), _status(lhs < rhs), _fmt(rhs - lhs), source)


def _divides(name, inputs, a, b, source="exact", a_text="", b_text="") -> Check:
    return Check(name, inputs, f"{a_text or a} | {b_text or b}", f"{b} mod {a} = {b % a}", _status(b % a == 0), None, source)


def _eq(name, inputs, expected, actual, source="exact") -> Check:
    return Check(name, inputs, str(expected), str(actual), _status(expected == actual), None, source)


def _true(name, inputs, ok: bool, expected: str, actual: str, source="exact") -> Check:
    return Check(name, inputs, expected, actual, _status(ok), None, source)


def _skip(name, inputs, reason: str, source="") -> Check:
    return Check(name, inputs, "n/a", f"SKIP: {reason}", SKIP, None, source)


def _gid(g: GroupId) -> str:
    return str(g)


# --- L21: divisibility facts about S(m) and Prod(m,q) -------------------------


def _suite_l21(max_m: int, max_q: int) -> list[Check]:
    checks = []
    qs = prime_powers_upto(max_q)
    for m in range(1, max_m + 1):
        for q in qs:
            ppd = ppd_set(m, q)
            n = q**m - 1
            for s in factorize_qm_minus_1(q, m).primes:
                inp = {"part": "i", "m": m, "q": q, "s": s}
                t = min_t(s, m, q)
                checks.append(_divides("i: min_t divides m", inp, t, m, a_text=f"t={t}", b_text=f"m={m}"))
                checks.append(_eq("i: s in S(m) iff min_t = m", inp, t == m, s in ppd.primes))
            inp = {"part": "def", "m": m, "q": q}
            checks.append(_eq("def: Prod = product of s-parts", inp, math.prod(ppd.s_parts.values()), ppd.prod))
            checks.append(_divides("def: Prod divides q^m-1", inp, ppd.prod, n, b_text="q^m-1"))
    for q in qs:
        inp = {"part": "ii", "q": q}
        checks.append(_divides("ii: q+1 divides Prod(2,q)", inp, q + 1, ppd_set(2, q).prod))
        checks.append(_divides("ii: q^2+1 divides Prod(4,q)", inp, q * q + 1, ppd_set(4, q).prod))
    for m in range(3, max_m + 1, 2):
        for q in qs:
            inp = {"part": "iii", "m": m, "q": q}
            s2m = ppd_set(2 * m, q)
            checks.append(_true("iii: 2 not in S(2m)", inp, 2 not in s2m.primes, "2 not in S(2m)", str(list(s2m.primes))))
            checks.append(_divides("iii: Prod(2m,q) divides q^m+1", inp, s2m.prod, q**m + 1, b_text=f"q^m+1={q**m + 1}"))
    for m in (p for p in primes_upto(max_m) if p > 2):
        for q in qs:
            inp = {"part": "iv", "m": m, "q": q}
            sm, s2m = ppd_set(m, q), ppd_set(2 * m, q)
            hit = [s for s in sm.primes if (q - 1) % s == 0]
            checks.append(_true("iv(1): s in S(m), s | q-1 implies s = m", inp, all(s == m for s in hit),
                                f"subset of [{m}]", str(hit)))  # fmt: skip
            hit2 = [s for s in s2m.primes if (q * q - 1) % s == 0]
            ok = all(s == m and (q + 1) % m == 0 for s in hit2)
            checks.append(_true("iv(1): s in S(2m), s | q^2-1 implies s = m | q+1", inp, ok, f"subset of [{m}], m | q+1", str(hit2)))
            checks.append(_divides("iv(2): (q^m-1)/(q-1) divides Prod(m,q)", inp, (q**m - 1) // (q - 1), sm.prod))
            checks.append(_divides("iv(3): (q^m+1)/(q+1) divides Prod(2m,q)", inp, (q**m + 1) // (q + 1), s2m.prod))
    return checks


# --- L23: Aut-classes of elements of order |S| ---------------------------------


def _l23_targets(max_q: int, extras: bool) -> list[tuple[GroupId, TorusSpec]]:
    out = [(g, classical_torus(g)) for g in (GroupId("PSL", 2, q) for q in prime_powers_upto(max_q, 4))]
    if extras:
        for g in (GroupId("PSL", 3, 2), GroupId("PSL", 3, 3)):
            out.append((g, classical_torus(g)))
        sz = GroupId("2B2", q=8)
        out += [(sz, t) for t in exceptional_torus(sz)]
    return out


def _suite_l23(max_q: int, extras: bool) -> list[Check]:
    checks = []
    for g, torus in _l23_targets(max_q, extras):
        for s in factorize(torus.order).primes:
            rec = fusion.verify_lemma23(g, torus, s)
            inp = {"group": _gid(g), "torus": torus.order, "s": s, "S": rec.s_order}
            checks.append(_eq("classes * r = phi(|S|)", inp, rec.phi, rec.classes * rec.r, "oracle"))
            checks.append(_divides("measured r divides catalog bound", inp, rec.r, torus.r_divides, "oracle",
                                   a_text=f"r={rec.r}", b_text=f"{torus.r_divides}"))  # fmt: skip
            checks.append(_eq("every element of order |S| meets S", inp, rec.classes_all, rec.classes, "oracle"))
    return checks


# --- L24 / L25: real inequalities --------------------------------------------


def _suite_l24(points: int, max_a: int) -> list[Check]:
    checks = []
    with mpmath.workdps(bounds.WORK_DPS):
        top = mpmath.log10(max_a)
        for k in range(points):
            a = mpmath.power(10, top * k / (points - 1)) if points > 1 else mpmath.mpf(1)
            margin = bounds.lemma24_margin(a)
            inp = {"k": k, "a": mpmath.nstr(a, 20)}
            limit = mpmath.isinf(margin)
            checks.append(Check("a^(1/4)/4 < sqrt(a)/log(a)", inp, "margin > 0" + (" (limit point a = 1)" if limit else ""),
                                "limit" if limit else "ok", _status(margin > 0), _fmt(margin), "log-space"))  # fmt: skip
    return checks


def _suite_l25(max_p: int, max_a: int) -> list[Check]:
    checks = []
    for p in primes_upto(max_p):
        for a in range(1, max_a + 1):
            margin = bounds.lemma25_margin(p, a)
            checks.append(Check("log(2) sqrt(q)/2 <= q/a", {"p": p, "a": a}, "log margin >= 0", "ok" if margin >= 0 else "violated",
                                _status(margin >= 0), _fmt(margin), "log-space"))  # fmt: skip
    return checks


# --- L31: alternating groups --------------------------------------------------


def _suite_l31(min_m: int, max_m: int) -> list[Check]:
    checks = []
    for m in range(min_m, max_m + 1):
        g = GroupId.alt(m)
        n, wit = fusion.m_of(g)
        inp = {"group": _gid(g), "n": n, "witness": wit}
        checks.append(_le("|T| <= (3n+2)!/2", inp, group_order(g), bounds.f_alt(n), "oracle",
                          lhs_text=f"|T|={group_order(g)}", rhs_text=f"(3n+2)!/2={bounds.f_alt(n)}"))  # fmt: skip
        if m == 6:
            checks.append(_eq("m_2(Alt(6)) = 2", inp, 2, fusion.aut_class_count(g, 2), "oracle"))
            checks.append(_le("n >= 2", inp, 2, n, "oracle", lhs_text="2", rhs_text="n"))
        else:
            checks.append(_eq("classes of order 3 = floor(m/3)", inp, m // 3, fusion.alt_order_pk_classes(m, 3, 1), "oracle"))
            checks.append(_le("m <= 3n+2", inp, m, 3 * n + 2, "oracle", lhs_text="m"))
    return checks


# --- R32: interval primes and elements of order p^2 ---------------------------


def _order_p2_count(m: int, p: int) -> int:
    """Cycle types (p odd): one or more p^2-cycles, any number of p-cycles."""
    return sum((m - c * p * p) // p + 1 for c in range(1, m // (p * p) + 1))


def _suite_r32(max_m: int, samples: int) -> list[Check]:
    checks = []
    ranges: dict[int, list[int]] = {}  # p -> [first m, last m, min count, bad bracket count]
    misses = []
    for m in range(28, max_m + 1):
        p = find_interval_prime(m)
        if p is None:
            misses.append(m)
            continue
        cnt = _order_p2_count(m, p)
        r = ranges.get(p)
        bad = int(not (2 * p * p <= m < 3 * p * p))
        if r is None:
            ranges[p] = [m, m, cnt, bad]
        else:
            r[1] = m
            r[2] = min(r[2], cnt)
            r[3] += bad
    for p, (lo, hi, cnt, bad) in sorted(ranges.items()):
        inp = {"p": p, "m_first": lo, "m_last": hi}
        checks.append(_eq("2p^2 <= m < 3p^2 on every hit", inp, 0, bad))
        checks.append(_true("p > 3", inp, p > 3, "p > 3", str(p)))
        checks.append(_true("exp(T)_p = p^2 (p^3 > m)", inp, p**3 > hi, f"p^3 > {hi}", str(p**3)))
        checks.append(_le("p <= classes of order p^2 (min over range)", inp, p, cnt, lhs_text="p", rhs_text="count"))
        for m in sorted({lo, hi}):
            dp = fusion.alt_order_pk_classes(m, p, 2)
            checks.append(_eq("partition count agrees with closed form", {"p": p, "m": m}, _order_p2_count(m, p), dp))
    # |Alt(m)| <= (3 mexp^2)!/2 at evenly spaced hits, in log space
    hits = [(lo, p) for p, (lo, _, _, _) in sorted(ranges.items())]
    step = max(1, len(hits) // samples) if samples else len(hits) + 1
    with mpmath.workdps(bounds.WORK_DPS):
        for lo, p in hits[::step]:
            mexp = _order_p2_count(lo, p)
            lhs = mpmath.loggamma(lo + 1) - mpmath.log(2)
            rhs = mpmath.loggamma(3 * mexp * mexp + 1) - mpmath.log(2)
            checks.append(_le("log|Alt(m)| <= log((3 mexp^2)!/2)", {"m": lo, "p": p, "mexp_lower": mexp}, lhs, rhs,
                              "log-space", lhs_text="log|T|"))  # fmt: skip
    gap_start, gap_len, run_start, prev = 0, 0, None, None
    for m in misses:
        if prev is None or m != prev + 1:
            run_start = m
        prev = m
        if m - run_start + 1 > gap_len:
            gap_start, gap_len = run_start, m - run_start + 1
    last = misses[-1] if misses else None
    inp = {"m_min": 28, "m_max": max_m}
    checks.append(_true("largest run without an interval prime (reported, no universal claim)", inp, True,
                        "reported", f"start={gap_start}, length={gap_len}"))  # fmt: skip
    checks.append(_true("last m without an interval prime (reported)", inp, True, "reported", str(last)))
    return checks


# --- L41: unipotent classes ---------------------------------------------------


def _classical_oracle_ids(max_q: int) -> list[GroupId]:
    ids = [GroupId("PSL", 2, q) for q in prime_powers_upto(max_q, 4)]
    return ids + [GroupId("PSL", 3, 2), GroupId("PSL", 3, 3)]


def _suite_l41(max_q: int) -> list[Check]:
    checks = []
    for g in _classical_oracle_ids(max_q):
        rec = fusion.unipotent_class_count(g)
        checks.append(_le("unipotent Aut-classes (identity included) >= d", {"group": _gid(g), "p": rec.p}, rec.d, rec.count,
                          "oracle", lhs_text=f"d={rec.d}", rhs_text="count"))  # fmt: skip
    return checks


# --- P42: the classical chain -------------------------------------------------


def _suite_p42(max_q: int) -> list[Check]:
    checks = []
    for g in _classical_oracle_ids(max_q):
        n, _ = fusion.m_of(g)
        q, a, d = g.q, g.a, g.d
        m = choose_m(d)
        torus = classical_torus(g)
        ca = bounds.c2(n) * a
        base = {"group": _gid(g), "n": n, "m": m, "torus": torus.order}
        odd_psl2 = d == 2 and q % 2 == 1
        primes = factorize(torus.order).primes if odd_psl2 else ppd_set(m, q).primes
        fm = fusion.fusion_map(g)
        orders = {c.element_order for c in fm.t_classes}
        for s in primes:
            size = s_part(torus.order, s)
            inp = dict(base, s=s, S=size)
            phi = euler_phi(size)
            checks.append(_divides("phi(|S|) divides c2(n) a", inp, phi, ca, "oracle", b_text=f"c2(n)a={ca}"))
            checks.append(_le("|S| <= 2 c2(n) a", inp, size, 2 * ca, "oracle", lhs_text="|S|"))
            n_classes = sum(1 for k in range(len(fm.aut_orbits)) if fm.orbit_order(k) == size)
            checks.append(_le("Aut-classes of order |S| <= n", inp, n_classes, n, "oracle", lhs_text="classes", rhs_text="n"))
            checks.append(_true("element of order |S| exists", inp, size in orders, "present", str(size in orders), "oracle"))
        inp = dict(base, primes=list(primes))
        # squared forms keep these comparisons in exact integers
        checks.append(_lt("|S(m)| < 2 sqrt(c2(n) a)", inp, len(primes) ** 2, 4 * ca, "oracle", rhs_text="4 c2(n) a (squared)"))
        checks.append(_lt("divisor_count(c2(n) a) < 2 sqrt(c2(n) a)", inp, divisor_count(ca) ** 2, 4 * ca, "oracle",
                          rhs_text="4 c2(n) a (squared)"))  # fmt: skip
        if m >= 3:
            prod = ppd_set(m, q).prod
            qm1_m = s_part(q - 1, m)
            checks.append(_le("Prod(m,q)/(q-1)_m >= (q^m-1)/(q-1)^2", inp, (q**m - 1) * qm1_m, prod * (q - 1) ** 2,
                              lhs_text="(q^m-1)(q-1)_m", rhs_text="Prod (q-1)^2"))  # fmt: skip
            checks.append(_lt("q < (q^m-1)/(q-1)^2", inp, q * (q - 1) ** 2, q**m - 1, rhs_text="q^m-1"))
        elif q % 2 == 0:
            checks.append(_lt("q < q+1 <= Prod(2,q)", inp, q, ppd_set(2, q).prod, rhs_text="Prod(2,q)"))
        else:
            checks.append(_le("(q-1)/2 <= |H|", inp, q - 1, 2 * torus.order, lhs_text="q-1", rhs_text="2|H|"))
    return checks


# --- T45: torus tables --------------------------------------------------------

CLASSICAL_MIN_D = {"PSL": 2, "PSU": 3, "PSp": 2, "OmegaOdd": 3, "OmegaPlus": 4, "OmegaMinus": 4}

# Parameters the tables' conditions exclude; each must be refused.
EXCLUDED = (
    ("PSL", 2, 2), ("PSL", 2, 3), ("PSU", 3, 2), ("PSp", 2, 2), ("OmegaOdd", 3, 4),
    ("OmegaPlus", 3, 3), ("OmegaMinus", 3, 3), ("2B2", None, 2), ("2B2", None, 4),
    ("2B2", None, 32 * 2), ("2G2", None, 3), ("2G2", None, 9), ("2F4", None, 2),
    ("G2", None, 2), ("PSL", 1, 5),
)  # fmt: skip

TWISTED_BASE = {"2B2": 2, "2F4": 2, "2G2": 3}


def _twisted_qs(fam: str, max_q: int) -> list[int]:
    k = TWISTED_BASE[fam]
    out, t = [], 1
    while k ** (2 * t + 1) <= max_q:
        out.append(k ** (2 * t + 1))
        t += 1
    return out


def _rejects_row(fam: str, q: int) -> bool:
    """Rows whose notes need q > 2."""
    return q == 2 and fam in ("F4", "2E6", "E7")


def _suite_t45(max_q: int, max_d: int, max_q_twisted: int) -> list[Check]:
    checks = []
    for fam in CLASSICAL:
        for d in range(CLASSICAL_MIN_D[fam], max_d + 1):
            for q in prime_powers_upto(max_q):
                try:
                    g = GroupId(fam, d, q)
                except CatalogError:
                    continue  # excluded parameters; refusals checked below
                try:
                    t = classical_torus(g)
                except CatalogError as exc:
                    checks.append(_skip("torus order divides |T|", {"group": _gid(g)}, str(exc), "catalog"))
                    continue
                order = group_order(g)
                inp = {"group": _gid(g), "case": t.case, "torus": t.order}
                checks.append(_divides("torus order divides |T|", inp, t.order, order, "catalog", b_text="|T|"))
                checks.append(_true("torus order > 1", inp, t.order > 1, "> 1", str(t.order), "catalog"))
                if t.case == "O":
                    checks.append(_true("(O) torus order odd", inp, t.order % 2 == 1, "odd", str(t.order), "catalog"))
                m = choose_m(d)
                if fam == "PSU" and m < d:
                    checks.append(_divides("(U) q+1 divides q^m+1", inp, q + 1, q**m + 1, "catalog"))
    for fam in ("3D4", "G2", "F4", "E6", "2E6", "E7", "E8", "2B2", "2G2", "2F4"):
        qs = _twisted_qs(fam, max_q_twisted) if fam in TWISTED_BASE else prime_powers_upto(max_q)
        for q in qs:
            try:
                g = GroupId(fam, q=q)
            except CatalogError:
                continue
            inp = {"group": _gid(g)}
            try:
                tori = exceptional_torus(g)
            except CatalogError as exc:
                checks.append(_true("row refused by its condition", inp, _rejects_row(fam, q), "refused (q > 2 rows)", str(exc), "catalog"))
                continue
            if _rejects_row(fam, q):
                checks.append(_true("row refused by its condition", inp, False, "refused", "accepted", "catalog"))
            order, out = group_order(g), out_order(g)
            for t in tori:
                ti = dict(inp, torus=t.order, z=t.z, condition=t.condition)
                checks.append(_divides("torus order divides |T|", ti, t.order, order, "catalog", b_text="|T|"))
                checks.append(_true("torus order > 1", ti, t.order > 1, "> 1", str(t.order), "catalog"))
                checks.append(_eq("r bound = z |Out|", ti, t.z * out, t.r_divides, "catalog"))
            if fam in ("2B2", "2G2") and q >= 8:
                checks.append(_eq("Suzuki/Ree torus pair coprime", dict(inp, pair=[t.order for t in tori]), 1,
                                  math.gcd(tori[0].order, tori[1].order), "catalog"))  # fmt: skip
            if fam == "E7":
                want = "q = 2 mod 3" if q % 3 == 2 else "q != 2 mod 3"
                checks.append(_eq("E7 row chosen by q mod 3", inp, want, tori[0].condition, "catalog"))
            if q <= max_q:
                checks += _case_checks(g, tori)
    for q in prime_powers_upto(2 * max_q):
        inp = {"q": q}
        checks.append(_divides("E6: e divides q^2+q+1", inp, math.gcd(3, q - 1), q * q + q + 1, "catalog"))
        checks.append(_divides("2E6: e' divides q^2-q+1", inp, math.gcd(3, q + 1), q * q - q + 1, "catalog"))
        checks.append(_divides("E7: (2,q-1) divides q-+1", inp, math.gcd(2, q - 1), q - 1 if q % 3 == 2 else q + 1, "catalog"))
    for fam, d, q in EXCLUDED:
        inp = {"family": fam, "d": d, "q": q}
        try:
            GroupId(fam, d, q)
        except CatalogError as exc:
            checks.append(_true("excluded parameters refused", inp, True, "CatalogError", str(exc), "catalog"))
        else:
            checks.append(_true("excluded parameters refused", inp, False, "CatalogError", "accepted", "catalog"))
    return checks


def _case_checks(g: GroupId, tori: list[TorusSpec]) -> list[Check]:
    checks = []
    table5 = g.family == "G2" or (g.family == "F4" and g.q % 2 == 1)
    for t in tori:
        for s in factorize(t.order).primes:
            inp = {"group": _gid(g), "torus": t.order, "s": s}
            try:
                v = lemma52_case(g, s) if table5 else lemma51_case(g, s)
            except AssertionError as exc:
                checks.append(_true("case classification", inp, False, "consistent", str(exc), "catalog"))
                continue
            q = g.q
            if g.family == "E7" and q % 2 and s == 2:
                want = "E7_Y2" if v.s_part > 2 else "E7_SMALL2"
            elif g.family == "G2" and s == 3 and q % 3 == 1:
                want = "G2_3"
            elif g.family == "F4" and q % 2 and s == 2:
                want = "F4_2"
            else:
                want = "CHARACTERISTIC"
            checks.append(_eq("case classification", dict(inp, H_s=v.s_part), want, v.case.value, "catalog"))
    return checks


# --- P53: exceptional inequalities -------------------------------------------


def _census_n() -> dict[GroupId, tuple[int, str]]:
    out: dict[GroupId, tuple[int, str]] = {}
    for row in load_census_rows():
        n, prov = out.get(row.group, (0, row.provenance))
        out[row.group] = (max(n, row.count), prov)
    return out


def _n_for(g: GroupId, census: dict) -> tuple[int | None, str]:
    try:
        return fusion.m_of(g)[0], "oracle"
    except LookupError:
        pass
    if g in census:
        n, prov = census[g]
        return n, f"census:{prov}"
    return None, ""


def _suite_p53() -> list[Check]:
    checks = []
    census = _census_n()
    groups = [GroupId("2B2", q=8)] + sorted(g for g in census if g.is_exceptional and g != GroupId("2B2", q=8))
    for g in groups:
        n, src = _n_for(g, census)
        if n is None:
            checks.append(_skip("exceptional torus chain", {"group": _gid(g)}, "no class count known", src))
            continue
        q, a = g.q, g.a
        out = out_order(g)
        fact_n = math.factorial(n)
        for t in exceptional_torus(g):
            inp = {"group": _gid(g), "n": n, "torus": t.order}
            pi_h = factorize(t.order).primes
            checks.append(_le("(q-1)/2 <= |H|", inp, q - 1, 2 * t.order, src, lhs_text="q-1", rhs_text="2|H|"))
            checks.append(_le("|pi(H)| <= 2 sqrt(360 a n!)", dict(inp, pi=list(pi_h)), len(pi_h) ** 2, 4 * 360 * a * fact_n, src,
                              lhs_text="|pi(H)|^2", rhs_text="4*360 a n!"))  # fmt: skip
            for s in pi_h:
                hs = s_part(t.order, s)
                si = dict(inp, s=s, H_s=hs)
                checks.append(_divides("s-1 divides 360 a n!", si, s - 1, 360 * a * fact_n, src))
                checks.append(_le("|H_s| <= 2 z |Out| n", si, hs, 2 * t.z * out * n, src, lhs_text="|H_s|"))
                checks.append(_le("|H_s| <= 60 a n", si, hs, 60 * a * n, src, lhs_text="|H_s|"))
    return checks


# --- F6: the assembled bound --------------------------------------------------


def _suite_f6() -> list[Check]:
    checks = []
    census = _census_n()
    groups = sorted(set(supported_ids()) | set(census))
    with mpmath.workdps(bounds.WORK_DPS):
        for g in groups:
            n, src = _n_for(g, census)
            inp = {"group": _gid(g)}
            if n is None:
                checks.append(_skip("|T| <= f(n)", inp, "no class count known", src))
                continue
            lhs = mpmath.log(mpmath.mpf(group_order(g)))
            rhs = bounds.f_final_log(n).ln_value
            checks.append(_le("log|T| <= log f(n)", dict(inp, n=n), lhs, rhs, src, lhs_text="log|T|"))
    return checks


# --- registry -----------------------------------------------------------------


@dataclass(frozen=True)
class SuiteDef:
    run: object
    defaults: dict
    caps: dict
    title: str


SUITES: dict[str, SuiteDef] = {
    "L21": SuiteDef(_suite_l21, {"max_m": 12, "max_q": 64}, {"max_m": 12, "max_q": 64}, "S(m) and Prod(m,q) divisibility"),
    "L23": SuiteDef(_suite_l23, {"max_q": 13, "extras": True}, {"max_q": PSL2_MAX_Q}, "Aut-class counts for torus Sylow subgroups"),
    "L24": SuiteDef(_suite_l24, {"points": 10_000, "max_a": 10**8}, {"points": 100_000, "max_a": 10**30}, "a^(1/4)/4 < sqrt(a)/log a"),
    "L25": SuiteDef(_suite_l25, {"max_p": 97, "max_a": 200}, {"max_p": 10_000, "max_a": 10_000}, "log(2) sqrt(q)/2 <= q/a"),
    "L31": SuiteDef(_suite_l31, {"min_m": 5, "max_m": 9}, {"max_m": 12}, "alternating bound"),
    "R32": SuiteDef(_suite_r32, {"max_m": 10**6, "samples": 100}, {"max_m": SIEVE_LIMIT, "samples": 10_000}, "interval primes"),
    "L41": SuiteDef(_suite_l41, {"max_q": PSL2_MAX_Q}, {"max_q": PSL2_MAX_Q}, "unipotent class counts"),
    "P42": SuiteDef(_suite_p42, {"max_q": PSL2_MAX_Q}, {"max_q": PSL2_MAX_Q}, "classical chain"),
    "T45": SuiteDef(_suite_t45, {"max_q": 32, "max_d": 10, "max_q_twisted": 2**13},
                    {"max_q": 64, "max_d": 20, "max_q_twisted": 2**13}, "torus tables"),  # fmt: skip
    "P53": SuiteDef(_suite_p53, {}, {}, "exceptional chain"),
    "F6": SuiteDef(_suite_f6, {}, {}, "assembled bound"),
}


def resolve_grid(suite_id: str, grid: dict | None = None) -> dict:
    if suite_id not in SUITES:
        raise VerifyError(f"unknown suite {suite_id!r}; known: {', '.join(SUITES)}")
    sd = SUITES[suite_id]
    params = dict(sd.defaults)
    for key, value in (grid or {}).items():
        if value is None:
            continue
        if key not in sd.defaults:
            raise VerifyError(f"suite {suite_id} takes no parameter {key!r}")
        params[key] = value
    for key, cap in sd.caps.items():
        if not 1 <= params[key] <= cap:
            raise VerifyError(f"{suite_id}: {key} = {params[key]} outside 1..{cap}")
    if suite_id == "L31" and not 5 <= params["min_m"] <= params["max_m"]:
        raise VerifyError("L31 needs 5 <= min_m <= max_m")
    return params


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def run_suite(suite_id: str, grid: dict | None = None) -> SuiteReport:
    params = resolve_grid(suite_id, grid)
    report = SuiteReport(suite_id, params, started=_now())
    report.checks = SUITES[suite_id].run(**params)
    if suite_id in ("P53", "F6"):
        path = Path(str(census_path()))
        report.params = dict(params, census_sha256=hashlib.sha256(path.read_bytes()).hexdigest())
    report.finished = _now()
    return report


# --- serialization ------------------------------------------------------------

CSV_FIELDS = ("name", "inputs", "expected", "actual", "pass", "status", "margin", "source")


def _compact(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def report_document(report: SuiteReport, timestamps: bool = False) -> dict:
    doc = report.canonical()
    doc["canonical_hash"] = report.canonical_hash
    doc["overall"] = report.overall
    doc["counts"] = {s: report.count(s) for s in (PASS, FAIL, SKIP)}
    if timestamps:
        doc["started"], doc["finished"] = report.started, report.finished
    return doc


def emit_report(report: SuiteReport, fmt: str = "json", timestamps: bool = False) -> bytes:
    if fmt == "json":
        return (json.dumps(report_document(report, timestamps), sort_keys=True, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for c in report.checks:
            d = c.as_dict()
            d["inputs"] = _compact(c.inputs)
            d["pass"] = "" if c.passed is None else str(c.passed).lower()
            w.writerow(["" if d[k] is None else d[k] for k in CSV_FIELDS])
        return buf.getvalue().encode()
    if fmt == "text":
        return _text(report, timestamps).encode()
    raise VerifyError(f"unknown format {fmt!r}; use one of {', '.join(FORMATS)}")


def _text(report: SuiteReport, timestamps: bool) -> str:
    head = [
        f"suite    {report.suite}  ({SUITES[report.suite].title if report.suite in SUITES else ''})",
        f"params   {_compact(report.params)}",
        f"overall  {report.overall}  pass={report.count(PASS)} fail={report.count(FAIL)} skip={report.count(SKIP)}",
        f"hash     {report.canonical_hash}",
    ]
    if timestamps:
        head.append(f"ran      {report.started} .. {report.finished}")
    cols = ("status", "name", "inputs", "expected", "actual", "margin")
    rows = [[c.status, c.name, _compact(c.inputs), c.expected, c.actual, c.margin or ""] for c in report.checks]
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(cols)]
    lines = head + [""]
    lines.append("  ".join(h.ljust(w) for h, w in zip(cols, widths)).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"
