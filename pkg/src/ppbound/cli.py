"""Command-line front end: ``ppbound <subcommand> ...``.

Exit status: 0 on success or PASS, 1 when a verification fails, 2 on usage
or input errors.  Payload goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, bounds
from .catalog import (
    FAMILIES,
    CatalogError,
    CensusError,
    GroupId,
    census_format_row,
    group_from_fields,
    group_order,
    load_census_rows,
    torus_specs,
)
from .numtheory import euler_phi, factorize, ppd_set, prime_power
from .oracle import fusion
from .oracle.groups import UnsupportedGroup, supported_ids
from .verify import FORMATS, SUITES, VerifyError, emit_report, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
BOUND_KINDS = ("c2", "c3", "g", "falt", "h", "f")


class UsageError(Exception):
    pass


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _json(obj) -> None:
    _out(json.dumps(obj, sort_keys=True, indent=2))


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {value}")
    return value


def _prime_power_arg(text: str) -> int:
    q = _positive(text)
    try:
        prime_power(q)
    except ValueError:
        raise argparse.ArgumentTypeError(f"q = {q} is not a prime power") from None
    return q


def _group(args) -> GroupId:
    if args.family == "Alt":
        if args.degree is None or args.d is not None or args.q is not None:
            raise UsageError("Alt takes --degree only")
        return group_from_fields("Alt", args.degree, None)
    if args.degree is not None:
        raise UsageError(f"{args.family} takes no --degree")
    return group_from_fields(args.family, args.d, args.q)


# --- subcommands --------------------------------------------------------------


def cmd_ppd(args) -> int:
    ppd = ppd_set(args.m, args.q)
    if args.json:
        _json({"m": ppd.m, "q": ppd.q, "primes": list(ppd.primes),
               "s_parts": {str(s): v for s, v in ppd.s_parts.items()}, "prod": ppd.prod})  # fmt: skip
    else:
        _out(f"S({args.m})={{{', '.join(map(str, ppd.primes))}}}, Prod={ppd.prod}")
    return EXIT_OK


def cmd_prod(args) -> int:
    _out(str(ppd_set(args.m, args.q).prod))
    return EXIT_OK


def cmd_phi(args) -> int:
    _out(str(euler_phi(args.n)))
    return EXIT_OK


def cmd_order(args) -> int:
    g = _group(args)
    _out(bounds.LogMagnitude.from_int(group_order(g)).render())
    return EXIT_OK


def cmd_torus(args) -> int:
    g = _group(args)
    specs = torus_specs(g)
    if args.json:
        _json([{"group": str(g), "order": t.order, "z": t.z, "r_divides": t.r_divides, "case": t.case,
                "normalizer": t.normalizer_shape, "source": t.source, "condition": t.condition} for t in specs])  # fmt: skip
        return EXIT_OK
    for t in specs:
        parts = [f"order={t.order}", f"r_divides={t.r_divides}"]
        if t.z is not None:
            parts.append(f"z={t.z}")
        parts.append(f"source={t.source}")
        if t.condition:
            parts.append(f"condition={t.condition}")
        _out(" ".join(parts))
    return EXIT_OK


def _census_table(g: GroupId) -> dict[int, tuple[int, str]]:
    return {row.p: (row.count, row.provenance) for row in load_census_rows() if row.group == g}


def cmd_mp(args) -> int:
    g = _group(args)
    try:
        table = fusion.m_p_table(g, args.include_identity)
        source = "oracle"
    except UnsupportedGroup:
        if args.include_identity:
            raise
        rows = _census_table(g)
        if not rows:
            raise
        table = {p: c for p, (c, _) in rows.items()}
        source = "census:" + ",".join(sorted({prov for _, prov in rows.values()}))
    best = max(table.values())
    witness = min(p for p, c in table.items() if c == best)
    if args.json:
        _json({"group": str(g), "include_identity": args.include_identity, "m_p": {str(p): c for p, c in sorted(table.items())},
               "m": best, "witness": witness, "source": source})  # fmt: skip
        return EXIT_OK
    for p, c in sorted(table.items()):
        _out(f"m_{p}={c}")
    _out(f"m(T)={best}")
    if source != "oracle":
        print(f"counts from {source}", file=sys.stderr)
    return EXIT_OK


def _bound(kind: str, n: int) -> str:
    if kind == "c2":
        return str(bounds.c2(n))
    if kind == "falt":
        return bounds.LogMagnitude.from_int(bounds.f_alt(n)).render()
    fn = {"c3": bounds.c3_log, "g": bounds.g_log, "h": bounds.h_exceptional_log, "f": bounds.f_final_log}[kind]
    return fn(n).render()


def cmd_bounds(args) -> int:
    if args.which:
        _out(_bound(args.which, args.n))
    else:
        for kind in BOUND_KINDS:
            _out(f"{kind}={_bound(kind, args.n)}")
    return EXIT_OK


def _parse_params(items) -> dict:
    params = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param needs key=value, got {item!r}")
        try:
            params[key.strip()] = json.loads(value)
        except json.JSONDecodeError:
            raise UsageError(f"--param {key}: value {value!r} is not a number or boolean") from None
    return params


def cmd_verify(args) -> int:
    grid = _parse_params(args.param)
    if args.max_m is not None:
        grid["max_m"] = args.max_m
    if args.max_q is not None:
        grid["max_q"] = args.max_q
    report = run_suite(args.suite, grid)
    payload = emit_report(report, args.format)
    if args.out:
        Path(args.out).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
    print(f"{report.suite}: {report.overall} ({len(report.checks)} checks, {report.count('FAIL')} failed, "
          f"{report.count('SKIP')} skipped)", file=sys.stderr)  # fmt: skip
    return EXIT_OK if report.overall == "PASS" else EXIT_FAIL


def census_rows() -> list[str]:
    """Oracle-backed census rows for every supported group, plus the one
    count that comes from the literature the toolkit reproduces."""
    lines = ["# family,d_or_degree,q,p,count,provenance"]
    for g in supported_ids():
        for p in factorize(group_order(g)).primes:
            lines.append(census_format_row(g, p, fusion.aut_class_count(g, p), "oracle"))
    lines.append(census_format_row(GroupId.alt(6), 2, 2, "paper"))
    return lines


def cmd_census(args) -> int:
    if args.emit:
        _out("\n".join(census_rows()))
        return EXIT_OK
    rows = load_census_rows(args.check)
    seen: dict = {}
    mismatches = []
    for row in rows:
        key = (row.group, row.p)
        if key in seen and seen[key] != row.count:
            raise CensusError(f"line {row.line}: conflicting count for {row.group}, p={row.p}")
        seen[key] = row.count
        if row.provenance == "oracle":
            try:
                actual = fusion.aut_class_count(row.group, row.p)
            except UnsupportedGroup:
                mismatches.append(f"line {row.line}: {row.group} is not oracle-supported")
                continue
            if actual != row.count:
                mismatches.append(f"line {row.line}: {row.group} p={row.p}: file {row.count}, oracle {actual}")
    for msg in mismatches:
        print(msg, file=sys.stderr)
    groups = len({g for g, _ in seen})
    _out(f"{'FAIL' if mismatches else 'OK'}: {len(rows)} rows, {groups} groups, {len(mismatches)} oracle mismatches")
    return EXIT_FAIL if mismatches else EXIT_OK


# --- parser -------------------------------------------------------------------


def _group_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--d", type=_positive, help="dimension parameter (classical families)")
    p.add_argument("--q", type=_prime_power_arg, help="field order, a prime power")
    p.add_argument("--degree", type=_positive, help="degree m of Alt(m)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ppbound", description="Prime-power class-count toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ppd", help="S(m), s-parts and Prod(m,q)")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--q", type=_prime_power_arg, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ppd)

    p = sub.add_parser("prod", help="Prod(m,q) only")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--q", type=_prime_power_arg, required=True)
    p.set_defaults(func=cmd_prod)

    p = sub.add_parser("phi", help="Euler phi")
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("order", help="order of a simple group")
    _group_flags(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("torus", help="tabulated cyclic subgroups")
    _group_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("mp", help="m_p table and m(T)")
    _group_flags(p)
    p.add_argument("--include-identity", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mp)

    p = sub.add_parser("bounds", help="explicit bound functions at n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--which", choices=BOUND_KINDS)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--max-m", type=_positive)
    p.add_argument("--max-q", type=_positive)
    p.add_argument("--param", action="append", metavar="KEY=VALUE", help="other grid parameters")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="check or emit class-count census data")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--check", metavar="PATH", help="validate a census file ('-' for stdin)")
    g.add_argument("--emit", action="store_true", help="print oracle-backed rows")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, CatalogError, CensusError, VerifyError, UnsupportedGroup, ValueError, OSError) as exc:
        print(f"ppbound {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
