"""Command line interface.

Polygon sizes are given as ``--n-gon`` (number of vertices, N + 1); the
library works with N throughout.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional, Sequence

from ptolemy import count as C
from ptolemy.core import canonical_encoding
from ptolemy.enumeration import EnumFilter, diagrams_by_stats
from ptolemy.qpoly import MODES, csp_verify, orbit_report
from ptolemy.series import functional_residual, invariant_gf, solve_ptolemy_gf

FORMATS = ("text-table", "csv", "json", "ndjson")
DEFAULT_ENUM_LIMIT = 10
SERIES_DEGREE_GUARD = 24


class UsageError(Exception):
    pass


def enum_limit() -> int:
    raw = os.environ.get("PTOLEMY_ENUM_LIMIT")
    if raw is None:
        return DEFAULT_ENUM_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"PTOLEMY_ENUM_LIMIT must be an integer, got {raw!r}")


def _require_enumerable(n_gon: int, what: str) -> None:
    limit = enum_limit()
    if n_gon > limit:
        raise UsageError(f"{what} on the {n_gon}-gon exceeds the enumeration limit of {limit} vertices "
                         "(set PTOLEMY_ENUM_LIMIT to raise it)")


def _parse_stats(text: Optional[str]):
    if text is None:
        return None
    try:
        k, l, m = (int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"--stats expects k,l,m, got {text!r}")
    if min(k, l, m) < 0:
        raise UsageError(f"--stats entries must be non-negative, got {text!r}")
    return k, l, m


def _N(args) -> int:
    if args.n_gon < 2:
        raise UsageError(f"--n-gon must be at least 2, got {args.n_gon}")
    return args.n_gon - 1


def _emit_rows(out, fmt: str, header: list[str], rows: list[list]) -> None:
    if fmt == "json":
        json.dump([dict(zip(header, r)) for r in rows], out)
        out.write("\n")
    elif fmt == "ndjson":
        for r in rows:
            out.write(json.dumps(dict(zip(header, r))) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        cells = [header] + [[str(c) for c in r] for r in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        for r in cells:
            out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def _classes(N: int, stats) -> list[tuple[int, int, int]]:
    return [stats] if stats is not None else C.stats_classes(N)


def cmd_count(args, out) -> int:
    N = _N(args)
    if args.rotation_order is not None and args.perp is not None:
        raise UsageError("--rotation-order and --perp are mutually exclusive")
    d, b = args.rotation_order, args.perp
    if d is not None and (d < 2 or (N + 1) % d):
        raise UsageError(f"--rotation-order {d} must be >= 2 and divide the polygon size {N + 1}")
    if b is not None and b < 1:
        raise UsageError("--perp must be >= 1")
    rows = []
    for k, l, m in _classes(N, _parse_stats(args.stats)):
        if d is not None:
            v = C.count_invariant(N, k, l, m, d)
        elif b is not None:
            v = C.count_perp_invariant(N, k, l, m, b)
        else:
            v = C.count_ptolemy(N, k, l, m)
        if v or not args.nonzero:
            rows.append([k, l, m, v])
    if args.format == "text-table":
        rows.append(["total", "", "", sum(r[3] for r in rows)])
    _emit_rows(out, args.format, ["k", "l", "m", "count"], rows)
    return 0


def cmd_enum(args, out) -> int:
    N = _N(args)
    stats = _parse_stats(args.stats)
    k, l, m = stats if stats is not None else (args.triangles, args.cliques, args.empty_cells)
    flt = EnumFilter(k=k, l=l, m=m, d=args.rotation_order, b=args.perp)
    try:
        flt.validate(N)
    except ValueError as e:
        raise UsageError(str(e))
    if flt.d is None:
        _require_enumerable(N + 1, "full enumeration")
    emitted = []
    truncated = False
    for A in flt.apply(N):
        if args.limit is not None and len(emitted) >= args.limit:
            truncated = True
            break
        if args.format == "json":
            emitted.append(A.to_json())
        elif args.format == "ndjson":
            out.write(json.dumps(A.to_json()) + "\n")
            emitted.append(None)
        else:
            out.write(canonical_encoding(A).decode() + "\n")
            emitted.append(None)
    if args.format == "json":
        json.dump(emitted, out)
        out.write("\n")
    if truncated:
        print(f"note: output truncated after {args.limit} diagrams", file=sys.stderr)
    return 0


def cmd_orbits(args, out) -> int:
    N = _N(args)
    classes = _classes(N, _parse_stats(args.stats))
    rows = []
    mismatches = []
    groups = None
    if args.check:
        _require_enumerable(N + 1, "--check")
        groups = diagrams_by_stats(N)
    for k, l, m in classes:
        v = C.count_orbits(N, k, l, m)
        row = [k, l, m, v]
        if groups is not None:
            direct = len(orbit_report(groups.get((k, l, m), ()), N + 1).orbits)
            row.append(direct)
            if direct != v:
                mismatches.append(f"class ({k},{l},{m}): formula {v}, enumeration {direct}")
        rows.append(row)
    header = ["k", "l", "m", "orbits"] + (["enumerated"] if args.check else [])
    _emit_rows(out, args.format, header, rows)
    for msg in mismatches:
        print(f"mismatch: {msg}", file=sys.stderr)
    if args.check and not mismatches:
        print("check: pass", file=sys.stderr)
    return 1 if mismatches else 0


def cmd_csp(args, out) -> int:
    N = _N(args)
    if args.mode != "formula":
        _require_enumerable(N + 1, f"--mode {args.mode}")
    stats = _parse_stats(args.stats)
    if stats is not None and C.count_ptolemy(N, *stats) == 0:
        raise UsageError(f"stats class {stats} is empty on the {N + 1}-gon")
    reports = [csp_verify(N, *s, mode=args.mode) for s in _classes(N, stats)]
    failed = [r for r in reports if not r.passed]
    if args.format in ("json", "ndjson"):
        dicts = [r.to_dict() for r in reports]
        if args.format == "json":
            json.dump(dicts, out)
            out.write("\n")
        else:
            for dct in dicts:
                out.write(json.dumps(dct) + "\n")
    else:
        rows = []
        for r in reports:
            for c in r.divisors:
                rows.append([*r.stats[1:], c.d, c.polynomial_value, c.formula_value, c.enum_value,
                             "pass" if c.passed else "FAIL"])
            if r.rsw_pass is not None:
                rows.append([*r.stats[1:], "rsw", "", "", "", "pass" if r.rsw_pass else "FAIL"])
        header = ["k", "l", "m", "d", "polynomial", "formula", "enumeration", "result"]
        _emit_rows(out, args.format, header, [["" if v is None else v for v in r] for r in rows])
        if failed:
            json.dump([r.to_dict() for r in failed], out)
            out.write("\n")
    for r in failed:
        for msg in r.failures():
            print(f"fail: {msg}", file=sys.stderr)
    print(f"csp: {len(reports) - len(failed)}/{len(reports)} classes pass", file=sys.stderr)
    return 1 if failed else 0


def series_check(D: int, orders: Sequence[int], enum_up_to: int) -> list[str]:
    """Returns a list of problems; empty means every check passed."""
    problems = []
    P = solve_ptolemy_gf(D)
    residual = functional_residual(P)
    if len(residual):
        e, v = next(residual.items())
        problems.append(f"functional equation residual at {e}: {v}")
    for N in range(1, D + 1):
        groups = diagrams_by_stats(N) if N + 1 <= enum_up_to else None
        for k, l, m in C.stats_classes(N):
            want = C.count_ptolemy(N, k, l, m)
            got = P[(N, k, l, m)]
            if got != want:
                problems.append(f"coefficient ({N};{k},{l},{m}): series {got}, formula {want}")
            if groups is not None and len(groups.get((k, l, m), ())) != want:
                problems.append(f"coefficient ({N};{k},{l},{m}): enumeration "
                                f"{len(groups.get((k, l, m), ()))}, formula {want}")
    for d in orders:
        G = invariant_gf(d, D)
        for (n, a, b, c), v in G.items():
            want = C.count_invariant(n, a, b, c, d) if (n + 1) % d == 0 else 0
            if v != want:
                problems.append(f"invariant d={d} coefficient ({n};{a},{b},{c}): series {v}, formula {want}")
        for N in range(d - 1, D + 1, d):
            for k, l, m in C.stats_classes(N):
                if G[(N, k, l, m)] != C.count_invariant(N, k, l, m, d):
                    problems.append(f"invariant d={d} coefficient ({N};{k},{l},{m}) missing from series")
    return problems


def cmd_series_check(args, out) -> int:
    D = args.degree
    if not 1 <= D <= SERIES_DEGREE_GUARD:
        raise UsageError(f"--degree must be in 1..{SERIES_DEGREE_GUARD}")
    orders = [args.invariant] if args.invariant is not None else list(range(2, D + 2))
    if any(d < 2 for d in orders):
        raise UsageError("--invariant must be >= 2")
    problems = series_check(D, orders, enum_up_to=min(enum_limit(), 8))
    if args.invariant is not None or args.format == "csv":
        G = invariant_gf(args.invariant, D) if args.invariant is not None else solve_ptolemy_gf(D)
        rows = [list(e) + [v] for e, v in G.items()]
        _emit_rows(out, args.format, ["n", "a", "b", "c", "value"], rows)
    if problems:
        print(f"series-check: FAIL, first difference: {problems[0]}", file=sys.stderr)
        return 1
    print(f"series-check: pass (degree {D}, orders {orders})", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ptolemy", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, stats=True):
        sp.add_argument("--n-gon", type=int, required=True, help="number of polygon vertices (N+1)")
        sp.add_argument("--format", choices=FORMATS, default="text-table")
        if stats:
            sp.add_argument("--stats", metavar="K,L,M", help="restrict to one (triangles, cliques, empty cells) class")

    sp = sub.add_parser("count", help="closed-form counts per stats class")
    common(sp)
    sp.add_argument("--rotation-order", type=int, help="count diagrams invariant under rotation by 2*pi/d")
    sp.add_argument("--perp", type=int, help="count diagrams invariant under b-fold perpendiculars")
    sp.add_argument("--nonzero", action="store_true", help="omit classes with count 0")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("enum", help="list diagrams as canonical encodings")
    common(sp)
    sp.add_argument("--triangles", type=int)
    sp.add_argument("--cliques", type=int)
    sp.add_argument("--empty-cells", type=int)
    sp.add_argument("--rotation-order", type=int)
    sp.add_argument("--perp", type=int)
    sp.add_argument("--limit", type=int, help="stop after this many diagrams")
    sp.set_defaults(func=cmd_enum)

    sp = sub.add_parser("orbits", help="number of diagrams up to rotation")
    common(sp)
    sp.add_argument("--check", action="store_true", help="recompute orbits by enumeration")
    sp.set_defaults(func=cmd_orbits)

    sp = sub.add_parser("csp", help="verify cyclic sieving per stats class")
    common(sp)
    sp.add_argument("--mode", choices=MODES, default="formula")
    sp.set_defaults(func=cmd_csp)

    sp = sub.add_parser("series-check", help="check the generating functions against the formulas")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--invariant", type=int, help="only this rotation order; prints its coefficients")
    sp.add_argument("--format", choices=FORMATS, default="text-table")
    sp.set_defaults(func=cmd_series_check)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return 2


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Runs the CLI in-process and returns ``(exit code, stdout text)``."""
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
