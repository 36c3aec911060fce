"""Command line: construct, verify, count, bounds, oracle, report.

Exit status is 0 on success, 1 when a verification finds a violation and 2
for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import bound_report, select_antipodal_prime, triangle_count_formula
from .constructions import (
    SamplingPlan,
    alteration_construction,
    antipodal_construction,
    fixed_bit_construction,
)
from .core import FormatError, GuardError, Params, ParamError, format_vertex_set, parse_vertex_set
from .oracle import SearchLimits, max_triangle_free_exact, sandwich_report
from .verify import check_independent, check_triangle_free, count_triangles_graph, count_triangles_in_set

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def _params(args, n=None, r=None) -> Params:
    n = args.n if args.n is not None else n
    r = args.r if args.r is not None else r
    if n is None or r is None:
        raise UsageError("both --n and --r are required (or an '# n=.. r=..' header)")
    return Params(n, r, exploratory=args.exploratory)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _flatten(d: dict, prefix: str = "") -> list[tuple[str, str]]:
    rows = []
    for key in sorted(d):
        value = d[key]
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            rows.extend(_flatten(value, name + "."))
        elif isinstance(value, list):
            rows.append((name, " ".join(str(x) for x in value)))
        else:
            rows.append((name, "-" if value is None else str(value)))
    return rows


def _table(d: dict) -> str:
    rows = _flatten(d)
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows) + "\n"


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def cmd_construct(args) -> int:
    params = _params(args)
    sidecar = {"construction": args.kind, "n": params.n, "r": params.r}
    if args.kind == "antipodal":
        p = args.p if args.p is not None else select_antipodal_prime(params.n, params.r)
        if p is None:
            raise UsageError(f"no prime p fits n={params.n}, r={params.r}; pass --p to see why")
        vs = antipodal_construction(params.n, p, params.r)
        sidecar["p"] = p
    elif args.kind == "alteration":
        plan = SamplingPlan(args.probability, args.seed, args.trials)
        vs, trace = alteration_construction(params, plan)
        sidecar["trace"] = trace.to_dict()
    else:
        vs = fixed_bit_construction(params)
    sidecar["size"] = len(vs)
    text = format_vertex_set(vs, params.r)
    side = _dump(sidecar) + "\n"
    if args.output:
        Path(args.output).write_text(text)
        Path(args.sidecar or args.output + ".json").write_text(side)
    else:
        sys.stdout.write(text)
        if args.sidecar:
            Path(args.sidecar).write_text(side)
        else:
            sys.stderr.write(side)
    return 0


def cmd_verify(args) -> int:
    vs, header_r = parse_vertex_set(_read_input(args.input), args.n)
    params = _params(args, vs.n, header_r)
    if vs.n != params.n:
        raise UsageError(f"file has n={vs.n} but --n {params.n} was given")
    check = check_independent if args.property == "independent" else check_triangle_free
    violation = check(vs, params)
    if args.format == "json":
        out = {"n": params.n, "r": params.r, "property": args.property, "size": len(vs),
               "ok": violation is None,
               "violation": None if violation is None else
               {"kind": violation.kind, "witnesses": violation.strings()}}
        sys.stdout.write(_dump(out) + "\n")
    elif violation is None:
        print(f"OK: {len(vs)} vertices, {args.property} at r={params.r}")
    else:
        print(f"VIOLATION {violation}")
    return 0 if violation is None else 1


def cmd_count(args) -> int:
    if args.input:
        vs, header_r = parse_vertex_set(_read_input(args.input), args.n)
        params = _params(args, vs.n, header_r)
        out = {"n": params.n, "r": params.r, "size": len(vs),
               "triangles_in_set": str(count_triangles_in_set(vs, params))}
        ok = True
    else:
        params = _params(args)
        brute = count_triangles_graph(params)
        formula = triangle_count_formula(params)
        ok = brute == formula
        out = {"n": params.n, "r": params.r, "brute_force": str(brute),
               "formula": str(formula), "match": ok}
    sys.stdout.write(_dump(out) + "\n" if args.format == "json" else _table(out))
    return 0 if ok else 1


def cmd_bounds(args) -> int:
    out = bound_report(_params(args)).to_dict()
    sys.stdout.write(_dump(out) + "\n" if args.format == "json" else _table(out))
    return 0


def cmd_oracle(args) -> int:
    params = _params(args)
    limits = SearchLimits(args.max_nodes, args.time_budget_secs, not args.no_symmetry)
    res = max_triangle_free_exact(params, limits)
    out = {"n": params.n, "r": params.r, **res.to_dict()}
    sys.stdout.write(_dump(out) + "\n")
    sys.stdout.write(format_vertex_set(res.witness, params.r))
    return 0


def _range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 3..8, got {text!r}") from None
    return range(lo, hi + 1)


def cmd_report(args) -> int:
    if args.n is not None:
        n_range = range(args.n, args.n + 1)
    elif args.n_range is not None:
        n_range = args.n_range
    else:
        raise UsageError("report needs --n or --n-range")
    limits = SearchLimits(args.max_nodes, args.time_budget_secs, True)
    reports = []
    for n in n_range:
        rs = args.r_range if args.r_range is not None else range(2, n + 1)
        if args.r is not None:
            rs = [args.r]
        for r in rs:
            try:
                params = Params(n, r, exploratory=args.exploratory)
            except ParamError:
                continue
            reports.append(sandwich_report(params, limits))
    if not reports:
        raise UsageError("no valid (n, r) pairs in the requested grid")
    if args.format == "json":
        sys.stdout.write(_dump([rep.to_dict() for rep in reports]) + "\n")
    else:
        cols = ["n", "r", "fixed_bit", "antipodal", "alteration", "lower_prob",
                "oracle", "upper_r2", "level_sum", "ok"]
        rows = []
        for rep in reports:
            oracle = "-"
            if rep.oracle is not None:
                oracle = str(rep.oracle.best_size) + ("" if rep.oracle.optimal else "+")
            lp = rep.lower_probabilistic
            rows.append([
                str(rep.params.n), str(rep.params.r),
                *(str(rep.constructions.get(k, "-")) for k in ("fixed_bit", "antipodal", "alteration")),
                "-" if lp is None else f"{lp:.4f}",
                oracle,
                *(str(rep.uppers.get(k, "-")) for k in ("upper_r2", "upper_level_sum")),
                "yes" if rep.ok else "NO",
            ])
        widths = [max(len(c), *(len(row[i]) for row in rows)) for i, c in enumerate(cols)]
        lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in [cols, *rows]]
        sys.stdout.write("\n".join(lines) + "\n")
        for rep in reports:
            for v in rep.violations:
                sys.stdout.write(f"violation n={rep.params.n} r={rep.params.r}: {v}\n")
    return 0 if all(rep.ok for rep in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trifree",
        description="Triangle-free subsets of hypercube r-distance graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def instance(p, required=True):
        p.add_argument("--n", type=int, required=required, help="cube dimension")
        p.add_argument("--r", type=int, required=required, help="Hamming distance")
        p.add_argument("--exploratory", action="store_true",
                       help="allow odd r and r > 2n/3")

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("construct", help="build a construction and write it out")
    instance(p)
    p.add_argument("--kind", choices=("antipodal", "alteration", "fixed-bit"), required=True)
    p.add_argument("--p", type=int, help="antipodal block length (default: best prime)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--probability", type=float, help="default: the optimal probability")
    p.add_argument("--output", help="vertex-set file (default: stdout)")
    p.add_argument("--sidecar", help="JSON sidecar path (default: OUTPUT.json, or stderr)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a vertex-set file")
    instance(p, required=False)
    p.add_argument("input", nargs="?", help="vertex-set file (default: stdin)")
    p.add_argument("--property", choices=("triangle-free", "independent"), default="triangle-free")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="count triangles in the graph or in a set")
    instance(p, required=False)
    p.add_argument("--input", help="count inside this vertex-set file instead")
    fmt(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bounds", help="every closed-form bound for one instance")
    instance(p)
    fmt(p)
    p.set_defaults(func=cmd_bounds)

    def budgets(p):
        p.add_argument("--max-nodes", type=int, default=SearchLimits.max_nodes)
        p.add_argument("--time-budget-secs", type=float, default=SearchLimits.time_budget)

    p = sub.add_parser("oracle", help="exact maximum by branch and bound")
    instance(p)
    budgets(p)
    p.add_argument("--no-symmetry", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("report", help="sandwich table over an (n, r) grid")
    instance(p, required=False)
    p.add_argument("--n-range", type=_range, help="e.g. 3..8")
    p.add_argument("--r-range", type=_range, help="e.g. 2..4")
    budgets(p)
    fmt(p)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParamError, FormatError, GuardError, OSError) as exc:
        print(f"trifree {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
