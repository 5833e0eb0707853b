"""Command-line entry point: ``eqcolor {color,check,gen,oracle,m0,bench}``.

Exit codes: 0 success, 1 usage or I/O error, 2 proven negative (no
coloring exists, or a check failed), 3 no applicable algorithm or no
verdict within budget.  Run reports go to stderr as tab-separated lines.
"""
from __future__ import annotations

import argparse
import math
import statistics
import sys
import time
from pathlib import Path

from .check import MODES, check_coloring
from .errors import EqColorError, PreconditionError, StepCapExceeded
from .forest import forest_equitable_color, forest_feasible
from .generators import FAMILIES, Lcg64, generate, random_graph_bounded_degree
from .graph import (Coloring, Graph, coloring_from_text, coloring_to_text, degree_stats,
                    graph_from_dimacs, graph_to_dimacs, lists_from_text, lists_to_text)
from .hs import equitable_color_hs, hs_run
from .ore import DEFAULT_STEP_CAP, ore_run
from .oracle import (SearchBudget, decide_choosable, decide_equitable, decide_list,
                     m0_exhaustive, m0_formula)

EXIT_OK, EXIT_USAGE, EXIT_NO, EXIT_NA = 0, 1, 2, 3
MODE_ALIASES = {"se": "se_list", "list": "equitable_list"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise _Fail(EXIT_USAGE, f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str | bytes) -> None:
    if isinstance(text, bytes):
        text = text.decode()
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise _Fail(EXIT_USAGE, f"cannot write {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    return graph_from_dimacs(_read(path))


def _budget(args) -> SearchBudget:
    return SearchBudget(args.node_limit, args.time_limit)


def _report(*fields) -> None:
    print("\t".join(str(f) for f in fields), file=sys.stderr)


def _fmt(x) -> str:
    return "inf" if x == math.inf else str(x)


# --- color -----------------------------------------------------------------


def _seed_order(n: int, seed: int | None):
    if seed is None:
        return None
    order = list(range(n))
    Lcg64(seed).shuffle(order)
    return order


def _choose(g: Graph, k: int) -> str:
    if k >= 3 and g.is_forest():
        return "forest"
    if g.max_degree < k:
        return "hs"
    if degree_stats(g)[1] < 2 * k:
        return "ore"
    return "oracle"


def _run_algo(algo: str, g: Graph, k: int, args) -> tuple[Coloring, object]:
    if algo == "hs":
        if g.max_degree >= k:
            raise _Fail(EXIT_NA, f"hs needs maximum degree below k; got {g.max_degree} >= {k}")
        return equitable_color_hs(g, k, order=_seed_order(g.n, args.seed))
    if algo == "ore":
        theta = degree_stats(g)[1]
        if theta >= 2 * k:
            raise _Fail(EXIT_NA, f"ore needs maximum Ore-degree below 2k; got {theta} >= {2 * k}")
        f, log = ore_run(g, k, step_cap=args.step_cap)
        return f.restricted(g.n), log
    if algo == "forest":
        if not g.is_forest():
            raise _Fail(EXIT_NA, "forest needs an acyclic graph")
        if k < 3:
            raise _Fail(EXIT_NA, f"forest needs k >= 3, got {k}")
        ok, bad = forest_feasible(g, k)
        if not ok:
            raise _Fail(EXIT_NO, f"no equitable {k}-coloring: vertex {bad + 1} lies in no "
                                 f"independent set of size {g.n // k}")
        return forest_equitable_color(g, k), None
    d = decide_equitable(g, k, _budget(args))
    if d.no:
        raise _Fail(EXIT_NO, f"no equitable {k}-coloring: exhaustive search")
    if d.unknown:
        raise _Fail(EXIT_NA, f"no algorithm applies and the search gave no verdict in budget")
    return d.coloring, None


def cmd_color(args) -> int:
    g = _load_graph(args.input)
    k = args.k
    if k < 1:
        raise _Fail(EXIT_USAGE, f"--k must be positive, got {k}")
    algo = _choose(g, k) if args.algo == "auto" else args.algo
    t0 = time.perf_counter()
    try:
        f, log = _run_algo(algo, g, k, args)
    except _Fail as exc:
        _report(args.input, algo, k, "no" if exc.code == EXIT_NO else "n/a", "-",
                f"{time.perf_counter() - t0:.4f}", "-")
        raise
    except StepCapExceeded as exc:
        raise _Fail(EXIT_NA, f"ore gave up: {exc}") from None
    wall = time.perf_counter() - t0
    verdict = check_coloring(g, f, "equitable", k)
    shifts = log.shift_count if log is not None else "-"
    _report(args.input, algo, k, "ok" if verdict.ok else "invalid", shifts, f"{wall:.4f}",
            "pass" if verdict.ok else "fail")
    if not verdict.ok:
        raise _Fail(EXIT_USAGE, f"internal error: {algo} produced an invalid coloring: "
                                f"{verdict.violations[:3]}")
    if args.trace:
        _write(args.trace, log.to_text() if log is not None else "")
    _write(args.output, coloring_to_text(f))
    return EXIT_OK


# --- check -----------------------------------------------------------------


def cmd_check(args) -> int:
    g = _load_graph(args.graph)
    mode = MODE_ALIASES.get(args.mode, args.mode)
    lists = lists_from_text(_read(args.lists), g.n) if args.lists else None
    f = coloring_from_text(_read(args.coloring), g.n)
    k = args.k
    if lists is None and k is not None and max(f.color_of, default=-1) < k:
        f = Coloring(f.color_of, k)
    verdict = check_coloring(g, f, mode, k, lists)
    if verdict.ok:
        print("ok")
        return EXIT_OK
    for kind, detail in verdict.violations:
        print(f"{kind}\t{' '.join(str(x + 1) if kind == 'monochromatic_edge' else str(x) for x in detail)}")
    return EXIT_NO


# --- gen -------------------------------------------------------------------


def cmd_gen(args) -> int:
    parts = [_load_graph(p) for p in args.part]
    g = generate(args.family, args.params, args.seed, parts)
    _write(args.output, graph_to_dimacs(g))
    return EXIT_OK


# --- oracle ----------------------------------------------------------------


def _decision_exit(status: str) -> int:
    return {"yes": EXIT_OK, "no": EXIT_NO}.get(status, EXIT_NA)


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    budget = _budget(args)
    if args.kind == "equitable":
        if args.k is None:
            raise _Fail(EXIT_USAGE, "oracle equitable needs --k")
        d = decide_equitable(g, args.k, budget)
    elif args.kind == "list":
        if not args.lists:
            raise _Fail(EXIT_USAGE, "oracle list needs --lists")
        d = decide_list(g, lists_from_text(_read(args.lists), g.n), args.mode, budget)
    else:
        if args.k is None:
            raise _Fail(EXIT_USAGE, "oracle choosable needs --k")
        d = decide_choosable(g, args.k, args.mode, budget)
    print(d.status)
    if args.cert:
        if d.coloring is not None:
            _write(args.cert, coloring_to_text(d.coloring))
        elif d.lists is not None:
            _write(args.cert, lists_to_text(d.lists))
    return _decision_exit(d.status)


# --- m0 --------------------------------------------------------------------


def cmd_m0(args) -> int:
    formula = m0_formula(args.n, args.k)
    if not args.verify_exhaustive:
        print(f"formula={_fmt(formula)}")
        return EXIT_OK
    value, witness = m0_exhaustive(args.n, args.k, _budget(args))
    if value == -1:
        print(f"formula={_fmt(formula)} exhaustive=unknown")
        return EXIT_NA
    ok = value == formula
    print(f"formula={_fmt(formula)} exhaustive={_fmt(value)} {'PASS' if ok else 'FAIL'}")
    if args.cert and witness is not None:
        _write(args.cert, graph_to_dimacs(witness))
    return EXIT_OK if ok else EXIT_NO


# --- bench -----------------------------------------------------------------


def _parse_sizes(text: str) -> list[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise _Fail(EXIT_USAGE, f"--sizes must be a comma-separated list of integers: {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise _Fail(EXIT_USAGE, f"--sizes needs positive integers: {text!r}")
    return sizes


def cmd_bench(args) -> int:
    sizes = _parse_sizes(args.sizes)
    k = args.delta + args.k_offset
    if k <= args.delta:
        raise _Fail(EXIT_USAGE, "--k-offset must be at least 1")
    print("n\tk\tmedian_s\tshifts\tbound_2kn\tratio")
    prev = None
    for n in sizes:
        g = random_graph_bounded_degree(n, args.delta, args.seed)
        times, shifts, n_pad = [], 0, n
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            f, log, gp, _ = hs_run(g, k)
            times.append(time.perf_counter() - t0)
            shifts, n_pad = log.shift_count, gp.n
            if not check_coloring(g, f.restricted(n), "equitable", k).ok:
                raise _Fail(EXIT_USAGE, f"internal error: invalid coloring at n={n}")
        bound = 2 * k * n_pad
        if shifts > bound:
            raise _Fail(EXIT_USAGE, f"internal error: {shifts} shifts exceed 2kn={bound} at n={n}")
        med = statistics.median(times)
        ratio = f"{med / prev:.2f}" if prev else "-"
        print(f"{n}\t{k}\t{med:.4f}\t{shifts}\t{bound}\t{ratio}")
        prev = med
    return EXIT_OK


# --- wiring ----------------------------------------------------------------


def _add_budget(p) -> None:
    p.add_argument("--node-limit", type=int, default=None, help="search node budget")
    p.add_argument("--time-limit", type=float, default=None, help="search time budget in seconds")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="eqcolor", description="Equitable graph coloring solvers and exact oracles.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("color", help="equitably color a DIMACS graph")
    p.add_argument("input", help="DIMACS .col file, or - for stdin")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", choices=("hs", "ore", "forest", "auto"), default="auto")
    p.add_argument("--trace", help="write the shift log, one 'v from to' line per shift")
    p.add_argument("--seed", type=int, default=None, help="permute the hs insertion order")
    p.add_argument("--step-cap", type=int, default=DEFAULT_STEP_CAP, help="shift cap for ore")
    p.add_argument("-o", "--output", help="coloring file (default stdout)")
    _add_budget(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("check", help="validate a coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--mode", choices=MODES + tuple(MODE_ALIASES), default="equitable")
    p.add_argument("--lists", help="list assignment file for list modes")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="write a generated graph as DIMACS")
    p.add_argument("family", help="one of: " + ", ".join(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--part", action="append", default=[], help="input graph for disjoint_union")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="exact yes/no/unknown decisions")
    p.add_argument("kind", choices=("equitable", "list", "choosable"))
    p.add_argument("graph")
    p.add_argument("--k", type=int)
    p.add_argument("--mode", choices=("equitable", "se", "proportional"), default="equitable")
    p.add_argument("--lists")
    p.add_argument("--cert", help="write the coloring or violating list assignment here")
    _add_budget(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("m0", help="fewest edges forcing no equitable k-coloring")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--verify-exhaustive", action="store_true")
    p.add_argument("--cert", help="write the extremal graph found by the exhaustive search")
    _add_budget(p)
    p.set_defaults(func=cmd_m0)

    p = sub.add_parser("bench", help="time the hs solver at growing n")
    p.add_argument("--sizes", default="500,1000,2000")
    p.add_argument("--delta", type=int, default=10)
    p.add_argument("--k-offset", type=int, default=1, help="k = delta + offset")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"eqcolor: {exc}", file=sys.stderr)
        return exc.code
    except PreconditionError as exc:
        print(f"eqcolor: {exc}", file=sys.stderr)
        return EXIT_NA
    except EqColorError as exc:
        print(f"eqcolor: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
