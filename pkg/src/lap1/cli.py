"""Command-line front end.

Subcommands: mult, reduce, enumerate, verify, extremal.  Reports are JSON
on stdout (or --json-out PATH), human summaries go to stderr.  Exit
codes: 0 clean, 1 violations found, 2 usage or parse error, 3 internal
inconsistency (fast and exact engines disagree).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .canon import canonical_form
from .enumeration import (
    GraphClass,
    FILTER_NO_PENDANT_P3,
    FILTER_REDUCED,
    filter_class,
    free_trees,
    unicyclic_graphs,
)
from .extremal import extremal_tree, extremal_unicyclic
from .graph6 import Graph6Error, parse_graph6, read_edge_list, to_graph6
from .graphs import Graph, pendant_profile
from .linalg import laplacian_multiplicity_one
from .reduction import (
    ReductionStep,
    ReductionTrace,
    PENDANT_CLUSTER,
    REDUCTION_OPERATION,
    multiplicity_fast,
    reduced_graph,
    reduction_operation,
)
from .verify import run_suite

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3

FILTER_ALIASES = {
    "reduced": FILTER_REDUCED,
    "nop3": FILTER_NO_PENDANT_P3,
    "noP3": FILTER_NO_PENDANT_P3,
    "no-pendant-P3": FILTER_NO_PENDANT_P3,
}


class UsageError(Exception):
    pass


def _max_n_cap() -> int | None:
    raw = os.environ.get("LAP1_MAX_N")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"LAP1_MAX_N must be an integer, got {raw!r}") from exc


def _check_cap(n: int) -> None:
    cap = _max_n_cap()
    if cap is not None and n > cap:
        raise UsageError(f"n={n} exceeds the LAP1_MAX_N={cap} safety cap")


def _load_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "g6", None):
        try:
            return parse_graph6(args.g6)
        except Graph6Error as exc:
            raise UsageError(f"bad graph6 input: {exc}") from exc
    if getattr(args, "file", None):
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from exc
        head = next((line for line in text.splitlines() if line.strip()), "")
        parts = head.split()
        if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
            try:
                return read_edge_list(text)
            except ValueError as exc:
                raise UsageError(f"bad edge list in {args.file}: {exc}") from exc
        try:
            return parse_graph6(head)
        except Graph6Error as exc:
            raise UsageError(f"bad graph6 in {args.file}: {exc}") from exc
    raise UsageError("provide a graph with --g6 or --file")


def _emit(payload: dict | list, args: argparse.Namespace) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if getattr(args, "json_out", None):
        Path(args.json_out).write_text(text + "\n")
    else:
        print(text)


def _cmd_mult(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    prof = pendant_profile(g)
    payload: dict = {"n": g.n, "p": prof.p, "q": prof.q, "method": args.method}
    code = EXIT_OK
    if args.method in ("exact", "both"):
        payload["m1"] = laplacian_multiplicity_one(g)
    if args.method in ("fast", "both"):
        m_fast, trace = multiplicity_fast(g)
        payload.setdefault("m1", m_fast)
        payload["trace"] = trace.to_json()
        if args.method == "both" and m_fast != payload["m1"]:
            payload["m1_exact"] = payload["m1"]
            payload["m1_fast"] = m_fast
            code = EXIT_INCONSISTENT
    _emit(payload, args)
    if code == EXIT_INCONSISTENT:
        print(
            f"engines disagree: exact={payload['m1_exact']}"
            f" fast={payload['m1_fast']}",
            file=sys.stderr,
        )
    else:
        print(
            f"n={g.n} m1={payload['m1']} p={prof.p} q={prof.q}", file=sys.stderr
        )
    return code


def _cmd_reduce(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    input_g6 = to_graph6(g)
    steps: list[ReductionStep] = []
    if args.to == "reduced":
        result, offset = reduced_graph(g)
        if offset:
            steps.append(
                ReductionStep(
                    PENDANT_CLUSTER, canonical_form(g), canonical_form(result), offset
                )
            )
    else:
        result = g
        offset = 0
        while True:
            prof = pendant_profile(result)
            target = next(
                (v for v in prof.quasi_pendants if result.degree(v) > 2), None
            )
            if target is None:
                break
            u = min(
                w for w in result.neighbors(target) if result.degree(w) == 1
            )
            nxt = reduction_operation(result, u, target)
            steps.append(
                ReductionStep(
                    REDUCTION_OPERATION,
                    canonical_form(result),
                    canonical_form(nxt),
                    0,
                )
            )
            result = nxt
    trace = ReductionTrace(input_g6, tuple(steps), offset)
    _emit(
        {
            "input_g6": input_g6,
            "graph6": to_graph6(result),
            "offset": offset,
            "trace": trace.to_json(),
        },
        args,
    )
    print(
        f"{input_g6} -> {to_graph6(result)} offset={offset}"
        f" steps={len(steps)}",
        file=sys.stderr,
    )
    return EXIT_OK


def _parse_filters(raw: str | None) -> frozenset[str]:
    if not raw:
        return frozenset()
    names = []
    for token in raw.split(","):
        token = token.strip()
        if token not in FILTER_ALIASES:
            raise UsageError(
                f"unknown filter {token!r}; known: reduced, noP3"
            )
        names.append(FILTER_ALIASES[token])
    return frozenset(names)


def _cmd_enumerate(args: argparse.Namespace) -> int:
    _check_cap(args.n)
    cls = GraphClass(args.cls, _parse_filters(args.filter))
    if args.cls == "tree":
        stream = free_trees(args.n)
    elif args.cls == "unicyclic":
        stream = unicyclic_graphs(args.n)
    else:
        raise UsageError("enumerate supports --class tree or unicyclic")
    count = 0
    for g in filter_class(stream, cls):
        print(to_graph6(g))
        count += 1
    print(f"{count} graphs", file=sys.stderr)
    return EXIT_OK


def _cmd_extremal(args: argparse.Namespace) -> int:
    _check_cap(args.n)
    try:
        g = extremal_tree(args.n) if args.cls == "tree" else extremal_unicyclic(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    m = laplacian_multiplicity_one(g)
    print(f"{to_graph6(g)} m={m}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n is not None:
        _check_cap(args.max_n)
    reports = run_suite(
        args.suite,
        max_n=args.max_n,
        seed=args.seed,
        jobs=args.jobs,
        n_random=args.random_graphs,
    )
    payload = [r.to_json() for r in reports]
    _emit(payload if len(payload) > 1 else payload[0], args)
    for r in reports:
        print(r.summary(), file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lap1",
        description="Exact multiplicity of 1 as a Laplacian eigenvalue:"
        " computation, reductions, enumeration, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("--g6", help="graph6 string")
        p.add_argument("--file", help="file holding graph6 or an edge list")
        p.add_argument("--json-out", dest="json_out", help="write JSON here")

    p = sub.add_parser("mult", help="multiplicity of 1 for one graph")
    add_input(p)
    p.add_argument(
        "--method", choices=("exact", "fast", "both"), default="both"
    )
    p.set_defaults(fn=_cmd_mult)

    p = sub.add_parser("reduce", help="reduced or final reduction graph")
    add_input(p)
    p.add_argument("--to", choices=("reduced", "final"), default="reduced")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("enumerate", help="emit one graph6 per line")
    p.add_argument("--class", dest="cls", required=True,
                   choices=("tree", "unicyclic"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", help="comma list: reduced, noP3")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("extremal", help="equality-attaining graph")
    p.add_argument("--class", dest="cls", required=True,
                   choices=("tree", "unicyclic"))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_extremal)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("thm1", "thm2", "thm3", "lemmas", "all"))
    p.add_argument("--max-n", dest="max_n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--random-graphs", dest="random_graphs", type=int,
                   default=1000, help="random connected graphs for thm1")
    p.add_argument("--json-out", dest="json_out", help="write JSON here")
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
