"""Command-line interface.

Subcommands: analyze one graph, verify a graph6 corpus, run a single
construction with re-verification, search for near-tight instances, and
selftest the whole stack.  Exit codes: 0 ok, 1 failed check, 2 input
error, 3 violated precondition, 4 internal contradiction.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import harness
from .certificates import check_inverse_certificate
from .constructions import (
    bipartite_inverse_construct,
    gamma5_construct,
    find_special_independent,
    inddom_construct,
    theorem_main_construct,
)
from .errors import (
    HasIsolates,
    InputFormatError,
    InternalContradiction,
    PreconditionViolated,
)
from . import solvers
from .graph import Graph, to_sorted
from .graph6 import parse_edge_list, parse_graph6
from .harness import (
    ALL_CHECKS,
    EXIT_CONTRADICTION,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_PRECONDITION,
    RunConfig,
)


def _load_single_graph(arg: str | None, edges_path: str | None) -> Graph:
    if edges_path is not None:
        with open(edges_path, "r", encoding="utf-8") as handle:
            return parse_edge_list(handle.read())
    if arg is None:
        raise InputFormatError("no graph given: pass a graph6 string, file, or --edges")
    if os.path.exists(arg):
        with open(arg, "r", encoding="utf-8") as handle:
            for line in handle:
                if line.strip():
                    return parse_graph6(line)
        raise InputFormatError(f"{arg}: no graph6 line found")
    return parse_graph6(arg)


def _cmd_analyze(args: argparse.Namespace) -> int:
    try:
        g = _load_single_graph(args.graph, args.edges)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    checks = _parse_checks(args.checks)
    report = harness.analyze_graph(g, checks=checks)
    if report.inv_gamma is None and g.n > 0 and g.has_isolated_vertex():
        print("warning: graph has isolated vertices; inverse domination undefined", file=sys.stderr)
    label = {True: "yes", False: "NO", None: "-", "n/a": "n/a"}
    print(f"graph6            {report.graph6}")
    print(f"vertices / edges  {report.n} / {report.m}")
    print(f"gamma             {report.gamma}")
    print(f"alpha             {report.alpha}")
    print(f"inverse gamma     {report.inv_gamma if report.inv_gamma is not None else '-'}")
    print(f"strong inverse    {report.strong_inv_gamma if report.strong_inv_gamma is not None else '-'}")
    print(f"induced bipartite {report.b if report.b is not None else '-'}")
    print(f"conjecture ok     {label.get(report.conjecture_ok, report.conjecture_ok)}")
    print(f"three-halves ok   {label.get(report.three_halves_ok, report.three_halves_ok)}")
    print(f"main theorem ok   {label.get(report.main_thm_ok, report.main_thm_ok)}")
    print(report.to_json())
    return EXIT_OK


def _parse_checks(raw: str | None) -> frozenset[str]:
    if not raw:
        return ALL_CHECKS
    chosen = frozenset(part.strip().replace("-", "_") for part in raw.split(",") if part.strip())
    unknown = chosen - ALL_CHECKS
    if unknown:
        raise SystemExit(f"unknown checks: {', '.join(sorted(unknown))}")
    return chosen


def _cmd_verify(args: argparse.Namespace) -> int:
    config = RunConfig(
        checks=_parse_checks(args.checks),
        jobs=args.jobs if args.jobs is not None else harness.default_jobs(),
        strict=args.strict,
        counterexample_path=args.counterexamples,
    )
    out_handle = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout

    def sink(line: str) -> None:
        out_handle.write(line + "\n")

    def log(msg: str) -> None:
        print(msg, file=sys.stderr)

    try:
        if args.corpus == "-":
            summary = harness.verify_stream(sys.stdin, config, sink, log)
        else:
            with open(args.corpus, "r", encoding="utf-8") as handle:
                summary = harness.verify_stream(handle, config, sink, log)
    finally:
        if args.out:
            out_handle.close()

    if summary.failing_graph6:
        path = config.counterexample_path or "counterexamples.g6"
        with open(path, "w", encoding="utf-8") as handle:
            for g6 in summary.failing_graph6:
                handle.write(g6 + "\n")
        print(f"counterexamples written to {path}", file=sys.stderr)
    print(
        f"verified {summary.graphs} graphs: {summary.failures} failures, "
        f"{summary.skipped_isolates} skipped for isolates, "
        f"{summary.parse_errors} parse errors",
        file=sys.stderr,
    )
    if summary.parse_errors and config.strict:
        return EXIT_INPUT_ERROR
    return summary.exit_code()


def _cmd_construct(args: argparse.Namespace) -> int:
    try:
        g = _load_single_graph(args.graph, None)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        if args.which == "gamma5":
            cert = gamma5_construct(g)
        else:
            d_set = solvers.optimal_dominating_set(g).d_set
            if args.which == "main":
                cert = theorem_main_construct(g, d_set)
            elif args.which == "bipartite":
                cert = bipartite_inverse_construct(g, d_set)
            else:  # inddom
                s = find_special_independent(g, d_set)
                if s is None:
                    raise PreconditionViolated(
                        "no independent set S with S-D dominating D-S exists"
                    )
                cert = inddom_construct(g, d_set, s)
    except (PreconditionViolated, HasIsolates) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InternalContradiction as exc:
        dump = {
            "error": str(exc),
            "context": {k: repr(v) for k, v in exc.context.items()},
            "graph6": args.graph,
        }
        print(json.dumps(dump, indent=2), file=sys.stderr)
        return EXIT_CONTRADICTION

    problems = check_inverse_certificate(g, cert, solvers.gamma(g)[0])
    if problems:
        print(json.dumps({"error": "certificate failed re-verification",
                          "problems": problems}), file=sys.stderr)
        return EXIT_CONTRADICTION
    payload = cert.to_dict()
    payload["which"] = args.which
    payload["d_size"] = cert.d_set.bit_count()
    print(json.dumps(payload, separators=(",", ":")))
    return EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    out_handle = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout

    def sink(line: str) -> None:
        out_handle.write(line + "\n")

    try:
        summary = harness.search_run(args.n, args.p, args.count, args.seed, sink)
    finally:
        if args.out:
            out_handle.close()
    return EXIT_CHECK_FAILED if summary["counterexamples"] else EXIT_OK


def _cmd_selftest(args: argparse.Namespace) -> int:
    ok = harness.selftest(max_n=args.max_n)
    print("selftest:", "PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invdom",
        description="Exact domination-theory invariants and certificate-producing constructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one graph")
    p.add_argument("graph", nargs="?", help="graph6 string or path to a graph6 file")
    p.add_argument("--edges", help="read an edge-list file instead")
    p.add_argument("--checks", help="comma list from: " + ",".join(sorted(ALL_CHECKS)))
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("verify", help="check every bound over a graph6 corpus")
    p.add_argument("corpus", help="graph6 file, one graph per line, or - for stdin")
    p.add_argument("--strict", action="store_true", help="abort on parse errors")
    p.add_argument("--jobs", type=int, default=None, help="parallel workers (default $INVDOM_JOBS or 1)")
    p.add_argument("--out", help="write JSONL reports here instead of stdout")
    p.add_argument("--checks", help="comma list from: " + ",".join(sorted(ALL_CHECKS)))
    p.add_argument("--counterexamples", help="failing graphs land here (default counterexamples.g6)")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("construct", help="run one construction, re-verify, print the certificate")
    p.add_argument("graph", help="graph6 string or path")
    p.add_argument("--which", required=True, choices=("main", "bipartite", "gamma5", "inddom"))
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("search", help="seeded random hunt for near-tight instances")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", help="write the JSONL log here")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("selftest", help="run the built-in invariant suite")
    p.add_argument("--max-n", type=int, default=7, help="largest graph order to sweep")
    p.set_defaults(fn=_cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
