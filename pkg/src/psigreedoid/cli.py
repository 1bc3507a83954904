"""Command-line front end.

Verbs: ``analyze``, ``decide``, ``verify``, ``generate`` and ``catalog``.
Exit codes are a stable contract: 0 for success or a greedoid, 1 for a
negative decision or a failing suite, 2 for usage and precondition errors.
Structured output (``--json``) is deterministic: sorted keys and no timing in
the payload; wall time goes to standard error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import catalog as cat
from .errors import CapExceeded, GraphError, ParseError, PreconditionError
from .graph import Graph, corona_k1, cycle_graph, parse_edge_list, random_graph, to_edge_list
from .greedoid import decide
from .report import build_report
from .verdict import greedoid_verdict_to_json, render_witness
from .verify import (
    DEFAULT_EXHAUSTIVE,
    SLOW_EXHAUSTIVE,
    SUITES,
    CoronaBases,
    Exhaustive,
    RandomSample,
    resolve_suites,
    run_campaign,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2
RANDOM_N_CAP = 16

log = logging.getLogger("psigreedoid")


class UsageError(Exception):
    pass


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# input
# ---------------------------------------------------------------------------

def _load(args) -> tuple[Graph, str, Optional[list[str]]]:
    """The graph named by ``--catalog`` or read from the positional path
    (``-`` for standard input), with an id and optional vertex labels."""
    if args.catalog and args.graph:
        raise UsageError("give either a graph file or --catalog, not both")
    if args.catalog:
        try:
            entry = cat.get(args.catalog)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        return entry.graph, entry.name, list(entry.labels)
    if not args.graph:
        raise UsageError("no input graph: pass an edge-list file or --catalog NAME")
    return _read_graph(args.graph), args.graph, None


def _read_graph(path: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_edge_list(text)
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="edge-list file ('-' reads standard input)")
    p.add_argument("--catalog", metavar="NAME", help="use a named graph from the built-in catalog")
    p.add_argument("--json", action="store_true", help="machine-readable output")


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    g, gid, labels = _load(args)
    report = build_report(g, gid, labels)
    sys.stdout.write(_dump(report.to_json()) if args.json else report.to_text())
    return EXIT_OK


def cmd_decide(args) -> int:
    g, gid, labels = _load(args)
    try:
        verdict = decide(g, args.method)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        sys.stdout.write(_dump({"graph": gid, **greedoid_verdict_to_json(verdict, labels)}))
    else:
        lines = [f"graph: {gid}",
                 f"greedoid: {str(verdict.is_greedoid).lower()}",
                 f"decision path: {verdict.decision_path}"]
        if verdict.reason:
            lines.append(f"reason: {verdict.reason}")
        fa = greedoid_verdict_to_json(verdict, labels)["failed_axiom"]
        if fa:
            lines.append(f"failed axiom: {fa['axiom']} X={fa['X']} Y={fa['Y']}")
        for key, value in render_witness(verdict.witness, labels).items():
            lines.append(f"witness {key}: {value}")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if verdict.is_greedoid else EXIT_NEGATIVE


def _n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("-")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad vertex count {text!r}: use N or A-B") from None
    if not 1 <= a <= b <= RANDOM_N_CAP:
        raise UsageError(f"random vertex counts must lie in 1..{RANDOM_N_CAP}")
    return a, b


def _corpora(args, suites) -> tuple[list, list]:
    main: list = []
    coronas: list = []
    if args.exhaustive is not None:
        cap = SLOW_EXHAUSTIVE if args.slow else DEFAULT_EXHAUSTIVE
        if not 1 <= args.exhaustive <= cap:
            hint = "" if args.slow else " (n = 8 needs --slow)"
            raise UsageError(f"--exhaustive must lie in 1..{cap}{hint}")
        main.append(Exhaustive(args.exhaustive))
    for n_text, p_text, seed_text, count_text in args.random or []:
        n_min, n_max = _n_range(n_text)
        try:
            p, seed, count = float(p_text), int(seed_text), int(count_text)
        except ValueError:
            raise UsageError("--random takes N P SEED COUNT") from None
        if not 0.0 <= p <= 1.0 or count < 0:
            raise UsageError("--random needs 0 <= P <= 1 and COUNT >= 0")
        main.append(RandomSample(n_min, n_max, p, seed, count))
    if args.coronas_upto is not None:
        if not 1 <= args.coronas_upto <= 7:
            raise UsageError("--coronas-upto must lie in 1..7")
        coronas.append(CoronaBases(args.coronas_upto))
    if not main and not coronas:
        main.append(Exhaustive(DEFAULT_EXHAUSTIVE))
        if any(s.corpus == "corona" for s in suites):
            coronas.append(CoronaBases(7))
    return main, coronas


def cmd_verify(args) -> int:
    names = [x for item in args.suite or ["all"] for x in item.split(",") if x]
    try:
        suites = resolve_suites(names)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    main, coronas = _corpora(args, suites)
    summary = run_campaign(suites, main, coronas,
                           progress=lambda k: log.info("%d graphs scanned", k))
    if args.json:
        sys.stdout.write(_dump(summary.to_json()))
    else:
        lines = ["corpora: " + "; ".join(json.dumps(c, sort_keys=True) for c in summary.corpora)]
        for s in summary.suites:
            status = "ok" if s.passed else "FAIL"
            lines.append(f"{s.suite:<11} {status:<4} scanned={s.scanned} in_scope={s.in_scope} "
                         f"agreements={s.agreements} disagreements={s.disagreements}  [{s.scope}]")
            for f in s.to_json()["failures"]:
                lines.append(f"    {f['graph']} edges={f['edges']} witness={f['witness']} {f['reason']}")
        lines.append("result: " + ("all suites passed" if summary.passed else "disagreements found"))
        sys.stdout.write("\n".join(lines) + "\n")
    print(f"wall time: {summary.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if summary.passed else EXIT_NEGATIVE


def cmd_generate(args) -> int:
    chosen = [x is not None for x in (args.cycle, args.corona, args.random)]
    if sum(chosen) != 1:
        raise UsageError("choose exactly one of --cycle, --corona, --random")
    if args.cycle is not None:
        if not 3 <= args.cycle <= 32:
            raise UsageError("--cycle needs 3 <= q <= 32")
        g = cycle_graph(args.cycle)
    elif args.corona is not None:
        if args.corona.startswith("catalog:"):
            try:
                base = cat.get(args.corona[len("catalog:"):]).graph
            except KeyError as exc:
                raise UsageError(exc.args[0]) from None
        else:
            base = _read_graph(args.corona)
        if 2 * base.n > 32:
            raise UsageError("the corona would exceed 32 vertices")
        g = corona_k1(base)
    else:
        n_text, p_text, seed_text = args.random
        try:
            n, p, seed = int(n_text), float(p_text), int(seed_text)
        except ValueError:
            raise UsageError("--random takes N P SEED") from None
        if not 0 <= n <= 32 or not 0.0 <= p <= 1.0:
            raise UsageError("--random needs 0 <= N <= 32 and 0 <= P <= 1")
        g = random_graph(n, p, seed)
    sys.stdout.write(to_edge_list(g))
    return EXIT_OK


def cmd_catalog(args) -> int:
    entries = cat.catalog()
    results = {}
    if args.check:
        for entry, claim, verdict in cat.check_all_claims(entries):
            results[(entry.name, str(claim))] = verdict.value
    if args.json:
        payload = []
        for e in entries:
            claims = []
            for c in e.claims:
                item = {"claim": str(c), "text": cat.describe_claim(c)}
                if args.check:
                    item["holds"] = results[(e.name, str(c))]
                claims.append(item)
            payload.append({"name": e.name, "n": e.graph.n, "edges": e.graph.num_edges(),
                            "labels": list(e.labels), "source": e.source, "claims": claims})
        sys.stdout.write(_dump(payload))
    else:
        lines = []
        for e in entries:
            lines.append(f"{e.name}: n={e.graph.n} edges={e.graph.num_edges()}  ({e.source})")
            for c in e.claims:
                mark = ""
                if args.check:
                    mark = "PASS " if results[(e.name, str(c))] else "FAIL "
                lines.append(f"  {mark}{cat.describe_claim(c)}")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if all(results.values()) else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="psigreedoid",
                                     description="Local maximum stable sets and greedoids on small graphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to standard error")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invariant report for one graph")
    _add_input(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decide", help="is Psi(G) a greedoid?")
    _add_input(p)
    p.add_argument("--method", choices=("theorem10", "theorem33", "oracle", "auto"), default="auto")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="run verification suites over graph corpora")
    p.add_argument("--suite", action="append", metavar="NAME",
                   help=f"suite name, comma list or 'all' (repeatable): {', '.join(SUITES)}")
    p.add_argument("--exhaustive", type=int, metavar="N", help="all labelled graphs with 1..N vertices")
    p.add_argument("--slow", action="store_true", help="allow --exhaustive 8")
    p.add_argument("--random", nargs=4, action="append", metavar=("N", "P", "SEED", "COUNT"),
                   help="COUNT random graphs; N may be a range A-B (repeatable)")
    p.add_argument("--coronas-upto", type=int, metavar="N",
                   help="corona bases: graphs on <= N vertices with girth >= 5 or acyclic")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="emit a graph as an edge list")
    p.add_argument("--cycle", type=int, metavar="Q", help="the cycle C_Q")
    p.add_argument("--corona", metavar="INPUT", help="corona of an edge-list file (or catalog:NAME)")
    p.add_argument("--random", nargs=3, metavar=("N", "P", "SEED"), help="seeded Erdos-Renyi graph")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("catalog", help="list the named graphs and their claims")
    p.add_argument("--check", action="store_true", help="evaluate every claim")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapExceeded, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
