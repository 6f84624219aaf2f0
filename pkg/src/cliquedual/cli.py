"""Command-line interface.

Exit codes: 0 success, 1 property violation or recognizer mismatch,
2 malformed input or bad arguments, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import io
from .bits import to_list
from .dynamics import trajectory
from .errors import BudgetExceeded, ParseError
from .families import FAMILIES, FamilySpec
from .graph import Graph, clique_dual, clique_hypergraph, minimal_clique_transversals
from .hypergraph import DEFAULT_LIMIT, antiblocker, dualize, is_conformal, is_sperner
from .recognizers import SplitCertificate, TriangleFreeCertificate, is_cdc

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
SCHEMA = 1


class _UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _dump(obj: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **obj}, sort_keys=True))


def _certificate_json(cert) -> dict | None:
    if isinstance(cert, TriangleFreeCertificate):
        return {
            "kind": "bisimplicial_matching",
            "components": [
                {
                    "vertices": list(comp.vertices),
                    "twin_classes": [list(c) for c in comp.classes],
                    "matching": None if m is None else [list(e) for e in m],
                }
                for comp, m in zip(cert.trace.components, cert.matchings)
            ],
            "failed_component": cert.failed_component,
        }
    if isinstance(cert, SplitCertificate):
        p = cert.partition
        return {
            "kind": "split",
            "K": to_list(p.K),
            "I": to_list(p.I),
            "k_maximal": p.k_maximal,
            "sp_property": cert.sp_property,
            "two_well_dominated": cert.two_well_dominated,
        }
    return None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    G = io.read_graph(_read_text(args.input))
    v = is_cdc(G, witness=args.witness, limit=args.limit)
    _dump({
        "is_cdc": v.is_cdc,
        "method": v.method,
        "witness": v.witness_set(),
        "certificate": _certificate_json(v.certificate),
    })
    return EXIT_OK


def cmd_clique_dual(args) -> int:
    G = io.read_graph(_read_text(args.input))
    print(io.to_graph6(clique_dual(G, args.mode, args.limit)))
    return EXIT_OK


def cmd_transversals(args) -> int:
    G = io.read_graph(_read_text(args.input))
    sys.stdout.write(io.to_hypergraph_text(minimal_clique_transversals(G, args.limit)))
    return EXIT_OK


def cmd_conformal(args) -> int:
    H = io.read_hypergraph(_read_text(args.input))
    _dump({"conformal": is_conformal(H), "sperner": is_sperner(H)})
    return EXIT_OK


def cmd_dualize(args) -> int:
    H = io.read_hypergraph(_read_text(args.input))
    sys.stdout.write(io.to_hypergraph_text(dualize(H, args.limit)))
    return EXIT_OK


def cmd_antiblocker(args) -> int:
    H = io.read_hypergraph(_read_text(args.input))
    sys.stdout.write(io.to_hypergraph_text(antiblocker(H)))
    return EXIT_OK


def cmd_period(args) -> int:
    obj = io.read_any(_read_text(args.input))
    H = clique_hypergraph(obj) if isinstance(obj, Graph) else obj
    t = trajectory(H, args.max_states, args.limit)
    out = t.summary()
    if args.trace:
        out["trace"] = [
            {"index": i, "edges": [list(e) for e in s.edge_sets()], "conformal": t.conformal[i],
             "next": t.labels[i] if i < len(t.labels) else None}
            for i, s in enumerate(t.states)
        ]
    _dump(out)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "corona":
        if args.base is None:
            raise _UsageError("corona needs --base FAMILY (the size is taken from N)")
        spec = FamilySpec("corona", base=FamilySpec(args.base, args.n))
    else:
        spec = FamilySpec(args.family, args.n)
    G = spec.build()
    if args.format == "edgelist":
        sys.stdout.write(io.to_edge_list(G))
    else:
        print(io.to_graph6(G))
    return EXIT_OK


def cmd_scan(args) -> int:
    from .enumerate import DEDUP_MAX_VERTICES, unlabeled_graphs
    from .scan import scan

    if args.input is not None:
        text = _read_text(args.input)
        graphs = list(io.iter_graph6(text.splitlines()))
    else:
        if args.n is None:
            raise _UsageError("scan needs --n K or --input FILE")
        if not 1 <= args.n <= DEDUP_MAX_VERTICES:
            raise _UsageError(f"--n must be in 1..{DEDUP_MAX_VERTICES}; larger scans take --input")
        sizes = [args.n] if args.only else range(1, args.n + 1)
        graphs = [g for k in sizes for g in unlabeled_graphs(k)]
    report = scan(graphs, periods=args.periods, workers=args.workers)
    _dump({k: v for k, v in report.to_json().items() if k != "schema"})
    return EXIT_OK if report.ok else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cliquedual", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn, helptext: str, source: str | None = "graph") -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=helptext)
        if source is not None:
            sp.add_argument("input", nargs="?", default="-",
                            help=f"{source} file (graph6, edge list or hypergraph text); '-' for stdin")
        sp.set_defaults(func=fn)
        return sp

    sp = add("check", cmd_check, "decide CDC with the fastest applicable method")
    sp.add_argument("--witness", action="store_true", help="on failure, also find an offending clique")
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT)

    sp = add("clique-dual", cmd_clique_dual, "print G^c as graph6")
    sp.add_argument("--mode", choices=("full", "pairwise"), default="full")
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT)

    sp = add("transversals", cmd_transversals, "minimal clique transversals in hypergraph format")
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT)

    add("conformal", cmd_conformal, "conformality and Sperner tests", "hypergraph")

    sp = add("dualize", cmd_dualize, "all minimal transversals of a hypergraph", "hypergraph")
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT)

    add("antiblocker", cmd_antiblocker, "maximal sets meeting every hyperedge at most once", "hypergraph")

    sp = add("period", cmd_period, "conformalize/dualize trajectory", "graph or hypergraph")
    sp.add_argument("--trace", action="store_true", help="dump every visited state")
    sp.add_argument("--max-states", type=int, default=64)
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT)

    sp = add("gen", cmd_gen, "generate a family member", None)
    sp.add_argument("family", choices=FAMILIES)
    sp.add_argument("n", type=int)
    sp.add_argument("--base", choices=[f for f in FAMILIES if f != "corona"],
                    help="base family for corona (built with size N)")
    sp.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")

    sp = add("scan", cmd_scan, "cross-check recognizers against brute force", None)
    sp.add_argument("--n", type=int, help="scan all non-isomorphic graphs on 1..K vertices")
    sp.add_argument("--only", action="store_true", help="scan exactly K vertices instead of 1..K")
    sp.add_argument("--input", help="graph6 file (one graph per line) instead of enumeration")
    sp.add_argument("--periods", action="store_true", help="also compute the period of every C(G)")
    sp.add_argument("--workers", type=int, default=1)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, _UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
