"""Cross-validation of the fast recognizers against brute force over graph streams."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .dynamics import graph_trajectory
from .graph import Graph, clique_dual, clique_hypergraph, is_cdc_bruteforce, is_p4_free, is_split, is_triangle_free
from .hypergraph import DEFAULT_LIMIT, dualize
from .io import to_graph6
from .recognizers import recognize_split_cdc, recognize_triangle_free_cdc


@dataclass
class ScanReport:
    total: int = 0
    agreements: Counter = field(default_factory=Counter)
    mismatches: list[dict] = field(default_factory=list)
    periods: Counter | None = None
    period_offenders: list[str] = field(default_factory=list)
    interrupted: bool = False

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def merge_record(self, rec: dict) -> None:
        self.total += 1
        self.agreements.update(rec["agree"])
        self.mismatches.extend(rec["mismatches"])
        if "period" in rec:
            if self.periods is None:
                self.periods = Counter()
            if rec["period"] is not None:
                self.periods[rec["period"]] += 1
                if rec["period"] > 2:
                    self.period_offenders.append(rec["graph6"])

    def to_json(self) -> dict:
        out = {
            "schema": 1,
            "total": self.total,
            "agreements": dict(sorted(self.agreements.items())),
            "mismatches": self.mismatches,
            "ok": self.ok,
            "interrupted": self.interrupted,
        }
        if self.periods is not None:
            out["periods"] = {str(k): v for k, v in sorted(self.periods.items())}
            out["period_offenders"] = self.period_offenders
        return out


def check_graph(G: Graph, periods: bool = False, limit: int = DEFAULT_LIMIT) -> dict:
    """All cross-checks for one graph.

    * the P4-free, triangle-free and split verdicts against brute force,
    * ``full`` against ``pairwise`` clique-duals,
    * ``C(G)^dd == C(G)``,
    * optionally the period of ``C(G)`` (None for one vertex).
    """
    g6 = to_graph6(G)
    agree: list[str] = []
    bad: list[dict] = []

    def compare(check: str, expected, got) -> None:
        if expected == got:
            agree.append(check)
        else:
            bad.append({"graph6": g6, "check": check, "expected": expected, "got": got})

    oracle = is_cdc_bruteforce(G, limit).is_cdc
    if is_p4_free(G):
        compare("p4free", oracle, True)
    if is_triangle_free(G):
        compare("triangle_free", oracle, recognize_triangle_free_cdc(G).is_cdc)
    if is_split(G):
        compare("split", oracle, recognize_split_cdc(G).is_cdc)
    compare("clique_dual_modes", to_graph6(clique_dual(G, "full", limit)),
            to_graph6(clique_dual(G, "pairwise")))
    C = clique_hypergraph(G)
    compare("involution", C.edge_sets(), dualize(dualize(C, limit), limit).edge_sets())
    rec = {"graph6": g6, "agree": agree, "mismatches": bad}
    if periods:
        rec["period"] = None if G.n == 1 else graph_trajectory(G, limit=limit).period
    return rec


def _check_periods(G: Graph) -> dict:
    return check_graph(G, True)


def _check_plain(G: Graph) -> dict:
    return check_graph(G, False)


def scan(graphs: Iterable[Graph], periods: bool = False, workers: int = 1) -> ScanReport:
    """Run :func:`check_graph` over a stream; results merge in input order."""
    report = ScanReport(periods=Counter() if periods else None)
    fn = _check_periods if periods else _check_plain
    pool = None
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        pool = ProcessPoolExecutor(workers)
        records = pool.map(fn, graphs, chunksize=32)
    else:
        records = map(fn, graphs)
    try:
        for rec in records:
            report.merge_record(rec)
    except KeyboardInterrupt:
        report.interrupted = True
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return report
