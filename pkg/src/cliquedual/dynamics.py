"""The conformalize/dualize dynamical system on hypergraphs.

Starting from ``H_0 = H`` the operations ``c`` (conformalize) and ``d``
(dualize) are applied alternately.  Steps that leave the hypergraph
unchanged are dropped, which leaves a walk in which every state has exactly
one successor; the walk runs into a single cycle whose length is the period.

A ``d``-step has type 0, 1 or 2: the number of its two endpoints that are
conformal.  With at least two vertices type 0 never occurs, the period is
even, and it equals 2 exactly when some ``d``-step has type 2.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, TextIO

from .errors import BudgetExceeded
from .graph import Graph, clique_hypergraph
from .hypergraph import DEFAULT_LIMIT, Hypergraph, conformalize, dualize, is_conformal

MAX_STATES = 64


@dataclass(frozen=True)
class Trajectory:
    """The walk ``H -> ...`` with repeated consecutive states removed.

    ``labels[i]`` is the operation leading from ``states[i]`` to the next
    state; the last label closes the cycle back to ``states[tail_length]``.
    ``edge_types`` holds one entry per ``d`` label, in walk order.
    """

    states: tuple[Hypergraph, ...]
    labels: tuple[str, ...]
    tail_length: int
    period: int
    edge_types: tuple[int, ...]
    conformal: tuple[bool, ...]
    fixed_point: bool = False

    @property
    def cycle(self) -> tuple[Hypergraph, ...]:
        return self.states[self.tail_length:]

    @property
    def cycle_labels(self) -> tuple[str, ...]:
        return self.labels[self.tail_length:]

    @property
    def cycle_edge_types(self) -> tuple[int, ...]:
        out = []
        for i in range(self.tail_length, len(self.states)):
            if self.labels[i] == "d":
                nxt = self.states[i + 1] if i + 1 < len(self.states) else self.states[self.tail_length]
                out.append(_edge_type(self.states[i], nxt))
        return tuple(out)

    def summary(self) -> dict:
        return {
            "period": self.period,
            "tail": self.tail_length,
            "states": len(self.states),
            "labels": "".join(self.labels),
            "edge_types": list(self.edge_types),
            "fixed_point": self.fixed_point,
        }


def _edge_type(a: Hypergraph, b: Hypergraph) -> int:
    return int(is_conformal(a)) + int(is_conformal(b))


def trajectory(H: Hypergraph, max_states: int = MAX_STATES, limit: int = DEFAULT_LIMIT) -> Trajectory:
    """Iterate ``c`` and ``d`` from ``H`` until a state repeats."""
    if H.n == 1:
        # {{0}} is its own conformalization and its own dual; no non-loop steps
        return Trajectory((H,), (), 0, 1, (), (True,), True)

    states: list[Hypergraph] = [H]
    labels: list[str] = []
    seen = {H: 0}
    current = H
    step = 0
    while True:
        op = "c" if step % 2 == 0 else "d"
        step += 1
        nxt = conformalize(current) if op == "c" else dualize(current, limit)
        if nxt == current:
            continue
        labels.append(op)
        if nxt in seen:
            tail = seen[nxt]
            break
        if len(states) >= max_states:
            raise BudgetExceeded("trajectory", max_states,
                                 f"trajectory: no repeated state within {max_states} states")
        seen[nxt] = len(states)
        states.append(nxt)
        current = nxt

    conformal = tuple(is_conformal(s) for s in states)
    types = []
    for i, lab in enumerate(labels):
        if lab == "d":
            j = i + 1 if i + 1 < len(states) else tail
            types.append(conformal[i] + conformal[j])
    return Trajectory(tuple(states), tuple(labels), tail, len(states) - tail, tuple(types), conformal)


def period(H: Hypergraph, max_states: int = MAX_STATES, limit: int = DEFAULT_LIMIT) -> int:
    return trajectory(H, max_states, limit).period


def graph_trajectory(G: Graph, max_states: int = MAX_STATES, limit: int = DEFAULT_LIMIT) -> Trajectory:
    """Trajectory seeded with the clique hypergraph of ``G``."""
    return trajectory(clique_hypergraph(G), max_states, limit)


# ---------------------------------------------------------------------------
# scanning
# ---------------------------------------------------------------------------


@dataclass
class PeriodSummary:
    """Histogram of periods; one-vertex graphs are tallied separately."""

    counts: Counter = field(default_factory=Counter)
    offenders: list[str] = field(default_factory=list)
    fixed_points: int = 0
    interrupted: bool = False

    @property
    def max_period(self) -> int | None:
        return max(self.counts) if self.counts else None

    @property
    def total(self) -> int:
        return sum(self.counts.values()) + self.fixed_points

    def merge(self, other: PeriodSummary) -> PeriodSummary:
        return PeriodSummary(self.counts + other.counts, self.offenders + other.offenders,
                             self.fixed_points + other.fixed_points,
                             self.interrupted or other.interrupted)

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "max_period": self.max_period,
            "offenders": list(self.offenders),
            "fixed_points": self.fixed_points,
            "interrupted": self.interrupted,
        }


def _period_record(G: Graph) -> tuple[str, int, int, bool]:
    from .io import to_graph6

    t = graph_trajectory(G)
    return to_graph6(G), t.period, t.tail_length, t.fixed_point


def scan_periods(
    graphs: Iterable[Graph],
    reporter: Callable[[str], None] | TextIO | None = None,
    workers: int = 1,
) -> PeriodSummary:
    """Period of ``C(G)`` for every graph of the stream.

    ``reporter`` receives one ``graph6<TAB>period<TAB>tail`` line per graph,
    in input order.  Graphs with period above 2 are collected as offenders.
    An interrupt stops the scan and returns what was gathered so far.
    """
    if reporter is None:
        emit = None
    elif callable(reporter):
        emit = reporter
    else:
        stream = reporter

        def emit(line: str) -> None:
            stream.write(line + "\n")
            stream.flush()

    summary = PeriodSummary()
    records: Iterable[tuple[str, int, int, bool]]
    pool = None
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        pool = ProcessPoolExecutor(workers)
        records = pool.map(_period_record, graphs, chunksize=64)
    else:
        records = map(_period_record, graphs)
    try:
        for g6, p, tail, fixed in records:
            if emit is not None:
                emit(f"{g6}\t{p}\t{tail}")
            if fixed:
                summary.fixed_points += 1
                continue
            summary.counts[p] += 1
            if p > 2:
                summary.offenders.append(g6)
    except KeyboardInterrupt:
        summary.interrupted = True
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return summary


def summary_json(summary: PeriodSummary) -> str:
    return json.dumps(summary.to_json(), sort_keys=True)
