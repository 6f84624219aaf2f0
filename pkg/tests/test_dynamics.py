import io as _io
import json

import pytest
from hypothesis import given, settings

from conftest import graphs, hypergraphs, load_fixture
from cliquedual.dynamics import (
    MAX_STATES,
    PeriodSummary,
    graph_trajectory,
    period,
    scan_periods,
    summary_json,
    trajectory,
)
from cliquedual.enumerate import graphs_up_to
from cliquedual.errors import BudgetExceeded
from cliquedual.families import cycle, path
from cliquedual.graph import (
    Graph,
    clique_dual,
    clique_hypergraph,
    is_cdc_bruteforce,
    is_p4_free,
)
from cliquedual.hypergraph import (
    Hypergraph,
    co_occurrence_graph,
    conformalize,
    dualize,
    is_conformal,
    is_sperner,
)
from cliquedual.io import from_hypergraph_text, to_graph6


def _period8():
    return from_hypergraph_text(load_fixture("period8.hyp"))


def test_period8_trace_matches_state_by_state():
    t = trajectory(_period8())
    ref = json.loads(load_fixture("period8_trace.json"))
    assert (t.period, t.tail_length) == (ref["period"], ref["tail"]) == (8, 1)
    walk = list(t.states[1:]) + [t.states[t.tail_length]]
    assert len(walk) == len(ref["states"])
    for got, want in zip(walk, ref["states"]):
        assert [list(e) for e in got.edge_sets()] == want["edges"], want["name"]
    # the second state and the last recorded state coincide
    assert ref["states"][0]["edges"] == ref["states"][-1]["edges"]


def test_period8_labels_and_types():
    t = trajectory(_period8())
    assert "".join(t.labels) == "cdcdcdcdc"
    assert t.edge_types == (1, 1, 1, 1)
    assert t.cycle_edge_types == (1, 1, 1, 1)
    assert len(t.cycle) == 8 and "".join(t.cycle_labels) == "dcdcdcdc"


def test_gcc_not_cdc_has_period_4():
    H = from_hypergraph_text(load_fixture("gcc_not_cdc.hyp"))
    assert period(H) == 4


def test_c5_and_paths():
    t = graph_trajectory(cycle(5))
    assert t.period == 2 and t.tail_length == 2
    for n in range(5, 9):
        assert graph_trajectory(path(n)).period == 2


def test_cdc_graph_two_cycle():
    g = path(4)
    t = graph_trajectory(g)
    assert (t.period, t.tail_length) == (2, 0)
    assert "".join(t.labels) == "dd"
    assert t.edge_types == (2, 2)
    assert t.states[1] == clique_hypergraph(clique_dual(g))


def test_p4_free_graphs_have_period_2():
    for g in graphs_up_to(6):
        if g.n > 1 and is_p4_free(g):
            assert graph_trajectory(g).period == 2


def test_single_vertex_is_fixed_point():
    t = graph_trajectory(Graph.edgeless(1))
    assert t.fixed_point and t.period == 1 and t.labels == ()
    assert t.summary()["fixed_point"] is True


@given(hypergraphs(2, 6, 6))
@settings(max_examples=80)
def test_walk_invariants(H):
    t = trajectory(H)
    assert t.period % 2 == 0
    assert 0 not in t.edge_types
    assert (t.period == 2) == (2 in t.cycle_edge_types)
    assert len(t.labels) == len(t.states)
    # consecutive labels alternate except where a loop was skipped
    for i, lab in enumerate(t.labels):
        nxt = t.states[i + 1] if i + 1 < len(t.states) else t.states[t.tail_length]
        op = conformalize if lab == "c" else dualize
        assert op(t.states[i]) == nxt
        if lab == "c":
            assert is_conformal(nxt)
    for s in t.states[1:]:
        assert is_sperner(s)
    assert trajectory(H) == t


@given(graphs(2, 7))
def test_graph_walk_period_two_iff_type_two(g):
    t = graph_trajectory(g)
    assert (t.period == 2) == (2 in t.cycle_edge_types)
    if is_cdc_bruteforce(g).is_cdc:
        assert t.period == 2 and t.tail_length == 0


def test_period_two_cycle_gives_cdc_pair():
    # a 2-cycle of conformal states is a pair of mutually dual clique hypergraphs
    for g in graphs_up_to(6):
        if g.n < 2:
            continue
        t = graph_trajectory(g)
        a, b = t.cycle
        if is_conformal(a) and is_conformal(b):
            ga, gb = co_occurrence_graph(a), co_occurrence_graph(b)
            assert is_cdc_bruteforce(ga).is_cdc and is_cdc_bruteforce(gb).is_cdc
            assert clique_dual(ga) == gb


def test_max_states_budget():
    with pytest.raises(BudgetExceeded) as exc:
        trajectory(_period8(), max_states=4)
    assert exc.value.stage == "trajectory"
    assert MAX_STATES >= 16


def test_scan_periods_empty_stream():
    s = scan_periods([])
    assert s.total == 0 and s.max_period is None
    assert json.loads(summary_json(s))["counts"] == {}


def test_scan_periods_reporter_lines():
    gs = [Graph.edgeless(1), path(4), cycle(5)]
    buf = _io.StringIO()
    s = scan_periods(gs, reporter=buf)
    lines = buf.getvalue().splitlines()
    assert lines == [f"{to_graph6(Graph.edgeless(1))}\t1\t0",
                     f"{to_graph6(path(4))}\t2\t0",
                     f"{to_graph6(cycle(5))}\t2\t2"]
    assert s.fixed_points == 1 and s.counts == {2: 2} and s.offenders == []
    got = []
    scan_periods(gs, reporter=got.append)
    assert got == lines


def test_period_summary_merge():
    a = PeriodSummary()
    a.counts[2] = 3
    b = PeriodSummary(offenders=["X"], fixed_points=1)
    b.counts[8] = 1
    m = a.merge(b)
    assert m.total == 5 and m.max_period == 8 and m.offenders == ["X"]


def test_hypergraph_states_are_hashable_keys():
    H = Hypergraph(3, (0b011, 0b110))
    assert {H: 1}[Hypergraph(3, (0b110, 0b011))] == 1
