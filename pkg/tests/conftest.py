from __future__ import annotations

import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from cliquedual import kernels  # noqa: E402
from cliquedual.graph import Graph  # noqa: E402
from cliquedual.hypergraph import Hypergraph  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(params=kernels.BACKENDS if kernels.HAVE_NUMBA else ("numpy",))
def backend(request):
    prev = kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(prev)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


@st.composite
def hypergraphs(draw, min_n: int = 1, max_n: int = 7, max_m: int = 8) -> Hypergraph:
    n = draw(st.integers(min_n, max_n))
    full = (1 << n) - 1
    edges = draw(st.lists(st.integers(1, full), min_size=1, max_size=max_m))
    covered = 0
    for e in edges:
        covered |= e
    missing = full & ~covered
    if missing:
        edges.append(missing)
    return Hypergraph(n, tuple(edges))


def load_fixture(name: str) -> str:
    return (FIXTURES / name).read_text()


# acceptance results: criterion number -> (title, [(part, ok, detail), ...])
ACCEPTANCE: dict[int, tuple[str, list[tuple[str, bool, str]]]] = {}


def record(no: int, title: str, part: str, ok: bool, detail: str = "") -> bool:
    ACCEPTANCE.setdefault(no, (title, []))[1].append((part, ok, detail))
    print(f"{'PASS' if ok else 'FAIL'} {no} {title} [{part}] {detail}".rstrip())
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for no in sorted(ACCEPTANCE):
        title, parts = ACCEPTANCE[no]
        failed = [p for p in parts if not p[1]]
        status = "FAIL" if failed else "PASS"
        line = f"{status} {no}: {title} ({len(parts) - len(failed)}/{len(parts)} parts)"
        if failed:
            line += " -- " + "; ".join(f"{p}: {d}" for p, _, d in failed)
        terminalreporter.write_line(line)
