"""Time the numba and numpy kernel backends against each other.

    python benchmarks/bench_kernels.py [--repeat N] [--seed S]

Each kernel runs on the same random input under both backends; outputs are
compared before any timing is reported.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from cliquedual import kernels
from cliquedual.enumerate import _orderings
from cliquedual.isomorphism import _refine
from cliquedual.families import corona, cycle


def _random_masks(rng: np.random.Generator, n: int, m: int, k: int) -> list[int]:
    out = []
    for _ in range(m):
        verts = rng.choice(n, size=k, replace=False)
        out.append(int(sum(1 << int(v) for v in verts)))
    return out


def _cases(rng: np.random.Generator):
    sperner = _random_masks(rng, 40, 600, 6)
    yield "any_contained (600 sets)", kernels.any_contained, (sperner,)

    triples = _random_masks(rng, 24, 300, 3)
    yield "gilmore_conformal (300 triples)", kernels.gilmore_conformal, (triples,)

    cands = np.array(_random_masks(rng, 60, 20000, 8), dtype=np.int64)
    hit = np.array(_random_masks(rng, 60, 40, 5), dtype=np.int64)
    yield "filter_candidates (20000 x 40)", kernels.filter_candidates, (cands, hit)

    g = corona(cycle(5))
    # a 10-vertex graph whose refinement leaves big colour classes
    (colors,) = _refine([g])
    perms = _orderings(colors)
    yield f"canonical_code ({len(perms)} orderings)", kernels.canonical_code, (g.adj, perms)


def _time(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    backends = kernels.BACKENDS if kernels.HAVE_NUMBA else ("numpy",)
    if not kernels.HAVE_NUMBA:
        print("numba not installed; timing the numpy backend only")
    rng = np.random.default_rng(args.seed)
    prev = kernels.get_backend()
    print(f"{'kernel':36s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    try:
        for name, fn, fargs in _cases(rng):
            results, times = [], []
            for b in backends:
                kernels.set_backend(b)
                results.append(fn(*fargs))  # warm-up / JIT compile
                times.append(_time(fn, fargs, args.repeat))
            for r in results[1:]:
                if not np.array_equal(np.asarray(r), np.asarray(results[0])):
                    raise SystemExit(f"{name}: backends disagree")
            speed = f"{times[-1] / times[0]:9.1f}x" if len(times) == 2 else ""
            print(f"{name:36s}" + "".join(f"{t * 1e3:10.3f}ms" for t in times) + f"  {speed}")
    finally:
        kernels.set_backend(prev)


if __name__ == "__main__":
    main()
