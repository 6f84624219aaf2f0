"""Bitset kernels behind the hypergraph and enumeration code.

Every hyperedge, clique and transversal in the package is an ``int`` bitmask
over at most 63 vertices, so it fits a signed 64-bit word.  The inner loops
that dominate runtime (Sperner checks, Gilmore's triple condition, the
candidate filter of the sequential dualization, and the permutation search
behind canonical graph codes) live here in two flavours:

* a numba ``@njit`` kernel (default when numba imports), and
* a pure-numpy fallback that vectorizes the same computation.

The backend is picked at import time from ``CLIQUEDUAL_BACKEND``
(``numba`` or ``numpy``) and can be switched at runtime with
:func:`set_backend`.  Both backends must return identical results; the test
suite runs them against each other.
"""

from __future__ import annotations

import os
from typing import Sequence

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def deco(func):
            return func

        return deco


BACKENDS = ("numba", "numpy")

# rows per broadcast block in the numpy path; bounds peak memory
_CHUNK = 256


def _initial_backend() -> str:
    name = os.environ.get("CLIQUEDUAL_BACKEND", "").strip().lower()
    if name in BACKENDS:
        if name == "numba" and not HAVE_NUMBA:
            return "numpy"
        return name
    return "numba" if HAVE_NUMBA else "numpy"


_backend = _initial_backend()


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> str:
    """Select the kernel backend; returns the previous one."""
    global _backend
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    prev, _backend = _backend, name
    return prev


def as_words(masks: Sequence[int]) -> np.ndarray:
    return np.asarray(masks, dtype=np.int64).reshape(-1)


# ---------------------------------------------------------------------------
# numba kernels
# ---------------------------------------------------------------------------


@njit(cache=True)
def _any_contained_nb(a):
    m = a.shape[0]
    for i in range(m):
        ai = a[i]
        for j in range(m):
            if i != j and (ai & ~a[j]) == 0:
                return True
    return False


@njit(cache=True)
def _gilmore_nb(a):
    m = a.shape[0]
    for i in range(m):
        for j in range(i + 1, m):
            ij = a[i] & a[j]
            for k in range(j + 1, m):
                s = ij | (a[i] & a[k]) | (a[j] & a[k])
                if s == 0:
                    continue
                found = False
                for e in range(m):
                    if (s & ~a[e]) == 0:
                        found = True
                        break
                if not found:
                    return False
    return True


@njit(cache=True)
def _filter_candidates_nb(cands, hit):
    k = cands.shape[0]
    keep = np.ones(k, dtype=np.bool_)
    for i in range(k):
        c = cands[i]
        for h in range(hit.shape[0]):
            if (hit[h] & ~c) == 0:
                keep[i] = False
                break
        if not keep[i]:
            continue
        for j in range(k):
            d = cands[j]
            if d != c and (d & ~c) == 0:
                keep[i] = False
                break
    return keep


@njit(cache=True)
def _canonical_code_nb(adj, perms, pi, pj):
    best = np.int64(-1)
    npairs = pi.shape[0]
    for p in range(perms.shape[0]):
        code = np.int64(0)
        pruned = False
        for q in range(npairs):
            u = perms[p, pi[q]]
            v = perms[p, pj[q]]
            code = code << 1
            if (adj[u] >> v) & 1:
                code = code | 1
            # prefix already larger than the best full code
            if best >= 0 and code > (best >> (npairs - 1 - q)):
                pruned = True
                break
        if not pruned and (best < 0 or code < best):
            best = code
    return best


# ---------------------------------------------------------------------------
# numpy fallbacks
# ---------------------------------------------------------------------------


def _any_contained_np(a: np.ndarray) -> bool:
    m = a.shape[0]
    inv = ~a
    for start in range(0, m, _CHUNK):
        block = a[start:start + _CHUNK]
        sub = (block[:, None] & inv[None, :]) == 0
        rows = np.arange(block.shape[0])
        sub[rows, rows + start] = False
        if sub.any():
            return True
    return False


def _gilmore_np(a: np.ndarray) -> bool:
    m = a.shape[0]
    if m < 3:
        return True
    inv = ~a
    pair = a[:, None] & a[None, :]
    for i in range(m - 2):
        for j in range(i + 1, m - 1):
            s = pair[i, j] | pair[i, j + 1:] | pair[j, j + 1:]
            s = s[s != 0]
            if s.size == 0:
                continue
            covered = ((s[:, None] & inv[None, :]) == 0).any(axis=1)
            if not covered.all():
                return False
    return True


def _filter_candidates_np(cands: np.ndarray, hit: np.ndarray) -> np.ndarray:
    k = cands.shape[0]
    keep = np.ones(k, dtype=bool)
    if k == 0:
        return keep
    inv = ~cands
    for start in range(0, k, _CHUNK):
        stop = min(start + _CHUNK, k)
        block_inv = inv[start:stop]
        if hit.size:
            # hit[h] subset of cand
            bad = ((hit[None, :] & block_inv[:, None]) == 0).any(axis=1)
        else:
            bad = np.zeros(stop - start, dtype=bool)
        sub = (cands[None, :] & block_inv[:, None]) == 0
        sub &= cands[None, :] != cands[start:stop, None]
        bad |= sub.any(axis=1)
        keep[start:stop] = ~bad
    return keep


def _canonical_code_np(adj: np.ndarray, perms: np.ndarray, pi: np.ndarray, pj: np.ndarray) -> int:
    n = adj.shape[0]
    mat = ((adj[:, None] >> np.arange(n, dtype=np.int64)[None, :]) & 1).astype(np.int64)
    npairs = pi.shape[0]
    weights = np.left_shift(np.int64(1), np.arange(npairs - 1, -1, -1, dtype=np.int64))
    best = None
    for start in range(0, perms.shape[0], 4096):
        block = perms[start:start + 4096]
        bits = mat[block[:, pi], block[:, pj]]
        codes = bits @ weights
        low = int(codes.min())
        if best is None or low < best:
            best = low
    return best


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def any_contained(masks: Sequence[int] | np.ndarray) -> bool:
    """True if some mask is a subset of a different position's mask."""
    a = as_words(masks)
    if a.shape[0] < 2:
        return False
    if _backend == "numba":
        return bool(_any_contained_nb(a))
    return _any_contained_np(a)


def gilmore_conformal(masks: Sequence[int] | np.ndarray) -> bool:
    """Gilmore's triple condition over distinct, nonempty masks."""
    a = as_words(masks)
    if _backend == "numba":
        return bool(_gilmore_nb(a))
    return _gilmore_np(a)


def filter_candidates(cands: np.ndarray, hit: np.ndarray) -> np.ndarray:
    """Keep-mask for ``cands`` (unique) containing no ``hit`` mask and no other candidate."""
    cands = as_words(cands)
    hit = as_words(hit)
    if _backend == "numba":
        return _filter_candidates_nb(cands, hit)
    return _filter_candidates_np(cands, hit)


def canonical_code(adj: Sequence[int], perms: np.ndarray) -> int:
    """Minimum upper-triangle adjacency code over the given vertex orderings.

    ``perms[p, i]`` is the vertex placed at position ``i``.  The code reads
    pairs ``(0,1), (0,2), ..., (n-2,n-1)`` most-significant bit first.
    """
    a = as_words(adj)
    n = a.shape[0]
    if n < 2:
        return 0
    if n > 11:
        raise ValueError("canonical codes are limited to 11 vertices")
    pi, pj = np.triu_indices(n, k=1)
    pi = pi.astype(np.int64)
    pj = pj.astype(np.int64)
    perms = np.ascontiguousarray(perms, dtype=np.int64)
    if _backend == "numba":
        return int(_canonical_code_nb(a, perms, pi, pj))
    return _canonical_code_np(a, perms, pi, pj)
