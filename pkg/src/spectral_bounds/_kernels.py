"""Vectorized kernels over the labeled edge-mask enumeration.

A labeled graph on n vertices is an integer bitmask over the n(n-1)/2
upper-triangle pairs (same bit order as the graph6 payload).  Campaigns
over all 2^(n(n-1)/2) graphs process contiguous mask ranges with numpy:
adjacency rows, degrees and common-neighbor counts come from word-level
bit extraction, spectral radii from batched symmetric eigensolves.

The per-graph checkers in ``harness`` mirror these kernels operation for
operation; cross-path record equality is part of the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .bounds import _degree_biclique_root
from .cliques import POLY_RESIDUAL_TOL, turan_clique_count
from .graphs import edge_bit_index, from_edge_mask, is_connected, is_turan
from .spectra import turan_spectral_radius

CHUNK = 1 << 16

ENUM_MAX_N = 7

# full spectral-radius tables per order, built on demand (n=7: 16.8 MB)
_MU_TABLES: dict[int, np.ndarray] = {}


def pair_list(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in edge-bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(u, v) for v in range(1, n) for u in range(v)]


def rows_for_range(n: int, start: int, stop: int) -> np.ndarray:
    """Adjacency bitrows (one uint8 per vertex) for masks start..stop-1."""
    masks = np.arange(start, stop, dtype=np.int64)
    rows = np.zeros((stop - start, n), dtype=np.uint8)
    for b, (u, v) in enumerate(pair_list(n)):
        bit = ((masks >> b) & 1).astype(np.uint8)
        rows[:, u] |= bit << v
        rows[:, v] |= bit << u
    return rows


def adjacency_batch(rows: np.ndarray, n: int) -> np.ndarray:
    a = np.empty((rows.shape[0], n, n), dtype=np.float64)
    for v in range(n):
        a[:, :, v] = (rows >> v) & 1
    return a


def mu_for_range(n: int, start: int, stop: int) -> np.ndarray:
    """Spectral radius of every mask in the range, batched eigensolves."""
    out = np.empty(stop - start, dtype=np.float64)
    for a in range(start, stop, CHUNK):
        b = min(a + CHUNK, stop)
        rows = rows_for_range(n, a, b)
        out[a - start : b - start] = np.linalg.eigvalsh(adjacency_batch(rows, n))[:, -1]
    return out


def ensure_mu_table(n: int) -> np.ndarray:
    if n not in _MU_TABLES:
        total = 1 << (n * (n - 1) // 2)
        _MU_TABLES[n] = mu_for_range(n, 0, total)
    return _MU_TABLES[n]


def mu_slice(n: int, start: int, stop: int) -> np.ndarray:
    table = _MU_TABLES.get(n)
    if table is not None:
        return table[start:stop]
    return mu_for_range(n, start, stop)


# ---------------------------------------------------------------------------
# Subset masks for clique tests


def _subset_edge_masks(n: int, size: int) -> list[int]:
    masks = []
    for sub in combinations(range(n), size):
        need = 0
        for i, u in enumerate(sub):
            for v in sub[i + 1 :]:
                need |= 1 << edge_bit_index(u, v)
        masks.append(need)
    return masks


def contains_clique_vec(n: int, masks: np.ndarray, size: int) -> np.ndarray:
    out = np.zeros(masks.shape, dtype=bool)
    if size > n:
        return out
    for need in _subset_edge_masks(n, size):
        out |= (masks & need) == need
    return out


def count_cliques_vec(n: int, masks: np.ndarray, size: int) -> np.ndarray:
    counts = np.zeros(masks.shape, dtype=np.int64)
    if size > n:
        return counts
    if size == 2:
        return np.bitwise_count(masks).astype(np.int64)
    for need in _subset_edge_masks(n, size):
        counts += (masks & need) == need
    return counts


# ---------------------------------------------------------------------------
# Shared violation detail strings (the per-graph path formats identically)


def detail_bound(mu: float, bound: float) -> str:
    return f"spectral radius {mu:.12g} exceeds bound {bound:.12g}"


def detail_turan_gap(gap: float) -> str:
    return f"turan labeling but |mu gap| = {abs(gap):.3g} above tolerance"


def detail_zykov(s: int, ks: int, kt: int) -> str:
    return f"clique count k_{s} = {ks} not strictly below turan count {kt}"


def detail_polyn(residual: float) -> str:
    return f"clique polynomial residual {residual:.6g} below tolerance"


def detail_th2(gap: float, threshold: float, branch: str) -> str:
    return f"gap {gap:.12g} not above threshold {threshold:.12g} ({branch})"


def detail_rowsum(vertex: int, value: int) -> str:
    return f"row sum {value} positive at vertex {vertex}"


def detail_lambda(lam: float) -> str:
    return f"lambda {lam:.6g} positive"


def detail_mismatch(tight: bool, case_positive: bool) -> str:
    return f"tightness/equality-case mismatch (tight={tight}, case={case_positive})"


# ---------------------------------------------------------------------------
# Per-chunk scans.  Violations and near-ties carry raw masks; the campaign
# driver converts them to graph6.


@dataclass
class ScanPartial:
    applicable: int = 0
    exceptions: int = 0
    violations: list[tuple[int, str]] = field(default_factory=list)
    near_ties: list[tuple[int, float]] = field(default_factory=list)


def scan_th1(n: int, r: int, tol: float, start: int, stop: int,
             mu: np.ndarray) -> ScanPartial:
    part = ScanPartial()
    if n < 2:
        return part
    masks = np.arange(start, stop, dtype=np.int64)
    free = ~contains_clique_vec(n, masks, r + 1)
    part.applicable = int(free.sum())
    if part.applicable == 0:
        return part

    ks = {s: count_cliques_vec(n, masks, s) for s in range(2, r + 1)}
    kt = {s: turan_clique_count(r, n, s) for s in range(2, r + 1)}
    mu_t = turan_spectral_radius(r, n)
    gap = mu_t - mu

    mur = mu**r
    resid = -mur
    for s in range(2, r + 1):
        resid = resid + (s - 1) * ks[s] * mu ** (r - s)
    polyn_bad = free & (resid < -POLY_RESIDUAL_TOL * np.maximum(1.0, mur))

    nonstrict = np.zeros(masks.shape, dtype=bool)
    if n >= r:
        for s in range(2, r + 1):
            nonstrict |= ks[s] >= kt[s]
        nonstrict &= free

    candidates = free & ((gap <= tol) | nonstrict)
    for idx in np.nonzero(candidates)[0]:
        mask = start + int(idx)
        g = from_edge_mask(n, mask)
        if is_turan(g, r):
            part.exceptions += 1
            if abs(float(gap[idx])) > tol:
                part.violations.append((mask, detail_turan_gap(float(gap[idx]))))
        else:
            if gap[idx] < -tol:
                part.violations.append((mask, detail_bound(float(mu[idx]), mu_t)))
            elif abs(float(gap[idx])) <= tol:
                part.near_ties.append((mask, float(gap[idx])))
            if n >= r:
                for s in range(2, r + 1):
                    if ks[s][idx] >= kt[s]:
                        part.violations.append(
                            (mask, detail_zykov(s, int(ks[s][idx]), kt[s]))
                        )
    for idx in np.nonzero(polyn_bad)[0]:
        part.violations.append((start + int(idx), detail_polyn(float(resid[idx]))))
    return part


def scan_th2(n: int, tol: float, start: int, stop: int,
             mu: np.ndarray) -> ScanPartial:
    part = ScanPartial()
    if n < 4:
        return part
    rows = rows_for_range(n, start, stop)
    deg = np.bitwise_count(rows).astype(np.int64)
    dmax = deg.max(axis=1)
    dmin = deg.min(axis=1)
    irregular = dmax > dmin
    part.applicable = int(irregular.sum())
    if part.applicable == 0:
        return part

    m2 = deg.sum(axis=1)
    gap = mu - m2 / n
    single_max = (deg == dmax[:, None]).sum(axis=1) == 1
    single_min = (deg == dmin[:, None]).sum(axis=1) == 1
    subreg = irregular & (dmax - dmin == 1) & (single_max | single_min)
    threshold = np.where(subreg, 1.0 / (n * dmax + 2 * n), 1.0 / (m2 + 2 * n))
    margin = gap - threshold

    part.exceptions = int(subreg.sum())
    for idx in np.nonzero(irregular & (margin < -tol))[0]:
        branch = "subregular" if subreg[idx] else "general"
        part.violations.append(
            (start + int(idx), detail_th2(float(gap[idx]), float(threshold[idx]), branch))
        )
    near = irregular & (margin >= -tol) & (np.abs(margin) <= tol)
    for idx in np.nonzero(near)[0]:
        part.near_ties.append((start + int(idx), float(margin[idx])))
    return part


def scan_th3(n: int, k: int, l: int, tol: float, start: int, stop: int,
             mu: np.ndarray) -> ScanPartial:
    part = ScanPartial()
    masks = np.arange(start, stop, dtype=np.int64)
    rows = rows_for_range(n, start, stop)
    deg = np.bitwise_count(rows).astype(np.int64)
    size = stop - start

    bookmax = np.zeros(size, dtype=np.int64)
    anymax = np.zeros(size, dtype=np.int64)
    pair_ok = np.ones(size, dtype=bool)
    nbsum = np.zeros((size, n), dtype=np.int64)
    for b, (u, v) in enumerate(pair_list(n)):
        cn = np.bitwise_count(rows[:, u] & rows[:, v]).astype(np.int64)
        adj = ((masks >> b) & 1).astype(bool)
        np.maximum(anymax, cn, out=anymax)
        np.maximum(bookmax, np.where(adj, cn, 0), out=bookmax)
        pair_ok &= np.where(adj, cn == k, cn == l)
        nbsum[:, u] += np.where(adj, deg[:, v], 0)
        nbsum[:, v] += np.where(adj, deg[:, u], 0)

    free = (bookmax <= k) & (anymax <= l)
    part.applicable = int(free.sum())
    if part.applicable == 0:
        return part

    row_max = (nbsum - (k + 1) * deg - (n - 1 - deg) * l).max(axis=1)
    lam = mu * mu - (k + 1 - l) * mu - (n - 1) * l
    dmax = deg.max(axis=1)
    bound = np.minimum(dmax.astype(np.float64), _degree_biclique_root(n, k, l))
    slack = bound - mu
    tight = free & (np.abs(slack) <= tol)

    quad = dmax * dmax - dmax * (k - l + 1)
    case1 = (dmax == deg.min(axis=1)) & (quad <= l * (n - 1))
    case2 = (quad > l * (n - 1)) & pair_ok
    case_positive = free & (case1 | case2)

    part.exceptions = int(tight.sum())
    for idx in np.nonzero(free & (mu > bound + tol))[0]:
        part.violations.append(
            (start + int(idx), detail_bound(float(mu[idx]), float(bound[idx])))
        )
    for idx in np.nonzero(free & (row_max > 0))[0]:
        mask = start + int(idx)
        sums = nbsum[idx] - (k + 1) * deg[idx] - (n - 1 - deg[idx]) * l
        vertex = int(np.argmax(sums))
        part.violations.append((mask, detail_rowsum(vertex, int(sums[vertex]))))
    for idx in np.nonzero(free & (lam > tol))[0]:
        part.violations.append((start + int(idx), detail_lambda(float(lam[idx]))))
    for idx in np.nonzero(free & (tight != case_positive))[0]:
        mask = start + int(idx)
        if is_connected(from_edge_mask(n, mask)):
            part.violations.append(
                (mask, detail_mismatch(bool(tight[idx]), bool(case_positive[idx])))
            )
    return part
