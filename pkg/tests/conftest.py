"""Shared brute-force oracles, independent of the library's fast paths."""

from __future__ import annotations

import math
from collections import Counter
from itertools import combinations

import numpy as np

from spectral_bounds import Graph
from spectral_bounds.graphs import turan_part_sizes


def bf_count_cliques(g: Graph, s: int) -> int:
    """Count s-cliques by checking every s-subset."""
    return sum(
        1
        for sub in combinations(range(g.n), s)
        if all(g.has_edge(u, v) for u, v in combinations(sub, 2))
    )


def bf_clique_number(g: Graph) -> int:
    for s in range(g.n, 0, -1):
        if bf_count_cliques(g, s):
            return s
    return 0


def bf_common_neighbors(g: Graph, u: int, v: int) -> int:
    return sum(1 for w in range(g.n) if w not in (u, v) and g.has_edge(u, w) and g.has_edge(v, w))


def bf_spectral_radius(g: Graph, iters: int = 20000) -> float:
    """Shifted power iteration; independent of the LAPACK eigensolver."""
    if g.m == 0:
        return 0.0
    n = g.n
    b = g.adjacency_matrix() + n * np.eye(n)
    v = np.ones(n) / math.sqrt(n)
    for _ in range(iters):
        w = b @ v
        w /= np.linalg.norm(w)
        if np.linalg.norm(w - v) < 1e-14:
            v = w
            break
        v = w
    return float(v @ (b @ v)) - n


def labeled_turan_copies(r: int, n: int) -> int:
    """Number of labeled graphs isomorphic to the balanced complete
    r-partite graph: the multinomial over parts, divided by the
    permutations of equal-size parts."""
    sizes = [s for s in turan_part_sizes(r, n) if s > 0]
    total = math.factorial(n)
    for s in sizes:
        total //= math.factorial(s)
    for mult in Counter(sizes).values():
        total //= math.factorial(mult)
    return total
