"""Exact clique counting and the clique-count comparisons behind the
spectral dominance of the balanced complete multipartite graph.

All counts are exact integers (bitset candidate recursion); the Zykov
comparison is a strict integer inequality and must never be decided by
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, is_turan, turan_part_sizes
from .spectra import _elementary_symmetric

__all__ = [
    "CliqueCounts",
    "count_cliques",
    "clique_counts",
    "clique_number",
    "has_clique",
    "is_clique_free",
    "turan_clique_count",
    "clique_poly_residual",
    "zykov_check",
]

# slack allowed on the clique-count polynomial residual, scaled by mu^r
POLY_RESIDUAL_TOL = 1e-7


@dataclass(frozen=True)
class CliqueCounts:
    """counts[s-1] is the number of s-vertex complete subgraphs, s = 1..n;
    omega is the clique number (largest s with a nonzero count)."""

    counts: tuple[int, ...]
    omega: int


def count_cliques(g: Graph, s: int) -> int:
    """Number of s-vertex complete subgraphs, exactly."""
    if not 1 <= s <= g.n:
        raise ValueError(f"clique size {s} out of range 1..{g.n}")
    return _count_size(g.rows, (1 << g.n) - 1, s)


def _count_size(rows: tuple[int, ...], cand: int, s: int) -> int:
    if s == 1:
        return cand.bit_count()
    total = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        if cand.bit_count() + 1 < s:
            break
        total += _count_size(rows, cand & rows[v], s - 1)
    return total


def clique_counts(g: Graph) -> CliqueCounts:
    """All clique counts at once by enumerating every clique; exponential on
    dense graphs, intended for small orders."""
    counts = [0] * (g.n + 1)
    rows = g.rows

    def walk(cand: int, size: int) -> None:
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            counts[size + 1] += 1
            walk(cand & rows[v], size + 1)

    walk((1 << g.n) - 1, 0)
    omega = max((s for s in range(1, g.n + 1) if counts[s]), default=0)
    return CliqueCounts(counts=tuple(counts[1:]), omega=omega)


def has_clique(g: Graph, size: int) -> bool:
    """True iff the graph contains a complete subgraph of the given order."""
    if size <= 0:
        raise ValueError("clique size must be positive")
    if size == 1:
        return True
    if size > g.n:
        return False
    rows = g.rows

    def expand(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand:
            if cand.bit_count() < need:
                return False
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if expand(cand & rows[v], need - 1):
                return True
        return False

    return expand((1 << g.n) - 1, size)


def clique_number(g: Graph) -> int:
    rows = g.rows
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(cand & rows[v], size + 1)

    expand((1 << g.n) - 1, 0)
    return best


def is_clique_free(g: Graph, r: int) -> bool:
    """True iff the graph has no complete subgraph on r + 1 vertices,
    i.e. its clique number is at most r."""
    if r < 1:
        raise ValueError("need r >= 1")
    return not has_clique(g, r + 1)


def turan_clique_count(r: int, n: int, s: int) -> int:
    """s-clique count of the balanced complete r-partite graph on n
    vertices: the elementary symmetric function e_s of the part sizes.
    Returns 0 for s > r (no such clique exists)."""
    if s < 1:
        raise ValueError("need s >= 1")
    if s > r:
        return 0
    es = _elementary_symmetric(turan_part_sizes(r, n))
    return es[s] if s < len(es) else 0


def clique_poly_residual(g: Graph, r: int) -> float:
    """Slack of mu^r <= sum_{s=2}^{r} (s-1) k_s(G) mu^{r-s}, which holds for
    every graph with clique number at most r.

    Returns sum_{s} (s-1) k_s mu^{r-s} - mu^r; the contract is that this is
    >= -POLY_RESIDUAL_TOL * max(1, mu^r).
    """
    if not is_clique_free(g, r):
        raise ValueError(f"graph contains a K_{r + 1}")
    from .spectra import spectral_radius

    mu = spectral_radius(g)
    acc = 0.0
    for s in range(2, r + 1):
        ks = count_cliques(g, s) if s <= g.n else 0
        acc += (s - 1) * ks * mu ** (r - s)
    return acc - mu**r


def zykov_check(g: Graph, r: int) -> str:
    """Compare k_s(G) against the balanced complete r-partite counts for
    s = 2..r, exact integers.

    Returns "exception" when G is that extremal graph itself, "strict" when
    every count is strictly smaller, and "violation" otherwise (which the
    underlying theorem says cannot happen for K_{r+1}-free graphs).
    """
    if g.n < r:
        raise ValueError(f"need n >= r, got n={g.n}, r={r}")
    if not is_clique_free(g, r):
        raise ValueError(f"graph contains a K_{r + 1}")
    if is_turan(g, r):
        return "exception"
    for s in range(2, r + 1):
        ks = count_cliques(g, s) if s <= g.n else 0
        if ks >= turan_clique_count(r, g.n, s):
            return "violation"
    return "strict"
