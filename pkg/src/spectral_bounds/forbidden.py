"""Books and bicliques via common-neighbor counts.

A book with k+1 pages is present iff some adjacent pair has more than k
common neighbors; a K_{2,l+1} subgraph is present iff some pair (adjacent
or not) has more than l common neighbors.  Both predicates, the per-vertex
counting inequality, and the row sums of C = A^2 - (k+1-l)A - (n-1)l I are
exact integer computations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .graphs import Graph, is_connected

__all__ = [
    "CommonNeighborStats",
    "CountingInequality",
    "CMatrixReport",
    "EqualityCase",
    "common_neighbors",
    "common_neighbor_stats",
    "book_free",
    "biclique_free",
    "counting_inequality_check",
    "c_matrix_report",
    "equality_case",
]


@dataclass(frozen=True)
class CommonNeighborStats:
    """max_adjacent is the book number bound (largest common-neighbor count
    over adjacent pairs); max_any ranges over all pairs."""

    max_adjacent: int
    max_any: int
    per_pair: Optional[dict[tuple[int, int], int]] = None


@dataclass(frozen=True)
class CountingInequality:
    lhs: int
    rhs: int
    holds: bool


@dataclass(frozen=True)
class CMatrixReport:
    """Row sums of C = A^2 - (k+1-l)A - (n-1)l I, exact integers, together
    with lam = mu^2 - (k+1-l)mu - (n-1)l, the eigenvalue of C attached to
    the principal eigenvector."""

    k: int
    l: int
    row_sums: tuple[int, ...]
    lam: float
    all_nonpositive: bool


class EqualityCase(str, Enum):
    CASE_I = "case-i"
    CASE_II = "case-ii"
    NOT_TIGHT = "not-tight"


def common_neighbors(g: Graph, u: int, v: int) -> int:
    if u == v:
        raise ValueError("common neighbors undefined for a vertex with itself")
    return (g.rows[u] & g.rows[v]).bit_count()


def common_neighbor_stats(g: Graph, include_pairs: bool = False) -> CommonNeighborStats:
    max_adj = 0
    max_any = 0
    pairs = {} if include_pairs else None
    for v in range(g.n):
        for u in range(v):
            cn = (g.rows[u] & g.rows[v]).bit_count()
            max_any = max(max_any, cn)
            if g.rows[u] >> v & 1:
                max_adj = max(max_adj, cn)
            if pairs is not None:
                pairs[(u, v)] = cn
    return CommonNeighborStats(max_adjacent=max_adj, max_any=max_any, per_pair=pairs)


def book_free(g: Graph, k: int) -> bool:
    """No k+1 triangles on a shared edge: every adjacent pair has at most k
    common neighbors."""
    if k < 0:
        raise ValueError("need k >= 0")
    for v in range(g.n):
        row = g.rows[v]
        seen = row & ((1 << v) - 1)
        while seen:
            u = (seen & -seen).bit_length() - 1
            seen &= seen - 1
            if (g.rows[u] & row).bit_count() > k:
                return False
    return True


def biclique_free(g: Graph, l: int) -> bool:
    """No K_{2,l+1} subgraph: every vertex pair has at most l common
    neighbors."""
    if l < 0:
        raise ValueError("need l >= 0")
    for v in range(g.n):
        for u in range(v):
            if (g.rows[u] & g.rows[v]).bit_count() > l:
                return False
    return True


def _neighbor_degree_sum(g: Graph, u: int) -> int:
    return sum(g.rows[v].bit_count() for v in _vertices(g.rows[u]))


def _vertices(mask: int):
    while mask:
        yield (mask & -mask).bit_length() - 1
        mask &= mask - 1


def counting_inequality_check(g: Graph, u: int, k: int, l: int) -> CountingInequality:
    """Per-vertex count: sum over neighbors v of (d(v) - k - 1) against
    (n - d(u) - 1) * l.  Under book- and biclique-freeness the left side
    counts edges leaving the neighborhood and can never exceed the right."""
    if not book_free(g, k):
        raise ValueError(f"graph has an edge with more than {k} common neighbors")
    if not biclique_free(g, l):
        raise ValueError(f"graph has a pair with more than {l} common neighbors")
    d = g.degree(u)
    lhs = _neighbor_degree_sum(g, u) - (k + 1) * d
    rhs = (g.n - d - 1) * l
    return CountingInequality(lhs=lhs, rhs=rhs, holds=lhs <= rhs)


def c_matrix_report(g: Graph, k: int, l: int) -> CMatrixReport:
    """Row sums of A^2 - (k+1-l)A - (n-1)l I via the degree identity
    row_sum(u) = sum_{v ~ u} (d(v) - k - 1) - (n - 1 - d(u)) l, in exact
    integer arithmetic.  Computed unconditionally; nonpositivity is only
    guaranteed under the freeness preconditions."""
    from .spectra import spectral_radius

    n = g.n
    sums = []
    for u in range(n):
        d = g.degree(u)
        sums.append(_neighbor_degree_sum(g, u) - (k + 1) * d - (n - 1 - d) * l)
    mu = spectral_radius(g)
    lam = mu * mu - (k + 1 - l) * mu - (n - 1) * l
    return CMatrixReport(
        k=k,
        l=l,
        row_sums=tuple(sums),
        lam=lam,
        all_nonpositive=all(s <= 0 for s in sums),
    )


def equality_case(g: Graph, k: int, l: int) -> EqualityCase:
    """Classify when the degree/biclique spectral bound can be attained by a
    connected graph.

    CASE_I:  Delta^2 - Delta(k-l+1) <= l(n-1) and the graph is regular
             (the bound collapses to mu = Delta).
    CASE_II: Delta^2 - Delta(k-l+1) >  l(n-1) and every adjacent pair has
             exactly k common neighbors, every non-adjacent pair exactly l.
    Anything else is NOT_TIGHT.
    """
    if not is_connected(g):
        raise ValueError("equality classification requires a connected graph")
    if not book_free(g, k):
        raise ValueError(f"graph has an edge with more than {k} common neighbors")
    if not biclique_free(g, l):
        raise ValueError(f"graph has a pair with more than {l} common neighbors")
    degs = g.degrees()
    dmax = max(degs)
    if dmax * dmax - dmax * (k - l + 1) <= l * (g.n - 1):
        return EqualityCase.CASE_I if min(degs) == dmax else EqualityCase.NOT_TIGHT
    for v in range(g.n):
        for u in range(v):
            cn = (g.rows[u] & g.rows[v]).bit_count()
            want = k if g.rows[u] >> v & 1 else l
            if cn != want:
                return EqualityCase.NOT_TIGHT
    return EqualityCase.CASE_II
