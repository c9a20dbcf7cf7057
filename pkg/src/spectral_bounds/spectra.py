"""Adjacency spectra: eigenvalues, spectral radius, quotient-matrix bounds,
and closed forms for a few named families.

The spectral radius mu(G) is the largest adjacency eigenvalue; it is
nonnegative and at least |lambda| for every other eigenvalue of a graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graphs import Graph, _components_of_rows, turan_part_sizes

__all__ = [
    "Spectrum",
    "QuotientBound",
    "eigenvalues_symmetric",
    "spectrum",
    "spectral_radius",
    "principal_eigenvector",
    "turan_spectral_radius",
    "complete_minus_edge_mu",
    "matching_complement_mu",
    "quotient_bound",
]

SYMMETRY_TOL = 1e-12
_ROOT_TOL = 1e-11
_ROOT_MAX_ITER = 200


@dataclass(frozen=True)
class Spectrum:
    """All adjacency eigenvalues in descending order; mu is the largest."""

    eigenvalues: tuple[float, ...]
    mu: float
    principal_vector: Optional[np.ndarray] = None


@dataclass(frozen=True)
class QuotientBound:
    """Largest eigenvalue of the 2x2 quotient matrix of the partition
    {u} / V-minus-u; by interlacing it never exceeds mu(G)."""

    pivot_vertex: int
    quotient_matrix: tuple[tuple[float, float], tuple[float, float]]
    lambda_max: float


def eigenvalues_symmetric(matrix) -> np.ndarray:
    """Eigenvalues of a dense symmetric real matrix, sorted descending."""
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise ValueError("empty matrix has no spectrum")
    if np.abs(a - a.T).max() > SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric within 1e-12")
    return np.linalg.eigvalsh(a)[::-1].copy()


def spectral_radius(g: Graph) -> float:
    """Largest adjacency eigenvalue; 0 for edgeless graphs."""
    if g.m == 0:
        return 0.0
    return float(np.linalg.eigvalsh(g.adjacency_matrix())[-1])


def principal_eigenvector(g: Graph) -> np.ndarray:
    """Nonnegative unit eigenvector for mu(G).

    For disconnected graphs the vector is supported on one component of
    maximum spectral radius (ties broken by smallest vertex), where it is
    the positive Perron vector of that component.
    """
    comps = _components_of_rows(g.rows, g.n)
    best_mu, best_comp = -1.0, None
    for comp in comps:
        verts = _mask_vertices(comp)
        sub = _submatrix(g, verts)
        mu = float(np.linalg.eigvalsh(sub)[-1]) if len(verts) > 1 else 0.0
        if mu > best_mu + 1e-12:
            best_mu, best_comp = mu, verts
    verts = best_comp
    sub = _submatrix(g, verts)
    w, vecs = np.linalg.eigh(sub)
    vec = vecs[:, -1]
    if vec[np.argmax(np.abs(vec))] < 0:
        vec = -vec
    out = np.zeros(g.n)
    out[verts] = vec
    return out


def _mask_vertices(mask: int) -> list[int]:
    verts = []
    while mask:
        verts.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return verts


def _submatrix(g: Graph, verts: list[int]) -> np.ndarray:
    k = len(verts)
    sub = np.zeros((k, k))
    for i, u in enumerate(verts):
        for j, v in enumerate(verts):
            if i != j and g.has_edge(u, v):
                sub[i, j] = 1.0
    return sub


def spectrum(g: Graph, with_vector: bool = False) -> Spectrum:
    eig = eigenvalues_symmetric(g.adjacency_matrix())
    vec = principal_eigenvector(g) if with_vector else None
    return Spectrum(eigenvalues=tuple(float(x) for x in eig), mu=float(eig[0]),
                    principal_vector=vec)


# ---------------------------------------------------------------------------
# Spectral radius of the balanced complete multipartite graph, from its
# characteristic equation x^r = sum_{s=2}^{r} (s-1) k_s x^{r-s}, where k_s
# counts the s-cliques (the elementary symmetric function of part sizes).


def _elementary_symmetric(sizes: tuple[int, ...]) -> list[int]:
    """Coefficients e_0..e_len of prod (1 + size_i z), exact integers."""
    coeffs = [1]
    for s in sizes:
        coeffs.append(0)
        for j in range(len(coeffs) - 1, 0, -1):
            coeffs[j] += coeffs[j - 1] * s
    return coeffs


def turan_spectral_radius(r: int, n: int) -> float:
    """Largest root of the clique-count characteristic equation of the
    balanced complete r-partite graph, by bisection on [2m/n, n-1]."""
    if r < 2:
        raise ValueError("need r >= 2")
    if n < 2:
        raise ValueError("need n >= 2")
    es = _elementary_symmetric(turan_part_sizes(r, n))
    # f(x) = x^r - sum_{s=2}^{r} (s-1) e_s x^{r-s}, as Horner coefficients
    coeffs = [1.0, 0.0]
    for s in range(2, r + 1):
        ks = es[s] if s < len(es) else 0
        coeffs.append(-(s - 1) * ks)

    def f(x: float) -> float:
        acc = 0.0
        for c in coeffs:
            acc = acc * x + c
        return acc

    m = es[2]
    lo, hi = 2.0 * m / n, float(n - 1)
    if hi <= lo:
        return hi  # complete graph: the root sits at n - 1
    if f(lo) > 0.0 or f(hi) < 0.0:
        raise ArithmeticError(f"root bracket [{lo}, {hi}] failed for r={r}, n={n}")
    # iterate past the guaranteed 1e-11 down to float convergence
    for _ in range(_ROOT_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# Closed forms (Finck-Grohmann two-degree formulas)


def complete_minus_edge_mu(n: int) -> float:
    """Spectral radius of the complete graph on n vertices minus one edge."""
    if n < 3:
        raise ValueError("need n >= 3")
    return (n - 3 + math.sqrt(n * n + 2 * n - 7)) / 2


def matching_complement_mu(n: int) -> float:
    """Spectral radius of the complement of an (n/2 - 1)-matching, n even."""
    if n < 4 or n % 2:
        raise ValueError("need even n >= 4")
    return (n - 3 + math.sqrt(n * n - 2 * n + 9)) / 2


# ---------------------------------------------------------------------------
# Single-vertex quotient partition


def quotient_bound(g: Graph, u: int) -> QuotientBound:
    """Quotient matrix of the partition {u} vs. the rest.

    Entry (i, j) is the average number of block-j neighbors over block i:

        [[0,      d(u)/(n-1)          ],
         [d(u),  (2m - 2 d(u))/(n-1) ]]

    Its larger eigenvalue interlaces below mu(G), with equality when the
    partition is equitable.
    """
    n = g.n
    if n < 2:
        raise ValueError("need n >= 2")
    if not 0 <= u < n:
        raise ValueError(f"vertex {u} out of range")
    d = g.degree(u)
    a = d / (n - 1)
    c = (2 * g.m - 2 * d) / (n - 1)
    lam = (c + math.sqrt(c * c + 4 * a * d)) / 2
    return QuotientBound(
        pivot_vertex=u,
        quotient_matrix=((0.0, a), (float(d), c)),
        lambda_max=lam,
    )
