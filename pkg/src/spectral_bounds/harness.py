"""Verification campaigns over exhaustive small-graph enumeration or
graph6 catalogs.

A campaign applies one theorem's check to every graph that meets its
preconditions and aggregates violations, near-ties and exception cases
into a VerificationRecord with a stable JSON form.  Built-in enumeration
covers every labeled graph up to 7 vertices (vectorized mask kernels);
anything larger arrives as a graph6 file and goes through the per-graph
API, which the kernels mirror exactly.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import _kernels
from ._kernels import (
    detail_bound,
    detail_lambda,
    detail_mismatch,
    detail_polyn,
    detail_rowsum,
    detail_th2,
    detail_turan_gap,
    detail_zykov,
)
from .bounds import _degree_biclique_root
from .cliques import (
    POLY_RESIDUAL_TOL,
    count_cliques,
    is_clique_free,
    turan_clique_count,
)
from .forbidden import EqualityCase, biclique_free, book_free, equality_case
from .graphs import Graph, from_edge_mask, from_graph6, is_connected, is_turan, to_graph6
from .spectra import spectral_radius, turan_spectral_radius

__all__ = [
    "CampaignConfig",
    "VerificationRecord",
    "enumerate_labeled",
    "ingest_graph6",
    "run_campaign",
]

ENUM_MAX_N = _kernels.ENUM_MAX_N
THREADS_ENV_VAR = "SPECTRAL_BOUNDS_THREADS"


@dataclass(frozen=True)
class CampaignConfig:
    """What to verify and over which graph stream.

    source is either "enumeration" (all labeled graphs, n_min..n_max) or a
    path to a file of newline-separated graph6 strings.
    """

    theorem: int
    r: Optional[int] = None
    k: Optional[int] = None
    l: Optional[int] = None
    n_min: int = 1
    n_max: int = ENUM_MAX_N
    source: str = "enumeration"
    tolerance: float = 1e-9
    parallelism: int = 1

    def __post_init__(self):
        if self.theorem not in (1, 2, 3):
            raise ValueError(f"unknown theorem selector {self.theorem}")
        if not 1e-12 <= self.tolerance <= 1e-6:
            raise ValueError("tolerance must lie in [1e-12, 1e-6]")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")
        if self.source == "enumeration":
            if not 1 <= self.n_min <= self.n_max:
                raise ValueError("need 1 <= n_min <= n_max")
            if self.n_max > ENUM_MAX_N:
                raise ValueError(
                    f"built-in enumeration is capped at n={ENUM_MAX_N}; "
                    "ingest a graph6 catalog for larger orders"
                )
        if self.theorem == 1 and (self.r is None or self.r < 2):
            raise ValueError("theorem 1 needs r >= 2")
        if self.theorem == 3:
            if self.k is None or self.l is None or not 0 <= self.k <= self.l:
                raise ValueError("theorem 3 needs 0 <= k <= l")

    @property
    def params(self) -> tuple[int, ...]:
        if self.theorem == 1:
            return (self.r,)
        if self.theorem == 3:
            return (self.k, self.l)
        return ()


@dataclass
class VerificationRecord:
    campaign: str
    params: tuple[int, ...]
    source: str
    n_min: Optional[int]
    n_max: Optional[int]
    tolerance: float
    graphs_checked: int
    graphs_applicable: int
    exceptions_seen: int
    violations: list[tuple[str, str]] = field(default_factory=list)
    near_ties: list[tuple[str, float]] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "campaign": self.campaign,
            "params": list(self.params),
            "source": self.source,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "tolerance": self.tolerance,
            "graphs_checked": self.graphs_checked,
            "graphs_applicable": self.graphs_applicable,
            "exceptions_seen": self.exceptions_seen,
            "violations": [[g6, detail] for g6, detail in self.violations],
            "near_ties": [[g6, gap] for g6, gap in self.near_ties],
            "wall_time": self.wall_time,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


# ---------------------------------------------------------------------------
# Graph streams


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices, in edge-mask order."""
    if not 1 <= n <= ENUM_MAX_N:
        raise ValueError(
            f"labeled enumeration supports 1 <= n <= {ENUM_MAX_N}; "
            "ingest a graph6 catalog for larger orders"
        )
    for mask in range(1 << (n * (n - 1) // 2)):
        yield from_edge_mask(n, mask)


def ingest_graph6(path) -> Iterator[Graph]:
    """Graphs from a file of newline-separated graph6 strings, in file
    order; blank lines are skipped, malformed lines abort with their
    line number."""
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                yield from_graph6(line)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None


# ---------------------------------------------------------------------------
# Per-graph checkers.  These mirror the vectorized kernels step for step so
# that file-sourced and enumerated campaigns produce identical records.


@dataclass
class _GraphOutcome:
    applicable: bool = False
    exception: bool = False
    details: list[str] = field(default_factory=list)
    near_tie: Optional[float] = None


def _check_th1(g: Graph, r: int, tol: float) -> _GraphOutcome:
    out = _GraphOutcome()
    if g.n < 2 or not is_clique_free(g, r):
        return out
    out.applicable = True
    ks = {s: (count_cliques(g, s) if s <= g.n else 0) for s in range(2, r + 1)}
    mu = spectral_radius(g)
    mu_t = turan_spectral_radius(r, g.n)
    gap = mu_t - mu
    if is_turan(g, r):
        out.exception = True
        if abs(gap) > tol:
            out.details.append(detail_turan_gap(gap))
    else:
        if gap < -tol:
            out.details.append(detail_bound(mu, mu_t))
        elif abs(gap) <= tol:
            out.near_tie = gap
        if g.n >= r:
            for s in range(2, r + 1):
                kt = turan_clique_count(r, g.n, s)
                if ks[s] >= kt:
                    out.details.append(detail_zykov(s, ks[s], kt))
    resid = -(mu**r)
    for s in range(2, r + 1):
        resid = resid + (s - 1) * ks[s] * mu ** (r - s)
    if resid < -POLY_RESIDUAL_TOL * max(1.0, mu**r):
        out.details.append(detail_polyn(resid))
    return out


def _check_th2(g: Graph, tol: float) -> _GraphOutcome:
    out = _GraphOutcome()
    if g.n < 4:
        return out
    degs = g.degrees()
    dmax, dmin = max(degs), min(degs)
    if dmax == dmin:
        return out
    out.applicable = True
    n = g.n
    gap = spectral_radius(g) - sum(degs) / n
    subreg = dmax - dmin == 1 and (degs.count(dmax) == 1 or degs.count(dmin) == 1)
    if subreg:
        out.exception = True
        threshold = 1.0 / (n * dmax + 2 * n)
    else:
        threshold = 1.0 / (sum(degs) + 2 * n)
    margin = gap - threshold
    if margin < -tol:
        out.details.append(detail_th2(gap, threshold, "subregular" if subreg else "general"))
    elif abs(margin) <= tol:
        out.near_tie = margin
    return out


def _check_th3(g: Graph, k: int, l: int, tol: float) -> _GraphOutcome:
    out = _GraphOutcome()
    if not (book_free(g, k) and biclique_free(g, l)):
        return out
    out.applicable = True
    n = g.n
    degs = g.degrees()
    dmax = max(degs)
    mu = spectral_radius(g)
    bound = min(float(dmax), _degree_biclique_root(n, k, l))
    slack = bound - mu
    tight = abs(slack) <= tol
    out.exception = tight
    if mu > bound + tol:
        out.details.append(detail_bound(mu, bound))
    sums = [
        sum(g.degree(v) for v in g.neighbors(u)) - (k + 1) * degs[u] - (n - 1 - degs[u]) * l
        for u in range(n)
    ]
    worst = max(range(n), key=lambda u: sums[u])
    if sums[worst] > 0:
        out.details.append(detail_rowsum(worst, sums[worst]))
    lam = mu * mu - (k + 1 - l) * mu - (n - 1) * l
    if lam > tol:
        out.details.append(detail_lambda(lam))
    if is_connected(g):
        case_positive = equality_case(g, k, l) is not EqualityCase.NOT_TIGHT
        if tight != case_positive:
            out.details.append(detail_mismatch(tight, case_positive))
    return out


def _check_graph(theorem: int, g: Graph, config: CampaignConfig) -> _GraphOutcome:
    if theorem == 1:
        return _check_th1(g, config.r, config.tolerance)
    if theorem == 2:
        return _check_th2(g, config.tolerance)
    return _check_th3(g, config.k, config.l, config.tolerance)


# ---------------------------------------------------------------------------
# Campaign driver


def _scan_chunk(theorem: int, n: int, params: tuple, tol: float,
                start: int, stop: int) -> _kernels.ScanPartial:
    mu = _kernels.mu_slice(n, start, stop)
    if theorem == 1:
        return _kernels.scan_th1(n, params[0], tol, start, stop, mu)
    if theorem == 2:
        return _kernels.scan_th2(n, tol, start, stop, mu)
    return _kernels.scan_th3(n, params[0], params[1], tol, start, stop, mu)


def _effective_parallelism(config: CampaignConfig) -> int:
    env = os.environ.get(THREADS_ENV_VAR)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"{THREADS_ENV_VAR} must be an integer, got {env!r}") from None
    return config.parallelism


def run_campaign(config: CampaignConfig) -> VerificationRecord:
    """Apply the configured theorem's check to every graph in the stream.

    Results are deterministic: identical configs yield identical records
    (up to wall_time) regardless of parallelism degree, and violations /
    near-ties are sorted by (graph6, detail).
    """
    t0 = time.perf_counter()
    checked = applicable = exceptions = 0
    violations: list[tuple[str, str]] = []
    near_ties: list[tuple[str, float]] = []

    if config.source == "enumeration":
        workers = _effective_parallelism(config)
        for n in range(config.n_min, config.n_max + 1):
            total = 1 << (n * (n - 1) // 2)
            checked += total
            chunks = [
                (a, min(a + _kernels.CHUNK, total))
                for a in range(0, total, _kernels.CHUNK)
            ]
            if workers > 1 and len(chunks) > 1:
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    parts = list(
                        pool.map(
                            _scan_chunk,
                            *zip(*[
                                (config.theorem, n, config.params, config.tolerance, a, b)
                                for a, b in chunks
                            ]),
                        )
                    )
            else:
                _kernels.ensure_mu_table(n)
                parts = [
                    _scan_chunk(config.theorem, n, config.params, config.tolerance, a, b)
                    for a, b in chunks
                ]
            for part in parts:
                applicable += part.applicable
                exceptions += part.exceptions
                violations.extend(
                    (to_graph6(from_edge_mask(n, mask)), detail)
                    for mask, detail in part.violations
                )
                near_ties.extend(
                    (to_graph6(from_edge_mask(n, mask)), gap)
                    for mask, gap in part.near_ties
                )
        n_min, n_max = config.n_min, config.n_max
    else:
        for g in ingest_graph6(config.source):
            checked += 1
            out = _check_graph(config.theorem, g, config)
            if out.applicable:
                applicable += 1
            if out.exception:
                exceptions += 1
            if out.details or out.near_tie is not None:
                g6 = to_graph6(g)
                violations.extend((g6, d) for d in out.details)
                if out.near_tie is not None:
                    near_ties.append((g6, out.near_tie))
        n_min = n_max = None

    violations.sort()
    near_ties.sort()
    return VerificationRecord(
        campaign=f"theorem-{config.theorem}",
        params=config.params,
        source=config.source,
        n_min=n_min,
        n_max=n_max,
        tolerance=config.tolerance,
        graphs_checked=checked,
        graphs_applicable=applicable,
        exceptions_seen=exceptions,
        violations=violations,
        near_ties=near_ties,
        wall_time=time.perf_counter() - t0,
    )
