"""Named bounds on the spectral radius and their comparison verdicts.

Strict inequalities are certified with margin STRICT_TOL; exact ties are
resolved structurally (balanced-multipartite test, regularity), never by
floating point alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .cliques import is_clique_free
from .forbidden import EqualityCase, biclique_free, book_free, equality_case
from .graphs import DegreeClass, Graph, degree_profile, is_connected, is_turan
from .spectra import spectral_radius, turan_spectral_radius

__all__ = [
    "STRICT_TOL",
    "Th2Result",
    "Th3Result",
    "BoundVerdict",
    "BoundReport",
    "th1_check",
    "cs_lower",
    "hofmeister_lower",
    "wilf_upper",
    "th2_check",
    "th3_bound",
    "shi_song_bound",
    "th3_check",
    "full_report",
]

STRICT_TOL = 1e-9

BOUND_NAMES = (
    "turan_upper",
    "wilf_upper",
    "cs_lower",
    "hofmeister_lower",
    "th2_gap_threshold",
    "th3_upper",
    "shi_song_upper",
)


def th1_check(g: Graph, r: int, tol: float = STRICT_TOL) -> str:
    """Verdict for mu(G) < mu(T) over K_{r+1}-free graphs, where T is the
    balanced complete r-partite graph of the same order.

    "exception" for the extremal graph itself, "strict" when the gap clears
    the tolerance, "near-tie" when |gap| <= tol, "violation" when mu exceeds
    the bound by more than tol (which the theorem rules out).
    """
    if r < 2:
        raise ValueError("need r >= 2")
    if g.n < 2:
        raise ValueError("need n >= 2")
    if not is_clique_free(g, r):
        raise ValueError(f"graph contains a K_{r + 1}")
    if is_turan(g, r):
        return "exception"
    gap = turan_spectral_radius(r, g.n) - spectral_radius(g)
    if gap > tol:
        return "strict"
    if gap >= -tol:
        return "near-tie"
    return "violation"


def cs_lower(g: Graph) -> float:
    """Average-degree lower bound 2m/n (Collatz-Sinogowitz)."""
    return 2 * g.m / g.n


def hofmeister_lower(g: Graph) -> float:
    """Hofmeister's lower bound sqrt(sum d^2 / n); at least 2m/n."""
    return math.sqrt(sum(d * d for d in g.degrees()) / g.n)


def wilf_upper(r: int, n: int) -> float:
    """Wilf's bound (1 - 1/r) n for K_{r+1}-free graphs."""
    if r < 1:
        raise ValueError("need r >= 1")
    return (1 - 1 / r) * n


@dataclass(frozen=True)
class Th2Result:
    gap: float
    threshold: float
    branch: str  # "general" or "subregular"
    holds: bool


def th2_check(g: Graph) -> Th2Result:
    """Irregularity gap mu - 2m/n against its guaranteed threshold.

    Subregular graphs (one deviating vertex) get 1/(n*Delta + 2n); every
    other irregular graph gets the stronger 1/(2m + 2n).
    """
    if g.n < 4:
        raise ValueError("need n >= 4")
    prof = degree_profile(g)
    if prof.classification is DegreeClass.REGULAR:
        raise ValueError("graph is regular; the gap bound needs an irregular graph")
    gap = spectral_radius(g) - 2 * g.m / g.n
    if prof.classification in (
        DegreeClass.SUBREGULAR_SINGLE_MAX,
        DegreeClass.SUBREGULAR_SINGLE_MIN,
    ):
        branch = "subregular"
        threshold = 1.0 / (g.n * prof.max_degree + 2 * g.n)
    else:
        branch = "general"
        threshold = 1.0 / (2 * g.m + 2 * g.n)
    return Th2Result(gap=gap, threshold=threshold, branch=branch, holds=gap > threshold)


def _degree_biclique_root(n: int, k: int, l: int) -> float:
    """Positive root of x^2 - (k-l+1)x - l(n-1) = 0."""
    b = k - l + 1
    return (b + math.sqrt(b * b + 4 * l * (n - 1))) / 2


def th3_bound(n: int, k: int, l: int, max_degree: int) -> float:
    """min(Delta, positive root of x^2 - (k-l+1)x - l(n-1))."""
    if not 0 <= k <= l:
        raise ValueError("need 0 <= k <= l")
    if not 1 <= max_degree <= n - 1:
        raise ValueError("need 1 <= max_degree <= n - 1")
    return min(float(max_degree), _degree_biclique_root(n, k, l))


def shi_song_bound(n: int, k: int, l: int, max_degree: int) -> float:
    """The Shi-Song bound (k - l + sqrt((k-l)^2 + 4 Delta + 4 l (n-1))) / 2;
    never smaller than th3_bound."""
    if not 0 <= k <= l:
        raise ValueError("need 0 <= k <= l")
    if not 1 <= max_degree <= n - 1:
        raise ValueError("need 1 <= max_degree <= n - 1")
    b = k - l
    return (b + math.sqrt(b * b + 4 * max_degree + 4 * l * (n - 1))) / 2


@dataclass(frozen=True)
class Th3Result:
    mu: float
    bound: float
    slack: float
    holds: bool
    tight: bool


def th3_check(g: Graph, k: int, l: int, tol: float = STRICT_TOL) -> Th3Result:
    """Check mu(G) <= min(Delta, root) for a book- and biclique-free graph."""
    if not 0 <= k <= l:
        raise ValueError("need 0 <= k <= l")
    if not book_free(g, k):
        raise ValueError(f"graph has an edge with more than {k} common neighbors")
    if not biclique_free(g, l):
        raise ValueError(f"graph has a pair with more than {l} common neighbors")
    dmax = max(g.degrees())
    bound = min(float(dmax), _degree_biclique_root(g.n, k, l))
    mu = spectral_radius(g)
    slack = bound - mu
    return Th3Result(
        mu=mu,
        bound=bound,
        slack=slack,
        holds=mu <= bound + tol,
        tight=abs(slack) <= tol,
    )


# ---------------------------------------------------------------------------
# Aggregate report


@dataclass(frozen=True)
class BoundVerdict:
    applicable: bool
    value: Optional[float] = None
    holds: Optional[bool] = None
    slack: Optional[float] = None
    tight: Optional[bool] = None
    exception: Optional[str] = None
    reason: Optional[str] = None

    def to_dict(self) -> dict:
        if not self.applicable:
            return {"applicable": False, "reason": self.reason}
        return {
            "applicable": True,
            "value": self.value,
            "holds": self.holds,
            "slack": self.slack,
            "tight": self.tight,
            "exception": self.exception,
        }


@dataclass(frozen=True)
class BoundReport:
    mu: float
    bounds: dict[str, Optional[float]]
    verdicts: dict[str, BoundVerdict]

    def to_dict(self) -> dict:
        return {
            "mu": self.mu,
            "bounds": {name: self.bounds[name] for name in BOUND_NAMES},
            "verdicts": {name: self.verdicts[name].to_dict() for name in BOUND_NAMES},
        }


def _upper(value: float, mu: float, tol: float, exception: Optional[str]) -> BoundVerdict:
    slack = value - mu
    return BoundVerdict(
        applicable=True,
        value=value,
        holds=mu <= value + tol,
        slack=slack,
        tight=abs(slack) <= tol,
        exception=exception,
    )


def _lower(value: float, mu: float, tol: float, exception: Optional[str]) -> BoundVerdict:
    slack = mu - value
    return BoundVerdict(
        applicable=True,
        value=value,
        holds=mu >= value - tol,
        slack=slack,
        tight=abs(slack) <= tol,
        exception=exception,
    )


def _not_applicable(reason: str) -> BoundVerdict:
    return BoundVerdict(applicable=False, reason=reason)


def full_report(
    g: Graph,
    r: Optional[int] = None,
    k: Optional[int] = None,
    l: Optional[int] = None,
    tol: float = STRICT_TOL,
) -> BoundReport:
    """Evaluate every named bound whose preconditions hold; the rest are
    marked not-applicable with the failing precondition spelled out."""
    mu = spectral_radius(g)
    prof = degree_profile(g)
    verdicts: dict[str, BoundVerdict] = {}

    # clique-number family
    if r is None:
        verdicts["turan_upper"] = _not_applicable("r not supplied")
        verdicts["wilf_upper"] = _not_applicable("r not supplied")
    elif r < 2:
        verdicts["turan_upper"] = _not_applicable("need r >= 2")
        verdicts["wilf_upper"] = _not_applicable("need r >= 2")
    elif g.n < 2:
        verdicts["turan_upper"] = _not_applicable("need n >= 2")
        verdicts["wilf_upper"] = _not_applicable("need n >= 2")
    elif not is_clique_free(g, r):
        reason = f"graph contains a K_{r + 1}"
        verdicts["turan_upper"] = _not_applicable(reason)
        verdicts["wilf_upper"] = _not_applicable(reason)
    else:
        tag = "turan-graph" if is_turan(g, r) else None
        verdicts["turan_upper"] = _upper(turan_spectral_radius(r, g.n), mu, tol, tag)
        verdicts["wilf_upper"] = _upper(wilf_upper(r, g.n), mu, tol, None)

    reg_tag = "regular" if prof.classification is DegreeClass.REGULAR else None
    verdicts["cs_lower"] = _lower(cs_lower(g), mu, tol, reg_tag)
    verdicts["hofmeister_lower"] = _lower(hofmeister_lower(g), mu, tol, reg_tag)

    if prof.classification is DegreeClass.REGULAR:
        verdicts["th2_gap_threshold"] = _not_applicable("graph is regular")
    elif g.n < 4:
        verdicts["th2_gap_threshold"] = _not_applicable("need n >= 4")
    else:
        res = th2_check(g)
        verdicts["th2_gap_threshold"] = BoundVerdict(
            applicable=True,
            value=res.threshold,
            holds=res.holds,
            slack=res.gap - res.threshold,
            tight=abs(res.gap - res.threshold) <= tol,
            exception="subregular" if res.branch == "subregular" else None,
        )

    if k is None or l is None:
        reason = "k and l not supplied"
        verdicts["th3_upper"] = _not_applicable(reason)
        verdicts["shi_song_upper"] = _not_applicable(reason)
    elif not 0 <= k <= l:
        verdicts["th3_upper"] = _not_applicable("need 0 <= k <= l")
        verdicts["shi_song_upper"] = _not_applicable("need 0 <= k <= l")
    elif not book_free(g, k):
        reason = f"an edge has more than {k} common neighbors"
        verdicts["th3_upper"] = _not_applicable(reason)
        verdicts["shi_song_upper"] = _not_applicable(reason)
    elif not biclique_free(g, l):
        reason = f"a pair has more than {l} common neighbors"
        verdicts["th3_upper"] = _not_applicable(reason)
        verdicts["shi_song_upper"] = _not_applicable(reason)
    else:
        res = th3_check(g, k, l, tol)
        tag = None
        if res.tight and is_connected(g):
            case = equality_case(g, k, l)
            tag = case.value if case is not EqualityCase.NOT_TIGHT else None
        verdicts["th3_upper"] = BoundVerdict(
            applicable=True,
            value=res.bound,
            holds=res.holds,
            slack=res.slack,
            tight=res.tight,
            exception=tag,
        )
        if prof.max_degree < 1:
            verdicts["shi_song_upper"] = _not_applicable("graph has no edges")
        else:
            verdicts["shi_song_upper"] = _upper(
                shi_song_bound(g.n, k, l, prof.max_degree), mu, tol, None
            )

    bounds = {
        name: (verdicts[name].value if verdicts[name].applicable else None)
        for name in BOUND_NAMES
    }
    return BoundReport(mu=mu, bounds=bounds, verdicts=verdicts)
