import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import spectral_bounds as sb
from spectral_bounds.graphs import from_edge_mask


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    nbits = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << nbits) - 1))
    return from_edge_mask(n, mask)


# ---------------------------------------------------------------------------
# clique-number bound verdicts


def test_th1_strict_on_cycle():
    assert sb.th1_check(sb.cycle(5), 2) == "strict"


def test_th1_exception_on_extremal_graph():
    assert sb.th1_check(sb.turan_graph(2, 6), 2) == "exception"


def test_th1_strict_on_path():
    assert sb.th1_check(sb.path(4), 2) == "strict"


def test_th1_rejects_preconditions():
    with pytest.raises(ValueError):
        sb.th1_check(sb.complete(4), 2)  # contains a triangle
    with pytest.raises(ValueError):
        sb.th1_check(sb.cycle(4), 1)
    with pytest.raises(ValueError):
        sb.th1_check(sb.from_edge_list(1, []), 2)


# ---------------------------------------------------------------------------
# lower bounds


def test_lower_bounds_star():
    g = sb.star(4)
    assert sb.cs_lower(g) == pytest.approx(1.5)
    assert sb.hofmeister_lower(g) == pytest.approx(math.sqrt(3))
    assert sb.spectral_radius(g) == pytest.approx(math.sqrt(3), abs=1e-12)


def test_lower_bounds_regular_all_equal():
    g = sb.cycle(5)
    assert sb.cs_lower(g) == pytest.approx(2.0)
    assert sb.hofmeister_lower(g) == pytest.approx(2.0)


def test_lower_bounds_path():
    g = sb.path(4)
    assert sb.cs_lower(g) == pytest.approx(1.5)
    assert sb.hofmeister_lower(g) == pytest.approx(math.sqrt(2.5))
    assert sb.hofmeister_lower(g) <= sb.spectral_radius(g) + 1e-12


@given(small_graphs())
@settings(max_examples=200)
def test_lower_bound_chain(g):
    mu = sb.spectral_radius(g)
    hof = sb.hofmeister_lower(g)
    cs = sb.cs_lower(g)
    assert mu >= hof - 1e-9
    assert hof >= cs - 1e-12
    regular = len(set(g.degrees())) == 1
    assert (abs(hof - cs) <= 1e-12) == regular


def test_wilf_upper_value():
    assert sb.wilf_upper(2, 10) == pytest.approx(5.0)
    with pytest.raises(ValueError):
        sb.wilf_upper(0, 5)


# ---------------------------------------------------------------------------
# irregularity gap


def test_th2_complete_minus_edge():
    res = sb.th2_check(sb.complete_minus_edge(4))
    assert res.branch == "general"
    assert res.threshold == pytest.approx(1 / 18)
    assert res.gap == pytest.approx((1 + math.sqrt(17)) / 2 - 2.5, abs=1e-12)
    assert res.holds


def test_th2_wheel_needs_subregular_branch():
    res = sb.th2_check(sb.wheel(4))
    assert res.branch == "subregular"
    assert res.threshold == pytest.approx(1 / 30)
    assert res.gap == pytest.approx(0.036068, abs=1e-6)
    assert res.holds
    # the general threshold would wrongly fail this graph
    assert res.gap < 1 / 26


def test_th2_path():
    res = sb.th2_check(sb.path(4))
    assert res.threshold == pytest.approx(1 / 14)
    assert res.gap == pytest.approx(0.118034, abs=1e-6)
    assert res.holds


def test_th2_rejects_regular_and_tiny():
    with pytest.raises(ValueError):
        sb.th2_check(sb.cycle(6))
    with pytest.raises(ValueError):
        sb.th2_check(sb.path(3))


# ---------------------------------------------------------------------------
# degree/biclique bounds


def test_th3_bound_examples():
    assert sb.th3_bound(6, 0, 1, 5) == pytest.approx(math.sqrt(5), abs=1e-12)
    assert sb.th3_bound(5, 1, 1, 4) == pytest.approx((1 + math.sqrt(17)) / 2, abs=1e-12)
    assert sb.th3_bound(5, 0, 1, 2) == pytest.approx(2.0, abs=1e-12)


def test_shi_song_bound_value():
    # k=l: (sqrt(4*Delta + 4l(n-1)))/2
    assert sb.shi_song_bound(6, 0, 0, 3) == pytest.approx(math.sqrt(3))
    # (k - l + sqrt((k-l)^2 + 4*Delta + 4*l*(n-1))) / 2 = (-1 + 5) / 2
    assert sb.shi_song_bound(5, 0, 1, 2) == pytest.approx(2.0)


def test_bound_formulas_reject_bad_parameters():
    with pytest.raises(ValueError):
        sb.th3_bound(6, 2, 1, 3)  # k > l
    with pytest.raises(ValueError):
        sb.th3_bound(6, 0, 1, 0)  # max degree out of range
    with pytest.raises(ValueError):
        sb.shi_song_bound(6, 0, 1, 6)


def test_th3_dominates_shi_song_sampled():
    for n in (2, 3, 10, 57, 200):
        for dmax in range(1, n, max(1, n // 7)):
            for l in range(0, dmax + 1, max(1, dmax // 5)):
                for k in range(0, l + 1):
                    assert sb.th3_bound(n, k, l, dmax) <= sb.shi_song_bound(n, k, l, dmax) + 1e-9


def test_th3_check_tight_cases():
    res = sb.th3_check(sb.cycle(5), 0, 1)
    assert res.holds and res.tight
    assert res.bound == pytest.approx(2.0)
    res = sb.th3_check(sb.star(6), 0, 1)
    assert res.holds and res.tight
    assert res.bound == pytest.approx(math.sqrt(5))


def test_th3_check_slack_case():
    res = sb.th3_check(sb.path(4), 0, 1)
    assert res.holds and not res.tight
    assert res.bound == pytest.approx(math.sqrt(3))
    assert res.slack == pytest.approx(math.sqrt(3) - (1 + math.sqrt(5)) / 2, abs=1e-9)


def test_th3_check_edgeless():
    res = sb.th3_check(sb.from_edge_list(3, []), 0, 1)
    assert res.holds and res.tight and res.bound == 0.0


def test_th3_check_rejects_preconditions():
    with pytest.raises(ValueError):
        sb.th3_check(sb.complete(4), 0, 1)
    with pytest.raises(ValueError):
        sb.th3_check(sb.cycle(5), 1, 0)


# ---------------------------------------------------------------------------
# aggregate report


def test_full_report_cycle_all_bounds():
    rep = sb.full_report(sb.cycle(5), r=2, k=0, l=1)
    assert set(rep.verdicts) == set(rep.bounds)
    for name, verdict in rep.verdicts.items():
        if name == "th2_gap_threshold":
            assert not verdict.applicable  # C_5 is regular
        else:
            assert verdict.applicable and verdict.holds
    assert rep.verdicts["th3_upper"].tight
    assert rep.verdicts["th3_upper"].exception == "case-i"
    assert not rep.verdicts["turan_upper"].tight
    assert rep.mu == pytest.approx(2.0, abs=1e-9)


def test_full_report_routes_preconditions():
    rep = sb.full_report(sb.complete(4), r=2)
    assert not rep.verdicts["turan_upper"].applicable
    assert "K_3" in rep.verdicts["turan_upper"].reason
    assert rep.bounds["turan_upper"] is None

    rep = sb.full_report(sb.cycle(6))
    assert not rep.verdicts["th2_gap_threshold"].applicable
    assert rep.verdicts["th2_gap_threshold"].reason == "graph is regular"
    assert not rep.verdicts["th3_upper"].applicable

    rep = sb.full_report(sb.from_edge_list(3, []), k=0, l=1)
    assert rep.verdicts["th3_upper"].applicable
    assert not rep.verdicts["shi_song_upper"].applicable


def test_full_report_marks_extremal_exception():
    rep = sb.full_report(sb.turan_graph(2, 6), r=2)
    assert rep.verdicts["turan_upper"].exception == "turan-graph"
    assert rep.verdicts["turan_upper"].tight


def test_full_report_subregular_tag():
    rep = sb.full_report(sb.wheel(4))
    assert rep.verdicts["th2_gap_threshold"].exception == "subregular"


def test_full_report_json_shape():
    rep = sb.full_report(sb.friendship(2), r=3, k=1, l=1)
    blob = json.dumps(rep.to_dict())
    data = json.loads(blob)
    assert list(data["bounds"]) == [
        "turan_upper",
        "wilf_upper",
        "cs_lower",
        "hofmeister_lower",
        "th2_gap_threshold",
        "th3_upper",
        "shi_song_upper",
    ]
    assert data["verdicts"]["th3_upper"]["exception"] == "case-ii"


@given(small_graphs(max_n=6))
@settings(max_examples=100)
def test_full_report_never_reports_failures(g):
    rep = sb.full_report(g, r=2, k=1, l=2)
    for verdict in rep.verdicts.values():
        if verdict.applicable:
            assert verdict.holds
