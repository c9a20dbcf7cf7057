import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import spectral_bounds as sb
from spectral_bounds import EqualityCase
from spectral_bounds.graphs import from_edge_mask

from conftest import bf_common_neighbors


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    nbits = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << nbits) - 1))
    return from_edge_mask(n, mask)


def test_common_neighbors_examples():
    assert sb.common_neighbors(sb.complete(4), 0, 1) == 2
    assert sb.common_neighbors(sb.star(6), 1, 2) == 1
    assert sb.common_neighbors(sb.cycle(5), 0, 1) == 0


def test_common_neighbors_rejects_same_vertex():
    with pytest.raises(ValueError):
        sb.common_neighbors(sb.complete(3), 1, 1)


@given(small_graphs())
@settings(max_examples=100)
def test_common_neighbors_matches_brute_force(g):
    for v in range(g.n):
        for u in range(v):
            assert sb.common_neighbors(g, u, v) == bf_common_neighbors(g, u, v)


def test_common_neighbor_stats():
    stats = sb.common_neighbor_stats(sb.friendship(2))
    assert stats.max_adjacent == 1
    assert stats.max_any == 1
    stats = sb.common_neighbor_stats(sb.complete_bipartite(2, 3), include_pairs=True)
    assert stats.max_adjacent == 0
    assert stats.max_any == 3
    assert stats.per_pair[(0, 1)] == 3


@given(small_graphs())
@settings(max_examples=100)
def test_common_neighbor_stats_invariants(g):
    stats = sb.common_neighbor_stats(g)
    assert stats.max_adjacent <= stats.max_any
    assert stats.max_any <= max(g.n - 2, 0)


# ---------------------------------------------------------------------------
# freeness predicates


def test_book_free_friendship():
    g = sb.friendship(2)
    assert sb.book_free(g, 1)
    assert not sb.book_free(g, 0)


def test_biclique_free_k23():
    g = sb.complete_bipartite(2, 3)
    assert not sb.biclique_free(g, 2)
    assert sb.biclique_free(g, 3)


def test_cycle_is_locally_sparse():
    g = sb.cycle(5)
    assert sb.book_free(g, 0)
    assert sb.biclique_free(g, 1)


def test_freeness_rejects_negative_parameters():
    with pytest.raises(ValueError):
        sb.book_free(sb.complete(3), -1)
    with pytest.raises(ValueError):
        sb.biclique_free(sb.complete(3), -1)


# ---------------------------------------------------------------------------
# counting inequality


def test_counting_inequality_star_hub_tight():
    res = sb.counting_inequality_check(sb.star(6), 0, 0, 1)
    assert (res.lhs, res.rhs, res.holds) == (0, 0, True)


def test_counting_inequality_cycle_tight():
    res = sb.counting_inequality_check(sb.cycle(5), 0, 0, 1)
    assert (res.lhs, res.rhs, res.holds) == (2, 2, True)


def test_counting_inequality_path_midpoint():
    res = sb.counting_inequality_check(sb.path(3), 1, 0, 1)
    assert (res.lhs, res.rhs, res.holds) == (0, 0, True)


def test_counting_inequality_rejects_precondition_violation():
    with pytest.raises(ValueError):
        sb.counting_inequality_check(sb.complete(4), 0, 0, 1)


# ---------------------------------------------------------------------------
# matrix row sums


def test_c_matrix_cycle():
    rep = sb.c_matrix_report(sb.cycle(5), 0, 1)
    assert rep.row_sums == (0, 0, 0, 0, 0)
    assert rep.lam == pytest.approx(0.0, abs=1e-9)
    assert rep.all_nonpositive


def test_c_matrix_star():
    rep = sb.c_matrix_report(sb.star(6), 0, 1)
    assert rep.row_sums == (0,) * 6
    assert rep.lam == pytest.approx(0.0, abs=1e-9)


def test_c_matrix_k2():
    rep = sb.c_matrix_report(sb.complete(2), 0, 0)
    assert rep.row_sums == (0, 0)
    assert rep.lam == pytest.approx(0.0, abs=1e-9)


@given(small_graphs(), st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=150)
def test_c_matrix_row_sums_match_matrix_arithmetic(g, k, l):
    # independent route: row sums of A^2 - (k+1-l)A - (n-1)l I via numpy
    a = g.adjacency_matrix()
    c = a @ a - (k + 1 - l) * a - (g.n - 1) * l * np.eye(g.n)
    expected = np.rint(c.sum(axis=1)).astype(int)
    rep = sb.c_matrix_report(g, k, l)
    assert list(rep.row_sums) == list(expected)
    assert rep.all_nonpositive == bool((expected <= 0).all())


# ---------------------------------------------------------------------------
# equality classification


def test_equality_case_cycle_is_regular_branch():
    assert sb.equality_case(sb.cycle(5), 0, 1) is EqualityCase.CASE_I


def test_equality_case_star_is_pair_branch():
    assert sb.equality_case(sb.star(6), 0, 1) is EqualityCase.CASE_II


def test_equality_case_friendship():
    assert sb.equality_case(sb.friendship(2), 1, 1) is EqualityCase.CASE_II


def test_equality_case_loose_graph():
    assert sb.equality_case(sb.path(4), 0, 1) is EqualityCase.NOT_TIGHT


def test_equality_case_rejects_preconditions():
    with pytest.raises(ValueError):
        sb.equality_case(sb.from_edge_list(3, [(0, 1)]), 0, 1)  # disconnected
    with pytest.raises(ValueError):
        sb.equality_case(sb.complete(4), 0, 1)  # not book-free


# ---------------------------------------------------------------------------
# exhaustive small-order consistency: freeness implies the counting layer
# holds, and tightness of the spectral bound coincides with the equality
# classification on connected graphs


@pytest.mark.parametrize("k,l", [(0, 0), (0, 1), (1, 1), (1, 2)])
def test_counting_layer_exhaustive_small(k, l):
    for n in range(1, 6):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = from_edge_mask(n, mask)
            if not (sb.book_free(g, k) and sb.biclique_free(g, l)):
                continue
            rep = sb.c_matrix_report(g, k, l)
            assert rep.all_nonpositive, (n, mask)
            assert rep.lam <= 1e-9, (n, mask)
            for u in range(n):
                assert sb.counting_inequality_check(g, u, k, l).holds


@pytest.mark.parametrize("k,l", [(0, 1), (1, 1)])
def test_equality_matches_tightness_exhaustive_small(k, l):
    for n in range(1, 6):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = from_edge_mask(n, mask)
            if not (sb.book_free(g, k) and sb.biclique_free(g, l)):
                continue
            if not sb.is_connected(g):
                continue
            res = sb.th3_check(g, k, l)
            case = sb.equality_case(g, k, l)
            assert res.tight == (case is not EqualityCase.NOT_TIGHT), (n, mask)
