from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from transcorr.generators import WindmillParams, gen_windmill
from transcorr.graph import DegenerateGraphError, DiGraph, degree_summary
from transcorr.triads import (
    degree_covariance_mixed,
    pair_moments,
    transitive_triple_count,
    triad_table,
    triple_model_stats,
    two_path_counts,
)

from conftest import digraphs


def brute_t(g):
    return {
        (i, j): sum(g.has_arc(i, h) * g.has_arc(h, j) for h in range(g.n) if h not in (i, j))
        for i, j in permutations(range(g.n), 2)
    }


def test_two_paths_cycle(cycle3):
    tp = two_path_counts(cycle3)
    # 0->1->2 gives T_02, 1->2->0 gives T_10, 2->0->1 gives T_21
    assert tp.as_dict() == {(0, 2): 1, (1, 0): 1, (2, 1): 1}
    assert tp.total == 3
    assert tp[0, 1] == 0


def test_two_paths_transitive_triangle(trans_triangle):
    tp = two_path_counts(trans_triangle)
    assert tp.as_dict() == {(0, 2): 1}
    s = degree_summary(trans_triangle)
    assert tp.total == 1 == s.od_dot_id - s.mutual_count


def test_windmill_two_path_total():
    # m r (r-1)(r-2) + m (m-1)(r-1)^2 at m=2, r=4
    assert two_path_counts(gen_windmill(WindmillParams(2, 4))).total == 48 + 18 == 66


@pytest.mark.parametrize("make, expected", [("cycle3", 0), ("trans_triangle", 1)])
def test_transitive_triples(make, expected, request):
    assert transitive_triple_count(request.getfixturevalue(make)) == expected


def test_transitive_triples_windmill():
    assert transitive_triple_count(gen_windmill(WindmillParams(2, 4))) == 2 * 4 * 3 * 2


def test_degenerate():
    with pytest.raises(DegenerateGraphError):
        two_path_counts(DiGraph(2, frozenset({(0, 1)})))


def test_triad_table_examples(trans_triangle, empty5, complete4):
    t = triad_table(trans_triangle)
    assert t.cells() == (Fraction(1, 6), Fraction(2, 6), 0, Fraction(3, 6))
    assert triad_table(empty5).cells() == (0, 0, 0, 1)
    assert triad_table(complete4).cells() == (1, 0, 0, 0)


def test_degree_covariance_mixed(cycle3, empty5):
    assert degree_covariance_mixed(degree_summary(cycle3)) == Fraction(3, 4)
    assert degree_covariance_mixed(degree_summary(empty5)) == 0


@given(st.integers(3, 12), st.data())
def test_degree_covariance_circulant(n, data):
    k = data.draw(st.integers(0, n - 1))
    g = DiGraph(n, frozenset((i, (i + s) % n) for i in range(n) for s in range(1, k + 1)))
    s = degree_summary(g)
    assert s.out_degrees == s.in_degrees == (k,) * n
    d = Fraction(k, n - 1)
    assert degree_covariance_mixed(s) == Fraction(n * k * k, n) - d * d


@settings(max_examples=300)
@given(digraphs(3, 7))
def test_counts_match_brute_force(g):
    tp = two_path_counts(g)
    bt = brute_t(g)
    assert {p: v for p, v in bt.items() if v} == tp.as_dict()
    assert all(0 <= v <= g.n - 2 for v in bt.values())
    tt = sum(g.has_arc(i, j) * g.has_arc(i, h) * g.has_arc(h, j) for i, j, h in permutations(range(g.n), 3))
    assert transitive_triple_count(g) == tt
    s = degree_summary(g)
    assert tp.total == s.od_dot_id - s.mutual_count


@given(digraphs(3, 8))
def test_table_invariants(g):
    t = triad_table(g)
    assert all(0 <= c <= 1 for c in t.cells())
    assert sum(t.cells()) == 1
    assert t.p1_ == degree_summary(g).density
    triples = g.n * (g.n - 1) * (g.n - 2)
    assert (t.p11 * triples).denominator == 1
    assert t.p11 * triples == sum(v for (i, j), v in brute_t(g).items() if g.has_arc(i, j))
    st_ = triple_model_stats(g)
    assert st_.cov_triple == t.p11 - t.p1_ * t.p_1
    assert st_.tt_count <= two_path_counts(g).total


@given(digraphs(3, 8))
def test_pair_moments_consistent(g):
    m = pair_moments(g)
    t = triad_table(g)
    assert m.cov_xt == (g.n - 2) * (t.p11 - t.p1_ * t.p_1)
    assert m.t_mean == (g.n - 2) * t.p_1
