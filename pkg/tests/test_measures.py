import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from transcorr.generators import WindmillParams, gen_clique_union, gen_windmill
from transcorr.graph import DegenerateGraphError, DiGraph
from transcorr.measures import (
    all_measures,
    clustering_coefficient,
    local_clustering,
    tb,
    tc,
    tpb,
    tphi,
    two_path_autocorrelation,
    zero_tc_residual,
)
from transcorr.oracle import brute_measures

from conftest import digraphs

W24 = gen_windmill(WindmillParams(2, 4))


def close(m, x, tol=1e-12):
    return m.defined and abs(m.value - x) <= tol


def test_clustering_examples(trans_triangle, cycle3):
    assert close(clustering_coefficient(trans_triangle), 1.0)
    assert close(clustering_coefficient(W24), 8 / 11)
    assert close(clustering_coefficient(cycle3), 0.0)
    assert clustering_coefficient(DiGraph(4, frozenset({(0, 1)}))).reason == "no two-paths"


def test_local_clustering(trans_triangle):
    for policy in ("exclude", "zero"):
        lc, low = local_clustering(W24, policy)
        assert close(lc, 32 / 35) and low == 0
    assert close(local_clustering(gen_clique_union([3, 3]))[0], 1.0)
    lc, low = local_clustering(trans_triangle, "exclude")
    assert close(lc, 0.5) and low == 2
    lc, _ = local_clustering(trans_triangle, "zero")
    assert close(lc, 0.5 / 3)
    assert not local_clustering(DiGraph(3, frozenset({(0, 1)})))[0].defined
    with pytest.raises(ValueError):
        local_clustering(W24, "mean")


def test_tpb_examples(trans_triangle):
    assert close(tpb(trans_triangle), 0.6)
    assert close(tpb(W24), 20 / 88)
    assert tpb(DiGraph(4, frozenset())).reason == "zero two-path indicator variance"


def test_tphi_examples(trans_triangle, empty5):
    assert close(tphi(trans_triangle), 1 / math.sqrt(5))
    # brute-force enumeration gives 4/sqrt(352), see test_generators for the closed form
    assert close(tphi(W24), 4 / math.sqrt(352))
    assert tphi(empty5).reason == "zero tie variance"


def test_tc_examples(cycle3):
    assert close(tc(cycle3), -1.0)
    for m, r in [(2, 4), (3, 5), (4, 7)]:
        assert close(tc(gen_windmill(WindmillParams(m, r))), 1.0)
    assert close(tc(gen_clique_union([3, 3], isolates=2)), 1.0)
    assert tc(gen_windmill(WindmillParams(3, 3))).reason == "zero two-path count variance"


def test_tb_examples(trans_triangle):
    assert close(tb(W24), 1.0)
    assert close(tb(trans_triangle), 0.6)


def test_tb_negative_on_reporting_tree():
    # subordinate -> boss arcs on a balanced tree of depth 3
    arcs = {(c, (c - 1) // 2) for c in range(1, 15)}
    g = DiGraph(15, frozenset(arcs))
    assert tb(g).value < 0


def test_autocorrelation(trans_triangle):
    rho, alpha = two_path_autocorrelation(trans_triangle)
    assert rho.reason == "n < 4" and close(alpha, 1.0)
    rho, alpha = two_path_autocorrelation(W24)
    ratio = tc(W24).value / tphi(W24).value
    assert close(alpha, ratio)
    n = W24.n
    assert abs(rho.value - ((n - 2) / ratio**2 - 1) / (n - 3)) < 1e-12
    assert rho.value >= -1 / (n - 3)
    bp = brute_measures(W24)
    assert abs(rho.value - bp["rho"]) < 1e-12


def test_zero_residual_examples(cycle3, empty5):
    assert zero_tc_residual(cycle3) == Fraction(-1, 4)
    assert all_measures(cycle3).trans_cov_pair.value == -0.25
    assert zero_tc_residual(empty5) == 0


def test_all_measures_windmill():
    r = all_measures(W24)
    assert close(r.clus_coef, 8 / 11)
    assert close(r.loc_clus_coef, 32 / 35)
    assert close(r.t_phi_beta, 20 / 88)
    assert close(r.t_phi, 4 / math.sqrt(352))
    assert close(r.t_corr, 1.0) and close(r.t_beta, 1.0)
    assert (r.n, r.isolates, r.edge_count) == (7, 0, 24)


def test_all_measures_complete():
    g = DiGraph(5, frozenset((i, j) for i in range(5) for j in range(5) if i != j))
    r = all_measures(g)
    assert close(r.clus_coef, 1.0)
    for name in ("t_phi", "t_corr", "t_beta", "t_phi_beta"):
        assert not getattr(r, name).defined, name
    assert r.t_corr.status == "undefined(zero tie variance)"


def test_all_measures_triangle(trans_triangle):
    r = all_measures(trans_triangle)
    assert close(r.clus_coef, 1.0) and close(r.t_phi_beta, 0.6) and close(r.t_beta, 0.6)
    assert close(r.t_phi, 1 / math.sqrt(5)) and close(r.t_corr, 1 / math.sqrt(5))


def test_degenerate_graph():
    with pytest.raises(DegenerateGraphError):
        all_measures(DiGraph(2, frozenset({(0, 1)})))


def test_report_serialization(cycle3):
    d = all_measures(cycle3).as_dict()
    for key in ("n", "isolates", "density", "mean_two_paths", "avg_degree", "trans_cov", "clus_coef",
                "loc_clus_coef", "t_phi", "t_phi_beta", "t_corr", "t_beta", "rho", "alpha", "zero_residual"):
        assert key in d
    assert d["rho"] is None and d["rho_status"] == "undefined(n < 4)"
    assert d["t_corr_status"] == "defined"


def test_clique_unions():
    for sizes, iso in [([3, 3], 0), ([3, 3], 2), ([4, 4, 4], 0), ([4, 4, 4], 3)]:
        r = all_measures(gen_clique_union(sizes, iso))
        assert close(r.t_corr, 1.0)
        # a random third node k rarely closes a tied pair, so TPhi stays below 1
        assert close(r.t_phi, 1 / r.alpha.value)
    r = all_measures(gen_clique_union([3, 5]))
    assert r.t_corr.value < 1 and r.t_phi.value < 1


def test_clique_union_tphi_by_hand():
    # two mutual triangles: p11 = p+1 = 12/120, d = 0.4
    r = all_measures(gen_clique_union([3, 3]))
    assert close(r.t_phi, 0.06 / math.sqrt(0.24 * 0.09))


@settings(max_examples=400, deadline=None)
@given(digraphs(3, 6))
def test_matches_oracle(g):
    report = all_measures(g).measures()
    for name, expected in brute_measures(g).items():
        got = report[name]
        assert got.defined == (expected is not None), name
        if expected is not None:
            assert abs(got.value - expected) <= 1e-12, name


@settings(max_examples=300, deadline=None)
@given(digraphs(3, 9))
def test_identities(g):
    r = all_measures(g)
    n = g.n
    assert abs(r.trans_cov_pair.value - (n - 2) * r.trans_cov.value) <= 1e-12
    # the residual of the zero-TC condition is the pair covariance itself
    assert abs(r.trans_cov_pair.value - r.zero_residual.value) <= 1e-12
    if r.var_two_path.value:
        assert abs(r.t_phi_beta.value - r.trans_cov.value / r.var_two_path.value) <= 1e-9
    if r.t_corr.defined and r.t_phi.defined:
        assert -1 <= r.t_phi.value <= 1 and -1 <= r.t_corr.value <= 1
        assert abs(r.t_corr.value - r.alpha.value * r.t_phi.value) <= 1e-9
        assert abs(r.t_corr.value) >= abs(r.t_phi.value) - 1e-9
        assert r.t_corr.value * r.t_phi.value >= -1e-12
    if r.rho.defined:
        assert -1 / (n - 3) - 1e-12 <= r.rho.value <= 1 + 1e-12
    if r.alpha.defined:
        assert r.alpha.value >= 1 - 1e-12
