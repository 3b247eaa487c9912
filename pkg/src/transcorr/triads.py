"""Exact two-path and transitive-triple counts under the triple and pair draws.

Everything here is an integer count or a ``Fraction`` built from integer
counts; floating point only enters in :mod:`transcorr.measures`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.sparse as sp

from .graph import DegenerateGraphError, DegreeSummary, DiGraph, degree_summary


def _require_triples(g: DiGraph) -> None:
    if g.n < 3:
        raise DegenerateGraphError(f"need n >= 3 for triple statistics, got n={g.n}")


@dataclass(frozen=True, eq=False)
class TwoPathCounts:
    """``T_ij = sum_h x_ih x_hj`` over ordered pairs ``i != j``, stored sparse."""

    n: int
    counts: sp.csr_matrix
    total: int

    @property
    def mean(self) -> Fraction:
        """Mean two-path count per ordered pair (TSP)."""
        return Fraction(self.total, self.n * (self.n - 1))

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        if i == j:
            raise KeyError("two-path counts are defined for i != j only")
        return int(self.counts[i, j])

    def as_dict(self) -> dict[tuple[int, int], int]:
        """Nonzero entries only."""
        c = self.counts.tocoo()
        return {(int(i), int(j)): int(v) for i, j, v in zip(c.row, c.col, c.data) if v}

    def max(self) -> int:
        return int(self.counts.max()) if self.counts.nnz else 0


def two_path_counts(g: DiGraph) -> TwoPathCounts:
    """Two-path counts via sparse ``A @ A``; cost scales with sum_h OD_h * ID_h.

    The diagonal of ``A @ A`` holds reciprocated dyads (i -> h -> i), which are
    not two-paths between distinct nodes and are removed.
    """
    _require_triples(g)
    a = g.adjacency
    t = (a @ a).tocsr()
    t.setdiag(0)
    t.eliminate_zeros()
    total = int(t.sum())
    ds = degree_summary(g)
    # OD.ID counts every i->h->j including j == i; those are exactly the M mutual arcs.
    assert total == ds.od_dot_id - ds.mutual_count
    return TwoPathCounts(g.n, t, total)


@dataclass(frozen=True)
class PairMoments:
    """Integer sufficient statistics of the random ordered-pair draw."""

    n: int
    edge_count: int
    tt_count: int  # sum x_ij T_ij
    t_sum: int  # sum T_ij
    t_sq_sum: int  # sum T_ij^2

    @property
    def pairs(self) -> int:
        return self.n * (self.n - 1)

    @property
    def density(self) -> Fraction:
        return Fraction(self.edge_count, self.pairs)

    @property
    def tt_mean(self) -> Fraction:
        return Fraction(self.tt_count, self.pairs)

    @property
    def t_mean(self) -> Fraction:
        return Fraction(self.t_sum, self.pairs)

    @property
    def var_x(self) -> Fraction:
        d = self.density
        return d * (1 - d)

    @property
    def var_t(self) -> Fraction:
        return Fraction(self.t_sq_sum, self.pairs) - self.t_mean**2

    @property
    def cov_xt(self) -> Fraction:
        return self.tt_mean - self.density * self.t_mean


def pair_moments(g: DiGraph, tp: TwoPathCounts | None = None) -> PairMoments:
    tp = tp or two_path_counts(g)
    t = tp.counts
    tt = int(t.multiply(g.adjacency).sum())
    return PairMoments(
        n=g.n,
        edge_count=g.edge_count,
        tt_count=tt,
        t_sum=tp.total,
        t_sq_sum=int(t.multiply(t).sum()),
    )


def transitive_triple_count(g: DiGraph, tp: TwoPathCounts | None = None) -> int:
    """Number of ordered triples with i->j, i->h and h->j all present."""
    _require_triples(g)
    tp = tp or two_path_counts(g)
    return int(tp.counts.multiply(g.adjacency).sum())


def local_triple_counts(g: DiGraph, tp: TwoPathCounts | None = None) -> np.ndarray:
    """Per-node ``sum_{j,h} x_ij x_ih x_hj``: arcs inside the out-neighbourhood of i."""
    tp = tp or two_path_counts(g)
    return np.asarray(tp.counts.multiply(g.adjacency).sum(axis=1)).ravel().astype(np.int64)


@dataclass(frozen=True)
class TriadTable:
    """2x2 joint table of (tie x_ij, two-path x_ik x_kj) over random ordered triples."""

    p11: Fraction
    p10: Fraction
    p01: Fraction
    p00: Fraction

    @property
    def p1_(self) -> Fraction:
        return self.p11 + self.p10

    @property
    def p_1(self) -> Fraction:
        return self.p11 + self.p01

    def cells(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.p11, self.p10, self.p01, self.p00


def triad_table(g: DiGraph, tp: TwoPathCounts | None = None) -> TriadTable:
    _require_triples(g)
    tp = tp or two_path_counts(g)
    triples = g.n * (g.n - 1) * (g.n - 2)
    # each arc (i, j) pairs with n-2 choices of k
    tie_triples = g.edge_count * (g.n - 2)
    tt = transitive_triple_count(g, tp)
    p11 = Fraction(tt, triples)
    p10 = Fraction(tie_triples - tt, triples)
    p01 = Fraction(tp.total - tt, triples)
    p00 = 1 - p11 - p10 - p01
    return TriadTable(p11, p10, p01, p00)


@dataclass(frozen=True)
class TripleModelStats:
    tt_count: int
    tt_mean: Fraction
    cov_triple: Fraction
    var_twopath_indicator: Fraction
    degree_cov_mixed: Fraction


def degree_covariance_mixed(summary: DegreeSummary) -> Fraction:
    """``(1/n) OD.ID - d**2`` with d the density.

    This is the in/out-degree "covariance" used by the zero-transitivity
    condition. It is not the covariance of the degree vectors (their means are
    d(n-1), not d); it is kept in this form so the condition's algebra holds.
    """
    return Fraction(summary.od_dot_id, summary.n) - summary.density**2


def triple_model_stats(g: DiGraph, tp: TwoPathCounts | None = None) -> TripleModelStats:
    tp = tp or two_path_counts(g)
    table = triad_table(g, tp)
    tt = transitive_triple_count(g, tp)
    p = table.p_1
    return TripleModelStats(
        tt_count=tt,
        tt_mean=Fraction(tt, g.n * (g.n - 1)),
        cov_triple=table.p11 - table.p1_ * p,
        var_twopath_indicator=p * (1 - p),
        degree_cov_mixed=degree_covariance_mixed(degree_summary(g)),
    )
