"""Synthetic digraph families and closed-form windmill measures.

Random draws use numpy's PCG64 bit generator seeded through
``SeedSequence(seed, spawn_key=stream)``. Replication ``k`` of a batch uses
``stream=(k,)``, so each replicate's graph depends only on (seed, k) and
never on execution order or worker count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import DiGraph
from .measures import (
    ZERO_COUNT_VAR,
    Measure,
    MeasureReport,
    autocorrelation_from_variances,
)


@dataclass(frozen=True)
class WindmillParams:
    m: int  # number of wings
    r: int  # clique size of a wing including the centre

    def __post_init__(self):
        if self.m < 2 or self.r < 3:
            raise ValueError(f"windmill needs m > 1 and r > 2, got m={self.m}, r={self.r}")

    @property
    def n(self) -> int:
        return self.m * (self.r - 1) + 1


@dataclass(frozen=True)
class ErParams:
    n: int
    p: float
    seed: int = 0
    stream: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"tie probability must lie in [0, 1], got {self.p}")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


def er_rng(seed: int, stream: Sequence[int] = ()) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=tuple(stream))))


def gen_erdos_renyi(params: ErParams) -> DiGraph:
    """Each ordered pair i != j is tied independently with probability p.

    One n x n block of uniforms is drawn row-major; entry (i, j) < p gives
    the arc, the diagonal is discarded.
    """
    u = er_rng(params.seed, params.stream).random((params.n, params.n))
    return DiGraph.from_dense(u < params.p)


def _mutual_clique(nodes: Sequence[int]) -> set[tuple[int, int]]:
    return {(a, b) for a in nodes for b in nodes if a != b}


def gen_windmill(params: WindmillParams) -> DiGraph:
    """Node 0 is the centre; wing w holds nodes 1 + w(r-1) .. (w+1)(r-1).
    Every wing together with the centre is a mutual r-clique."""
    m, r = params.m, params.r
    arcs: set[tuple[int, int]] = set()
    for w in range(m):
        wing = [1 + w * (r - 1) + t for t in range(r - 1)]
        arcs |= _mutual_clique([0, *wing])
    return DiGraph(params.n, frozenset(arcs))


def gen_clique_union(sizes: Sequence[int], isolates: int = 0) -> DiGraph:
    """Disjoint mutual cliques of the given sizes, then ``isolates`` isolated nodes."""
    sizes = list(sizes)
    if any(s < 1 for s in sizes) or isolates < 0:
        raise ValueError("clique sizes must be >= 1 and isolates >= 0")
    if not any(s >= 2 for s in sizes):
        raise ValueError("need at least one clique of size >= 2")
    n = sum(sizes) + isolates
    if n < 3:
        raise ValueError(f"clique union needs n >= 3, got {n}")
    arcs: set[tuple[int, int]] = set()
    start = 0
    for s in sizes:
        arcs |= _mutual_clique(range(start, start + s))
        start += s
    return DiGraph(n, frozenset(arcs))


def windmill_two_paths(params: WindmillParams) -> int:
    """Total two-paths: transitive part m r(r-1)(r-2) plus intransitive m(m-1)(r-1)^2."""
    m, r = params.m, params.r
    return m * r * (r - 1) * (r - 2) + m * (m - 1) * (r - 1) ** 2


def windmill_analytic(params: WindmillParams) -> MeasureReport:
    """Closed-form measures of the windmill W(m, r), exact where rational.

    TPhi uses r(r-3) in the numerator. Written with sqrt(r)(r-3) it would
    contradict the TPhi = Cov / sqrt(Var x Var) built from the other closed
    forms here, and its r -> infinity limit would be 0 rather than 1/sqrt(m+1).
    """
    m, r, n = params.m, params.r, params.n
    F = Fraction
    arcs = m * r * (r - 1)
    wts = windmill_two_paths(params)
    cov_triple = F((m - 1) * r * (r - 1) * (r - 3), n * n * (n - 2))
    var_tie = F(r * (n - r), n * n)
    var_ind = F(((n - 1) * (n - 2) - (r - 1) * (r - 2)) * (n + r * (r - 3)), n * n * (n - 2) ** 2)
    var_count = F((m - 1) * r * (r - 1) * (r - 3) ** 2, n * n)
    c = F(r * (r - 2), r * (r - 2) + (m - 1) * (r - 1))
    lc = 1 - F(n - r, n) * F(1, n - 2)
    t_phi = r * (r - 3) / math.sqrt((n * r + r * (r - 3)) * (n + r * (r - 3)))
    t_pb = F((n - 2) * r * (r - 3), (n + r - 3) * (n + r * (r - 3)))
    if r == 3:
        t_corr = t_beta = Measure.undefined(ZERO_COUNT_VAR)
    else:
        t_corr, t_beta = Measure(1.0), Measure.of(F(1, r - 3))
    rho, alpha = autocorrelation_from_variances(n, var_ind, var_count)
    cov_pair = (n - 2) * cov_triple
    return MeasureReport(
        n=n,
        isolates=0,
        edge_count=arcs,
        mutual_count=arcs,
        density=float(F(r, n)),
        mean_two_paths=float(F(wts, n * (n - 1))),
        avg_degree=float(F(arcs, n)),
        trans_cov=Measure.of(cov_triple),
        trans_cov_pair=Measure.of(cov_pair),
        var_tie=Measure.of(var_tie),
        var_two_path=Measure.of(var_ind),
        var_two_path_count=Measure.of(var_count),
        clus_coef=Measure.of(c),
        loc_clus_coef=Measure.of(lc),
        lc_low_outdegree=0,
        t_phi=Measure(t_phi),
        t_phi_beta=Measure.of(t_pb),
        t_corr=t_corr,
        t_beta=t_beta,
        rho=rho,
        alpha=alpha,
        zero_residual=Measure.of(cov_pair),
    )
