"""Scalar transitivity measures for a binary digraph.

Two random-draw models are used throughout, both with population moments:

* triple draw: a uniformly random ordered triple (i, j, k) of distinct nodes,
  relating the tie x_ij to the two-path indicator x_ik x_kj;
* pair draw: a uniformly random ordered pair (i, j), relating x_ij to the
  two-path count T_ij = sum_h x_ih x_hj.

Any statistic whose denominator vanishes is returned as an undefined
:class:`Measure` carrying a reason; NaN never leaves this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Literal

from .graph import DegenerateGraphError, DiGraph, degree_summary
from .triads import (
    PairMoments,
    TwoPathCounts,
    degree_covariance_mixed,
    local_triple_counts,
    pair_moments,
    triad_table,
    two_path_counts,
)

ZERO_TIE_VAR = "zero tie variance"
ZERO_INDICATOR_VAR = "zero two-path indicator variance"
ZERO_COUNT_VAR = "zero two-path count variance"
NO_TWO_PATHS = "no two-paths"
NO_LC_NODES = "no node with outdegree >= 2"
TOO_FEW_NODES = "n < 4"


@dataclass(frozen=True)
class Measure:
    """A real value, or undefined with a machine-readable reason."""

    value: float | None
    reason: str | None = None

    @classmethod
    def undefined(cls, reason: str) -> Measure:
        return cls(None, reason)

    @classmethod
    def of(cls, value) -> Measure:
        return cls(float(value))

    @property
    def defined(self) -> bool:
        return self.reason is None

    @property
    def status(self) -> str:
        return "defined" if self.defined else f"undefined({self.reason})"

    def __str__(self):
        return repr(self.value) if self.defined else self.status


LCPolicy = Literal["exclude", "zero"]


def _ratio(num: Fraction, den: Fraction, reason: str) -> Measure:
    return Measure.undefined(reason) if den == 0 else Measure.of(num / den)


def _corr(cov: Fraction, var_a: Fraction, var_b: Fraction, reason_a: str, reason_b: str) -> Measure:
    if var_a == 0:
        return Measure.undefined(reason_a)
    if var_b == 0:
        return Measure.undefined(reason_b)
    r = float(cov) / math.sqrt(float(var_a * var_b))
    # sqrt rounding can push |r| a few ulps past 1
    return Measure(max(-1.0, min(1.0, r)))


def _prep(g: DiGraph, tp: TwoPathCounts | None):
    if g.n < 3:
        raise DegenerateGraphError(f"transitivity measures need n >= 3, got n={g.n}")
    return tp or two_path_counts(g)


def clustering_coefficient(g: DiGraph, tp: TwoPathCounts | None = None) -> Measure:
    """Share of two-paths i->k->j whose pair (i, j) is also tied."""
    tp = _prep(g, tp)
    m = pair_moments(g, tp)
    if m.t_sum == 0:
        return Measure.undefined(NO_TWO_PATHS)
    return Measure.of(Fraction(m.tt_count, m.t_sum))


def local_clustering(
    g: DiGraph, policy: LCPolicy = "exclude", tp: TwoPathCounts | None = None
) -> tuple[Measure, int]:
    """Mean out-neighbourhood density and the number of nodes with OD < 2.

    ``policy="exclude"`` averages over nodes with OD >= 2 only; ``"zero"``
    lets those nodes contribute 0 to a mean over all n nodes.
    """
    if policy not in ("exclude", "zero"):
        raise ValueError(f"unknown LC policy {policy!r}")
    tp = _prep(g, tp)
    local = local_triple_counts(g, tp)
    od = degree_summary(g).out_degrees
    terms = [Fraction(int(c), k * (k - 1)) for c, k in zip(local, od) if k >= 2]
    low = g.n - len(terms)
    if policy == "zero":
        return Measure.of(sum(terms, Fraction(0)) / g.n), low
    if not terms:
        return Measure.undefined(NO_LC_NODES), low
    return Measure.of(sum(terms, Fraction(0)) / len(terms)), low


def _triple_parts(g: DiGraph, tp: TwoPathCounts):
    table = triad_table(g, tp)
    p = table.p_1
    d = table.p1_
    return table, d, p, table.p11 - d * p


def tpb(g: DiGraph, tp: TwoPathCounts | None = None) -> Measure:
    """P(tie | two-path via k) - P(tie | no two-path via k)."""
    tp = _prep(g, tp)
    table, _, p, _ = _triple_parts(g, tp)
    if p in (0, 1):
        return Measure.undefined(ZERO_INDICATOR_VAR)
    return Measure.of(table.p11 / p - table.p10 / (1 - p))


def tphi(g: DiGraph, tp: TwoPathCounts | None = None) -> Measure:
    tp = _prep(g, tp)
    _, d, p, cov = _triple_parts(g, tp)
    return _corr(cov, d * (1 - d), p * (1 - p), ZERO_TIE_VAR, ZERO_INDICATOR_VAR)


def tc(g: DiGraph, tp: TwoPathCounts | None = None) -> Measure:
    tp = _prep(g, tp)
    m = pair_moments(g, tp)
    return _corr(m.cov_xt, m.var_x, m.var_t, ZERO_TIE_VAR, ZERO_COUNT_VAR)


def tb(g: DiGraph, tp: TwoPathCounts | None = None) -> Measure:
    """Least-squares slope of x_ij on T_ij over ordered pairs."""
    tp = _prep(g, tp)
    m = pair_moments(g, tp)
    return _ratio(m.cov_xt, m.var_t, ZERO_COUNT_VAR)


def autocorrelation_from_variances(n: int, v: Fraction, var_t: Fraction) -> tuple[Measure, Measure]:
    # var(T) = (n-2) [v + (n-3) c], c = cov between two-path indicators via k != l
    if v == 0:
        rho = Measure.undefined(ZERO_INDICATOR_VAR)
    elif n < 4:
        rho = Measure.undefined(TOO_FEW_NODES)
    else:
        c = (var_t / (n - 2) - v) / (n - 3)
        rho = Measure.of(c / v)
    if v == 0:
        alpha = Measure.undefined(ZERO_INDICATOR_VAR)
    elif var_t == 0:
        # 1 + (n-3) rho = 0
        alpha = Measure.undefined(ZERO_COUNT_VAR)
    else:
        # (n-2)/sqrt((n-2)(1+(n-3)rho)) with 1+(n-3)rho = var_t / ((n-2) v)
        alpha = Measure(math.sqrt(float(Fraction((n - 2) ** 2) * v / var_t)))
    return rho, alpha


def two_path_autocorrelation(g: DiGraph, tp: TwoPathCounts | None = None) -> tuple[Measure, Measure]:
    """(rho, alpha): correlation of two distinct two-paths joining the same pair,
    and the factor with TC = alpha * TPhi."""
    tp = _prep(g, tp)
    _, _, p, _ = _triple_parts(g, tp)
    return autocorrelation_from_variances(g.n, p * (1 - p), pair_moments(g, tp).var_t)


def zero_tc_residual(g: DiGraph, tp: TwoPathCounts | None = None) -> Fraction:
    """TT minus the transitive-triple mean implied by n, d, M and cov(OD, ID).

    TT is the per-pair mean of transitive triples. The residual vanishes
    exactly when TC = 0 and equals the pair covariance cov(x_ij, T_ij).
    """
    tp = _prep(g, tp)
    s = degree_summary(g)
    n, d, mutual = g.n, s.density, s.mutual_count
    tt_mean = Fraction(pair_moments(g, tp).tt_count, n * (n - 1))
    rhs = (n * degree_covariance_mixed(s) + n * d**2 - mutual) * d / (n * (n - 1))
    return tt_mean - rhs


@dataclass(frozen=True)
class MeasureReport:
    n: int
    isolates: int
    edge_count: int
    mutual_count: int
    density: float
    mean_two_paths: float
    avg_degree: float
    trans_cov: Measure
    trans_cov_pair: Measure
    var_tie: Measure
    var_two_path: Measure
    var_two_path_count: Measure
    clus_coef: Measure
    loc_clus_coef: Measure
    lc_low_outdegree: int
    t_phi: Measure
    t_phi_beta: Measure
    t_corr: Measure
    t_beta: Measure
    rho: Measure
    alpha: Measure
    zero_residual: Measure

    def measures(self) -> dict[str, Measure]:
        return {f.name: getattr(self, f.name) for f in fields(self) if isinstance(getattr(self, f.name), Measure)}

    def as_dict(self) -> dict[str, object]:
        """Flat mapping with fixed keys; each measure also gets ``<key>_status``."""
        out: dict[str, object] = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, Measure):
                out[f.name] = v.value
                out[f"{f.name}_status"] = v.status
            else:
                out[f.name] = v
        return out


def all_measures(g: DiGraph, lc_policy: LCPolicy = "exclude") -> MeasureReport:
    tp = _prep(g, None)
    s = degree_summary(g)
    m: PairMoments = pair_moments(g, tp)
    table, d, p, cov_triple = _triple_parts(g, tp)
    v = p * (1 - p)
    rho, alpha = autocorrelation_from_variances(g.n, v, m.var_t)
    lc, low = local_clustering(g, lc_policy, tp)
    return MeasureReport(
        n=g.n,
        isolates=len(g.isolates()),
        edge_count=g.edge_count,
        mutual_count=s.mutual_count,
        density=float(d),
        mean_two_paths=float(m.t_mean),
        avg_degree=g.edge_count / g.n,
        trans_cov=Measure.of(cov_triple),
        trans_cov_pair=Measure.of(m.cov_xt),
        var_tie=Measure.of(m.var_x),
        var_two_path=Measure.of(v),
        var_two_path_count=Measure.of(m.var_t),
        clus_coef=clustering_coefficient(g, tp),
        loc_clus_coef=lc,
        lc_low_outdegree=low,
        t_phi=_corr(cov_triple, d * (1 - d), v, ZERO_TIE_VAR, ZERO_INDICATOR_VAR),
        t_phi_beta=tpb(g, tp),
        t_corr=_corr(m.cov_xt, m.var_x, m.var_t, ZERO_TIE_VAR, ZERO_COUNT_VAR),
        t_beta=_ratio(m.cov_xt, m.var_t, ZERO_COUNT_VAR),
        rho=rho,
        alpha=alpha,
        zero_residual=Measure.of(zero_tc_residual(g, tp)),
    )
