"""Brute-force reference statistics for small digraphs.

Every quantity is computed by literal enumeration of ordered triples, pairs
or quadruples with exact ``Fraction`` arithmetic. Nothing here imports the
counting code in ``triads`` or ``measures``; the two must agree independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .graph import DiGraph

TRIPLE_CAP = 60
PAIR_CAP = 40


class OracleRefused(ValueError):
    pass


def _tie(g: DiGraph):
    arcs = g.arcs
    return lambda i, j: 1 if (i, j) in arcs else 0


@dataclass(frozen=True)
class BruteTriple:
    p11: Fraction
    p10: Fraction
    p01: Fraction
    p00: Fraction
    tt_count: int
    cov_triple: Fraction
    var_x: Fraction
    var_indicator: Fraction


def brute_triple_stats(g: DiGraph, cap: int = TRIPLE_CAP) -> BruteTriple:
    if g.n > cap:
        raise OracleRefused(f"n={g.n} exceeds oracle cap {cap}")
    if g.n < 3:
        raise OracleRefused("need n >= 3")
    x = _tie(g)
    cells = {(1, 1): 0, (1, 0): 0, (0, 1): 0, (0, 0): 0}
    for i, j, k in permutations(range(g.n), 3):
        cells[x(i, j), x(i, k) * x(k, j)] += 1
    total = sum(cells.values())
    p = {key: Fraction(v, total) for key, v in cells.items()}
    p1_ = p[1, 1] + p[1, 0]
    p_1 = p[1, 1] + p[0, 1]
    # E[x * y] - E[x] E[y] with everything tallied from the table
    return BruteTriple(
        p11=p[1, 1],
        p10=p[1, 0],
        p01=p[0, 1],
        p00=p[0, 0],
        tt_count=cells[1, 1],
        cov_triple=p[1, 1] - p1_ * p_1,
        var_x=p1_ - p1_**2,
        var_indicator=p_1 - p_1**2,
    )


@dataclass(frozen=True)
class BrutePair:
    cov_pair: Fraction
    var_t: Fraction
    var_x: Fraction
    mean_t: Fraction
    var_indicator: Fraction
    cov_indicator_pairs: Fraction | None  # cov(x_ik x_kj, x_il x_lj), k != l
    rho_direct: Fraction | None


def brute_pair_stats(g: DiGraph, cap: int = PAIR_CAP) -> BrutePair:
    if g.n > cap:
        raise OracleRefused(f"n={g.n} exceeds oracle cap {cap}")
    if g.n < 3:
        raise OracleRefused("need n >= 3")
    n = g.n
    x = _tie(g)
    pairs = list(permutations(range(n), 2))
    t = {}
    for i, j in pairs:
        t[i, j] = sum(x(i, h) * x(h, j) for h in range(n) if h != i and h != j)
    npairs = len(pairs)
    mean_x = Fraction(sum(x(i, j) for i, j in pairs), npairs)
    mean_t = Fraction(sum(t.values()), npairs)
    cov = sum((x(i, j) - mean_x) * (t[i, j] - mean_t) for i, j in pairs) / npairs
    var_t = sum((t[i, j] - mean_t) ** 2 for i, j in pairs) / npairs
    var_x = sum((x(i, j) - mean_x) ** 2 for i, j in pairs) / npairs

    # single intermediate: random (i, j) then random k
    ys = [x(i, k) * x(k, j) for i, j in pairs for k in range(n) if k not in (i, j)]
    mean_y = Fraction(sum(ys), len(ys))
    var_y = sum((y - mean_y) ** 2 for y in ys) / len(ys)

    cov_yy = rho = None
    if n >= 4:
        # random (i, j), then random ordered (k, l) of distinct intermediates
        prods = []
        for i, j in pairs:
            others = [h for h in range(n) if h != i and h != j]
            for k, l in permutations(others, 2):
                prods.append((x(i, k) * x(k, j) - mean_y) * (x(i, l) * x(l, j) - mean_y))
        cov_yy = sum(prods, Fraction(0)) / len(prods)
        if var_y != 0:
            rho = cov_yy / var_y
    return BrutePair(cov, var_t, var_x, mean_t, var_y, cov_yy, rho)


def brute_local_clustering(g: DiGraph, policy: str = "exclude") -> Fraction | None:
    x = _tie(g)
    vals = []
    for i in range(g.n):
        od = sum(x(i, j) for j in range(g.n) if j != i)
        if od < 2:
            if policy == "zero":
                vals.append(Fraction(0))
            continue
        closed = sum(
            x(i, j) * x(i, h) * x(h, j) for j, h in permutations(range(g.n), 2) if i not in (j, h)
        )
        vals.append(Fraction(closed, od * (od - 1)))
    if not vals:
        return None
    return sum(vals, Fraction(0)) / len(vals)


def brute_zero_residual(g: DiGraph) -> Fraction:
    """TT - (n cov(OD,ID) + n d^2 - M) d / (n(n-1)) from explicit loops."""
    n = g.n
    x = _tie(g)
    od = [sum(x(i, j) for j in range(n) if j != i) for i in range(n)]
    idg = [sum(x(i, j) for i in range(n) if i != j) for j in range(n)]
    d = Fraction(sum(od), n * (n - 1))
    mutual = sum(x(i, j) * x(j, i) for i, j in permutations(range(n), 2))
    cov_deg = Fraction(sum(a * b for a, b in zip(od, idg)), n) - d * d
    tt = Fraction(
        sum(x(i, j) * x(i, h) * x(h, j) for i, j, h in permutations(range(n), 3)), n * (n - 1)
    )
    return tt - (n * cov_deg + n * d * d - mutual) * d / (n * (n - 1))


def _sqrt_ratio(num: Fraction, a: Fraction, b: Fraction) -> float | None:
    if a == 0 or b == 0:
        return None
    return float(num) / math.sqrt(float(a) * float(b))


def brute_measures(g: DiGraph, lc_policy: str = "exclude") -> dict[str, float | None]:
    """Every scalar measure by enumeration; ``None`` marks undefined."""
    tri = brute_triple_stats(g)
    pr = brute_pair_stats(g)
    n = g.n
    two_paths = n * (n - 1) * (n - 2) * (tri.p11 + tri.p01)
    out: dict[str, float | None] = {
        "trans_cov": float(tri.cov_triple),
        "trans_cov_pair": float(pr.cov_pair),
        "var_tie": float(pr.var_x),
        "var_two_path": float(pr.var_indicator),
        "var_two_path_count": float(pr.var_t),
        "clus_coef": float(Fraction(tri.tt_count) / two_paths) if two_paths else None,
        "t_phi_beta": (
            float(tri.p11 / (tri.p11 + tri.p01) - tri.p10 / (1 - tri.p11 - tri.p01))
            if tri.var_indicator
            else None
        ),
        "t_phi": _sqrt_ratio(tri.cov_triple, tri.var_x, tri.var_indicator),
        "t_corr": _sqrt_ratio(pr.cov_pair, pr.var_x, pr.var_t),
        "t_beta": float(pr.cov_pair / pr.var_t) if pr.var_t else None,
        "rho": float(pr.rho_direct) if pr.rho_direct is not None else None,
        "zero_residual": float(brute_zero_residual(g)),
    }
    lc = brute_local_clustering(g, lc_policy)
    out["loc_clus_coef"] = float(lc) if lc is not None else None
    if pr.var_indicator and pr.var_t:
        # alpha from its definition with the enumerated autocovariance
        inner = (n - 2) * (pr.var_indicator + (n - 3) * (pr.cov_indicator_pairs or 0))
        out["alpha"] = (n - 2) * math.sqrt(float(pr.var_indicator)) / math.sqrt(float(inner))
    else:
        out["alpha"] = None
    return out
