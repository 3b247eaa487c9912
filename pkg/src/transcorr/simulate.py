"""Erdos-Renyi null study: per-density means of the transitivity measures."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence, TextIO

from .generators import ErParams, gen_erdos_renyi
from .measures import all_measures

SIM_MEASURES = ("t_corr", "t_phi", "t_beta", "t_phi_beta", "clus_coef", "loc_clus_coef", "density")


def _stream_key(p: float) -> int:
    # spawn keys must be integers; keyed on p so the grid order is irrelevant
    return int(round(p * 10**9))


def replicate(n: int, p: float, seed: int, rep: int) -> dict[str, float | None]:
    g = gen_erdos_renyi(ErParams(n, p, seed, stream=(_stream_key(p), rep)))
    report = all_measures(g)
    out = {}
    for name in SIM_MEASURES:
        v = getattr(report, name)
        out[name] = v if isinstance(v, float) else v.value
    return out


def _replicate_args(args):
    return replicate(*args)


@dataclass(frozen=True)
class Summary:
    mean: float | None
    se: float | None
    defined: int


def summarize(values: Sequence[float | None]) -> Summary:
    vals = [v for v in values if v is not None]
    if not vals:
        return Summary(None, None, 0)
    mean = math.fsum(vals) / len(vals)
    if len(vals) < 2:
        return Summary(mean, None, len(vals))
    var = math.fsum((v - mean) ** 2 for v in vals) / (len(vals) - 1)
    return Summary(mean, math.sqrt(var / len(vals)), len(vals))


def simulate_er(
    n: int, densities: Sequence[float], reps: int, seed: int = 0, workers: int = 1
) -> list[tuple[float, dict[str, Summary]]]:
    """``reps`` graphs per density; replicate k at density p is seeded by (seed, p, k),
    so results do not depend on ``workers``."""
    if reps < 1:
        raise ValueError("reps must be >= 1")
    if n < 3:
        raise ValueError("n must be >= 3")
    for p in densities:
        if not 0 < p < 1:
            raise ValueError(f"densities must lie in (0, 1), got {p}")
    tasks = [(n, p, seed, k) for p in densities for k in range(reps)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_replicate_args, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        results = [replicate(*t) for t in tasks]
    rows = []
    for i, p in enumerate(densities):
        block = results[i * reps:(i + 1) * reps]
        rows.append((p, {m: summarize([r[m] for r in block]) for m in SIM_MEASURES}))
    return rows


def _cell(x) -> str:
    return "" if x is None else repr(x)


def write_simulation_csv(rows, reps: int, sink: TextIO) -> None:
    cols = ["p", "reps"]
    for m in SIM_MEASURES:
        cols += [f"{m}_mean", f"{m}_se", f"{m}_defined"]
    sink.write(",".join(cols) + "\n")
    for p, summ in rows:
        cells = [repr(p), str(reps)]
        for m in SIM_MEASURES:
            s = summ[m]
            cells += [_cell(s.mean), _cell(s.se), str(s.defined)]
        sink.write(",".join(cells) + "\n")
