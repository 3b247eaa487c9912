"""Field-by-field comparison of computed windmill measures with their closed forms."""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Callable, Iterable

from .generators import WindmillParams, gen_windmill, windmill_analytic, windmill_two_paths
from .measures import Measure, MeasureReport, all_measures
from .triads import two_path_counts

TOL = 1e-12


@dataclass
class Mismatch:
    m: int
    r: int
    field: str
    detail: str

    def __str__(self):
        return f"m={self.m} r={self.r} {self.field}: {self.detail}"


@dataclass
class VerifyResult:
    checked: int = 0
    max_deviation: float = 0.0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare_reports(computed: MeasureReport, expected: MeasureReport, tol: float = TOL):
    """Yield (field, deviation, problem) for every numeric field; ``problem`` is
    None when the field agrees."""
    for f in fields(MeasureReport):
        a, b = getattr(computed, f.name), getattr(expected, f.name)
        if isinstance(a, Measure):
            if a.defined != b.defined:
                yield f.name, None, f"status {a.status} vs {b.status}"
                continue
            if not a.defined:
                yield f.name, 0.0, None
                continue
            a, b = a.value, b.value
        dev = abs(float(a) - float(b))
        yield f.name, dev, (f"{a!r} vs {b!r} (|diff|={dev:.3g})" if dev > tol else None)


def verify_windmills(
    ms: Iterable[int],
    rs: Iterable[int],
    analytic: Callable[[WindmillParams], MeasureReport] = windmill_analytic,
    tol: float = TOL,
) -> VerifyResult:
    res = VerifyResult()
    rs = list(rs)
    for m in ms:
        for r in rs:
            params = WindmillParams(m, r)
            g = gen_windmill(params)
            total = two_path_counts(g).total
            if total != windmill_two_paths(params):
                res.mismatches.append(
                    Mismatch(m, r, "two_path_total", f"{total} vs {windmill_two_paths(params)}")
                )
            for name, dev, problem in compare_reports(all_measures(g), analytic(params), tol):
                res.checked += 1
                if dev is not None:
                    res.max_deviation = max(res.max_deviation, dev)
                if problem:
                    res.mismatches.append(Mismatch(m, r, name, problem))
    return res
