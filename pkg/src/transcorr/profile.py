"""Tie probability as a function of two-path count: binning, CSV and SVG output."""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TextIO
from xml.sax.saxutils import escape

from .graph import DegenerateGraphError, DiGraph
from .measures import NO_TWO_PATHS, ZERO_COUNT_VAR, Measure, MeasureReport, all_measures
from .triads import two_path_counts


@dataclass(frozen=True)
class ConditionalProfile:
    """Dense bins over k = 0..max T. ``pairs[k]`` ordered pairs have T_ij = k,
    ``ties[k]`` of them carry an arc."""

    pairs: tuple[int, ...]
    ties: tuple[int, ...]
    c_line: Measure
    slope: Measure
    intercept: Measure
    include_isolates: bool = True
    report: MeasureReport | None = None

    def p_tie(self, k: int) -> Fraction | None:
        return Fraction(self.ties[k], self.pairs[k]) if self.pairs[k] else None

    def nonempty(self) -> list[int]:
        return [k for k, n in enumerate(self.pairs) if n]

    @property
    def drops(self) -> list[int]:
        """k where the tie probability falls below that of the previous non-empty bin."""
        out, prev = [], None
        for k in self.nonempty():
            p = self.p_tie(k)
            if prev is not None and p < prev:
                out.append(k)
            prev = p
        return out

    def weighted_c(self) -> Fraction | None:
        """sum k*ties(k) / sum k*pairs(k): the two-path weighted mean tie probability."""
        den = sum(k * n for k, n in enumerate(self.pairs))
        if den == 0:
            return None
        return Fraction(sum(k * t for k, t in enumerate(self.ties)), den)


def _fit(pairs, ties) -> tuple[Measure, Measure]:
    total = sum(pairs)
    sx = Fraction(sum(ties), total)
    st = Fraction(sum(k * n for k, n in enumerate(pairs)), total)
    stt = Fraction(sum(k * k * n for k, n in enumerate(pairs)), total)
    sxt = Fraction(sum(k * t for k, t in enumerate(ties)), total)
    var = stt - st * st
    if var == 0:
        return Measure.undefined(ZERO_COUNT_VAR), Measure.undefined(ZERO_COUNT_VAR)
    slope = (sxt - sx * st) / var
    return Measure.of(slope), Measure.of(sx - slope * st)


def conditional_profile(g: DiGraph, include_isolates: bool = True) -> ConditionalProfile:
    """Bin every ordered pair by its two-path count.

    With ``include_isolates=False`` pairs touching an isolate are left out of
    the bins (and so of the fitted line); ``report`` still describes the
    whole graph. Such pairs all sit in bin 0, so the weighted mean is C
    either way.
    """
    if g.n < 3:
        raise DegenerateGraphError(f"profile needs n >= 3, got n={g.n}")
    tp = two_path_counts(g)
    kmax = tp.max()
    pairs = [0] * (kmax + 1)
    ties = [0] * (kmax + 1)
    c = tp.counts.tocoo()
    for v in c.data:
        pairs[int(v)] += 1
    closed = tp.counts.multiply(g.adjacency).tocoo()
    for v in closed.data:
        if v:
            ties[int(v)] += 1
    ties[0] = g.edge_count - sum(ties[1:])
    n_used = g.n if include_isolates else g.n - len(g.isolates())
    pairs[0] = n_used * (n_used - 1) - sum(pairs[1:])
    slope, intercept = _fit(pairs, ties)
    report = all_measures(g)
    wc = sum(k * t for k, t in enumerate(ties))
    c_line = Measure.of(Fraction(wc, sum(k * n for k, n in enumerate(pairs)))) if kmax else Measure.undefined(NO_TWO_PATHS)
    return ConditionalProfile(
        tuple(pairs), tuple(ties), c_line, slope, intercept, include_isolates, report
    )


def _num(x) -> str:
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def write_profile_csv(p: ConditionalProfile, sink: TextIO) -> None:
    sink.write("k,pairs,ties,p_tie\n")
    for k in p.nonempty():
        sink.write(f"{k},{p.pairs[k]},{p.ties[k]},{_num(p.p_tie(k))}\n")
    for key, m in (("C", p.c_line), ("TB", p.slope), ("intercept", p.intercept)):
        sink.write(f"# {key}={_num(m.value) if m.defined else m.status}\n")


def emit_profile_csv(p: ConditionalProfile) -> str:
    buf = io.StringIO()
    write_profile_csv(p, buf)
    return buf.getvalue()


def read_profile_csv(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Back to dense (pairs, ties) bins; omitted k are empty."""
    rows = {}
    for line in text.splitlines():
        if not line or line.startswith("#") or line.startswith("k,"):
            continue
        k, n, t, _ = line.split(",")
        rows[int(k)] = (int(n), int(t))
    kmax = max(rows, default=0)
    pairs = tuple(rows.get(k, (0, 0))[0] for k in range(kmax + 1))
    ties = tuple(rows.get(k, (0, 0))[1] for k in range(kmax + 1))
    return pairs, ties


@dataclass(frozen=True)
class SvgOptions:
    width: int = 720
    height: int = 440
    max_dot_area: float = 600.0  # px^2 for the most populated bin
    title: str = ""


_STATS = [
    ("n", "n"),
    ("isolates", "isolates"),
    ("density", "density"),
    ("mean_two_paths", "mean 2-paths"),
    ("avg_degree", "avg. degree"),
    ("trans_cov", "trans. cov."),
    ("clus_coef", "clus. coef."),
    ("loc_clus_coef", "loc. clus. coef."),
    ("t_corr", "T. corr."),
    ("t_beta", "T. beta"),
]


def _fmt(v) -> str:
    if isinstance(v, Measure):
        return f"{v.value:.3f}" if v.defined else "undefined"
    if isinstance(v, int):
        return str(v)
    return f"{v:.3f}"


def emit_profile_svg(p: ConditionalProfile, options: SvgOptions = SvgOptions()) -> str:
    """Standalone SVG 1.1 chart: dots with area proportional to pair counts,
    a connecting polyline, a dotted line at C and the dashed least-squares line."""
    w, h = options.width, options.height
    left, right, top, bottom = 60, 220, 30, 50
    pw, ph = w - left - right, h - top - bottom
    kmax = max(len(p.pairs) - 1, 1)

    def sx(k: float) -> float:
        return left + pw * k / kmax

    def sy(y: float) -> float:
        return top + ph * (1 - y)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="11">',
        f'<defs><clipPath id="plot"><rect x="{left}" y="{top}" width="{pw}" height="{ph}"/></clipPath></defs>',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="#000"/>',
    ]
    if options.title:
        out.append(f'<text x="{left}" y="{top - 10}" font-size="13">{escape(options.title)}</text>')

    for frac in (0, 0.25, 0.5, 0.75, 1):
        out.append(f'<text x="{left - 6}" y="{sy(frac) + 4:.2f}" text-anchor="end">{frac:g}</text>')
    step = max(1, math.ceil(kmax / 10))
    for k in range(0, kmax + 1, step):
        out.append(f'<text x="{sx(k):.2f}" y="{top + ph + 16}" text-anchor="middle">{k}</text>')
    out.append(
        f'<text x="{left + pw / 2:.2f}" y="{h - 12}" text-anchor="middle">number of two-paths i-&gt;h-&gt;j</text>'
    )
    out.append(
        f'<text transform="translate(16 {top + ph / 2:.2f}) rotate(-90)" text-anchor="middle">P(tie i-&gt;j | two-paths)</text>'
    )

    notes = []
    if p.c_line.defined:
        y = sy(p.c_line.value)
        out.append(
            f'<line class="c-line" x1="{left}" y1="{y:.2f}" x2="{left + pw}" y2="{y:.2f}" '
            f'stroke="#555" stroke-dasharray="2,3"/>'
        )
    else:
        notes.append(f"C {p.c_line.status}")
    if p.slope.defined:
        a, b = p.intercept.value, p.slope.value
        out.append(
            f'<line class="tb-line" clip-path="url(#plot)" x1="{sx(0):.2f}" y1="{sy(a):.2f}" '
            f'x2="{sx(kmax):.2f}" y2="{sy(a + b * kmax):.2f}" stroke="#c00" stroke-dasharray="8,4"/>'
        )
    else:
        notes.append(f"regression line {p.slope.status}")

    ks = p.nonempty()
    if len(ks) > 1:
        pts = " ".join(f"{sx(k):.2f},{sy(float(p.p_tie(k))):.2f}" for k in ks)
        out.append(f'<polyline points="{pts}" fill="none" stroke="#36c"/>')
    biggest = max(p.pairs) or 1
    for k in ks:
        r = math.sqrt(options.max_dot_area * p.pairs[k] / biggest / math.pi)
        out.append(
            f'<circle class="bin" cx="{sx(k):.2f}" cy="{sy(float(p.p_tie(k))):.2f}" r="{max(r, 1.0):.2f}" '
            f'fill="#36c" fill-opacity="0.6" data-k="{k}" data-pairs="{p.pairs[k]}"/>'
        )
    for k in p.drops:
        x, y = sx(k), sy(float(p.p_tie(k)))
        out.append(
            f'<path class="drop" d="M{x - 5:.2f},{y + 8:.2f} L{x + 5:.2f},{y + 8:.2f} L{x:.2f},{y + 16:.2f} Z" fill="#c00"/>'
        )

    tx, ty = left + pw + 16, top + 10
    if p.report is not None:
        for key, label in _STATS:
            out.append(f'<text x="{tx}" y="{ty}">{label}: {_fmt(getattr(p.report, key))}</text>')
            ty += 15
    for note in notes:
        ty += 5
        out.append(f'<text class="note" x="{tx}" y="{ty}" fill="#c00">{escape(note)}</text>')
        ty += 15
    out.append("</svg>")
    return "\n".join(out) + "\n"
