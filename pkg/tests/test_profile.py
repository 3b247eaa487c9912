import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest
from hypothesis import given, settings

from transcorr.generators import WindmillParams, gen_clique_union, gen_windmill
from transcorr.graph import DegenerateGraphError, DiGraph
from transcorr.measures import all_measures
from transcorr.profile import (
    SvgOptions,
    conditional_profile,
    emit_profile_csv,
    emit_profile_svg,
    read_profile_csv,
)
from transcorr.triads import pair_moments

from conftest import digraphs

W24 = gen_windmill(WindmillParams(2, 4))
SVG = "{http://www.w3.org/2000/svg}"


def test_triangle_profile(trans_triangle):
    p = conditional_profile(trans_triangle)
    assert p.pairs == (5, 1) and p.ties == (2, 1)
    assert p.p_tie(0) == Fraction(2, 5) and p.p_tie(1) == 1
    assert abs(p.slope.value - 0.6) < 1e-12
    assert emit_profile_csv(p).splitlines()[:3] == ["k,pairs,ties,p_tie", "0,5,2,0.4", "1,1,1,1"]


def test_windmill_profile():
    p = conditional_profile(W24)
    assert [(k, p.pairs[k], p.ties[k]) for k in p.nonempty()] == [(1, 18, 0), (2, 24, 24)]
    assert p.pairs[0] == 0
    assert abs(p.slope.value - 1) < 1e-12
    rows = emit_profile_csv(p).splitlines()
    assert rows[1:3] == ["1,18,0,0", "2,24,24,1"]
    assert "# C=0.7272727272727273" in rows and "# TB=1" in rows


def test_empty_graph_profile(empty5):
    p = conditional_profile(empty5)
    assert p.pairs == (20,) and p.ties == (0,)
    assert not p.slope.defined and not p.c_line.defined
    assert "# TB=undefined(zero two-path count variance)" in emit_profile_csv(p)


def test_degenerate():
    with pytest.raises(DegenerateGraphError):
        conditional_profile(DiGraph(2, frozenset()))


def test_isolate_exclusion():
    g = gen_clique_union([3, 4], isolates=3)
    full = conditional_profile(g)
    trimmed = conditional_profile(g, include_isolates=False)
    assert sum(full.pairs) == 10 * 9 and sum(trimmed.pairs) == 7 * 6
    assert full.pairs[1:] == trimmed.pairs[1:]
    assert full.weighted_c() == trimmed.weighted_c()
    assert trimmed.report.isolates == 3
    assert abs(full.slope.value - all_measures(g).t_beta.value) < 1e-12
    assert trimmed.slope.value != full.slope.value


def test_drop_flags():
    # pair (0,1): 3 two-paths, no tie; pairs with 1 two-path closed
    arcs = {(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1), (5, 6), (6, 7), (5, 7)}
    p = conditional_profile(DiGraph(8, frozenset(arcs)))
    assert p.ties[3] == 0 and p.p_tie(1) > 0
    assert p.drops == [3]


@settings(deadline=None, max_examples=200)
@given(digraphs(3, 8))
def test_profile_identities(g):
    p = conditional_profile(g)
    m = pair_moments(g)
    assert sum(p.pairs) == g.n * (g.n - 1)
    assert sum(p.ties) == g.edge_count
    if m.t_sum:
        assert p.weighted_c() == Fraction(m.tt_count, m.t_sum)
    r = all_measures(g)
    assert p.slope.defined == r.t_beta.defined
    if p.slope.defined:
        assert abs(p.slope.value - r.t_beta.value) <= 1e-12
        assert abs(p.intercept.value - (r.density - p.slope.value * r.mean_two_paths)) <= 1e-12
    assert read_profile_csv(emit_profile_csv(p)) == (
        p.pairs[: max(p.nonempty()) + 1],
        p.ties[: max(p.nonempty()) + 1],
    )


def test_svg_windmill():
    p = conditional_profile(W24)
    text = emit_profile_svg(p)
    assert text == emit_profile_svg(p)
    root = ET.fromstring(text)
    assert root.get("version") == "1.1"
    dots = root.findall(f"{SVG}circle")
    assert [d.get("data-k") for d in dots] == ["1", "2"]
    # area proportional to pair counts: r^2 ratio 18/24
    r1, r2 = (float(d.get("r")) for d in dots)
    assert abs(r1**2 / r2**2 - 18 / 24) < 1e-3
    c_line = root.find(f"{SVG}line[@class='c-line']")
    assert c_line.get("stroke-dasharray") == "2,3"
    tb_line = root.find(f"{SVG}line[@class='tb-line']")
    assert tb_line.get("stroke-dasharray") == "8,4"
    # slope 1 in data units, intercept -1: passes (1, 0) and (2, 1)
    x1, y1, x2, y2 = (float(tb_line.get(a)) for a in ("x1", "y1", "x2", "y2"))
    opts = SvgOptions()
    ph = opts.height - 30 - 50
    assert abs(((y1 - y2) / ph) / ((x2 - x1) / (opts.width - 60 - 220) * 2) - 1) < 1e-3
    assert "clus. coef.: 0.727" in text


def test_svg_no_two_paths():
    g = DiGraph(4, frozenset({(0, 1)}))
    root = ET.fromstring(emit_profile_svg(conditional_profile(g)))
    assert root.find(f"{SVG}line[@class='tb-line']") is None
    assert [d.get("data-k") for d in root.findall(f"{SVG}circle")] == ["0"]
    notes = [t.text for t in root.findall(f"{SVG}text[@class='note']")]
    assert any("regression line undefined" in n for n in notes)


def test_svg_drop_markers():
    arcs = {(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1), (5, 6), (6, 7), (5, 7)}
    root = ET.fromstring(emit_profile_svg(conditional_profile(DiGraph(8, frozenset(arcs)))))
    assert len(root.findall(f"{SVG}path[@class='drop']")) == 1
