import random
import xml.etree.ElementTree as ET

import pytest

from conftest import golden_revisions, random_history, synthetic_revisions
from revmap.document import SectionSpan
from revmap.graph import build, compute_scripts, new_graph
from revmap.historyflow import to_history_flow
from revmap.layout import layout
from revmap.render import (StyleConfig, heat_color, render_history_flow_svg,
                           render_svg)


def golden_model(**kwargs):
    g = build(golden_revisions())
    return layout(g, [SectionSpan("all", 0, 5)], **kwargs)


class TestRenderSvg:
    def test_empty_model_is_valid_svg_with_frame(self):
        svg = render_svg(layout(new_graph()))
        root = ET.fromstring(svg)
        assert root.tag.endswith("svg")
        assert 'class="frame"' in svg

    def test_fixture_rect_counts(self):
        svg = render_svg(golden_model())
        assert svg.count('class="persistent"') == 5
        assert svg.count('class="deleted"') == 2
        assert svg.count(StyleConfig().persistent_color) == 5
        assert svg.count(StyleConfig().deleted_color) == 2

    def test_byte_determinism(self):
        m = golden_model()
        assert render_svg(m).encode() == render_svg(m).encode()

    def test_draw_order(self):
        svg = render_svg(golden_model())
        order = ["author-bands", "section-bands", "edges", '"nodes"',
                 "top-bar", "right-bar"]
        positions = [svg.index(name) for name in order]
        assert positions == sorted(positions)

    def test_well_formed_for_random_graphs(self):
        for seed in range(5):
            revisions = random_history(random.Random(seed), max_revs=8, max_len=40)
            g = build(revisions)
            svg = render_svg(layout(g))
            ET.fromstring(svg)
            assert svg.count('class="persistent"') == len(g.chain)
            assert svg.count('class="deleted"') == len(g.nodes) - len(g.chain)

    def test_compact_mode_changes_geometry(self):
        loose = render_svg(golden_model(compact=False))
        tight = render_svg(golden_model(compact=True))
        assert loose != tight

    def test_section_title_escaped(self):
        g = build(golden_revisions())
        m = layout(g, [SectionSpan("a<b&c", 0, 5)])
        svg = render_svg(m)
        assert "a&lt;b&amp;c" in svg
        ET.fromstring(svg)


class TestStyleConfig:
    def test_rejects_empty_palette(self):
        with pytest.raises(ValueError):
            StyleConfig(author_palette=())

    def test_rejects_non_positive_scale(self):
        with pytest.raises(ValueError):
            StyleConfig(x_per_token=0)

    def test_heat_color_endpoints(self):
        assert heat_color(0.0) == "#2b1a33"
        assert heat_color(1.0) == "#ffd94a"
        assert heat_color(-3.0) == heat_color(0.0)
        assert heat_color(9.0) == heat_color(1.0)

    def test_heat_color_unknown_map(self):
        with pytest.raises(ValueError):
            heat_color(0.5, "plasma-ultra")


class TestRenderHistoryFlow:
    def test_single_revision_single_author(self):
        revisions = golden_revisions()[:1]
        hf = to_history_flow(build(revisions), compute_scripts(revisions))
        svg = render_history_flow_svg(hf)
        ET.fromstring(svg)
        assert svg.count("<rect") == 2  # frame + one segment

    def test_fixture_column_heights_proportional(self):
        revisions = golden_revisions()
        hf = to_history_flow(build(revisions), compute_scripts(revisions))
        s = StyleConfig()
        svg = render_history_flow_svg(hf, s)
        # parts: preamble, svg element height, frame height, then the columns
        heights = [float(part.split('"')[0]) for part in svg.split('height="')[3:]]
        expected = [n * s.hf_y_per_token for n in (5, 6, 5, 5)]
        assert heights == pytest.approx(expected)

    def test_byte_determinism(self):
        revisions = synthetic_revisions()
        hf = to_history_flow(build(revisions), compute_scripts(revisions))
        assert render_history_flow_svg(hf) == render_history_flow_svg(hf)
