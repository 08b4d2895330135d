import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import golden_revisions, random_history
from revmap.document import Revision, SectionSpan, TokenSeq, tokenize
from revmap.graph import build, new_graph
from revmap.layout import (DELETED, PERSISTENT, assign_author_bands,
                           compute_change_bars, layout, _normalize)

import numpy as np


def _revisions(author_contents):
    return [
        Revision(i + 1, author, f"2019-05-{i + 1:02d}T08:00:00+00:00", "", tokenize(text))
        for i, (author, text) in enumerate(author_contents)
    ]


class TestLayoutRects:
    def test_golden_fixture_coordinates(self):
        m = layout(build(golden_revisions()))
        alive = [(r.x0, r.x1, r.row) for r in m.rects if r.kind == PERSISTENT]
        assert alive == [(0, 1, 1), (1, 2, 4), (2, 3, 1), (3, 4, 2), (4, 5, 1)]
        dead = [(r.x0, r.x1, r.row) for r in m.rects if r.kind == DELETED]
        assert dead == [(1, 2, 1), (4, 5, 1)]  # hang right after their anchors

    def test_single_revision_document(self):
        m = layout(build(_revisions([("a", "t0 t1 t2 t3")])))
        assert [(r.x0, r.x1, r.row, r.kind) for r in m.rects] == [(0, 4, 1, PERSISTENT)]

    def test_empty_graph(self):
        m = layout(new_graph())
        assert m.rects == ()
        assert m.edges == ()
        assert m.latest_len == 0

    def test_edges_connect_consecutive_chain_members(self):
        g = build(golden_revisions())
        m = layout(g)
        assert list(m.edges) == list(zip(g.chain, g.chain[1:]))

    def test_compact_flag_recorded(self):
        g = build(golden_revisions())
        assert layout(g, compact=True).compact
        assert not layout(g).compact

    def test_section_bands_carry_color_classes(self):
        g = build(golden_revisions())
        sections = [SectionSpan("one", 0, 2), SectionSpan("two", 2, 5)]
        m = layout(g, sections)
        assert [(s.title, cls) for s, cls in m.section_bands] == [("one", 0), ("two", 1)]

    @given(st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_visual_invariants(self, seed):
        revisions = random_history(random.Random(seed), max_revs=10, max_len=60)
        g = build(revisions)
        m = layout(g)
        persistent = sorted((r for r in m.rects if r.kind == PERSISTENT),
                            key=lambda r: r.x0)
        for left, right in zip(persistent, persistent[1:]):
            assert left.x1 <= right.x0
        assert sum(r.x1 - r.x0 for r in persistent) == m.latest_len
        ordered = [t for r in persistent for t in g.nodes[r.node].tokens.texts()]
        assert tuple(ordered) == g.project_latest().texts()
        node_ids = {r.node for r in m.rects}
        assert node_ids == set(g.nodes)
        for r in m.rects:
            assert 1 <= r.row <= m.revision_count


class TestChangeBars:
    def test_golden_revision_heat(self):
        bars = compute_change_bars(build(golden_revisions()), buckets=5)
        # edited token counts per revision are 5, 1, 1, 2
        assert bars.revision_heat == (1.0, 0.2, 0.2, 0.4)

    def test_singleton_is_normalized_to_one(self):
        bars = compute_change_bars(build(_revisions([("a", "x y z")])))
        assert bars.revision_heat == (1.0,)

    def test_edits_in_first_half_only(self):
        revs = _revisions([
            ("a", " ".join(f"t{i}" for i in range(20))),
            ("a", " ".join(["n0", "n1"] + [f"t{i}" for i in range(20)])),
            ("a", " ".join(["n0", "n1"] + [f"t{i}" for i in range(4, 20)])),
        ])
        bars = compute_change_bars(build(revs), buckets=10)
        first, second = bars.column_heat[:5], bars.column_heat[5:]
        assert max(second) < max(first)

    def test_bucket_count_respected(self):
        bars = compute_change_bars(build(golden_revisions()), buckets=3)
        assert len(bars.column_heat) == 3
        assert len(bars.revision_heat) == 4
        assert max(bars.column_heat) == 1.0

    def test_default_bucket_count_capped(self):
        g = build(_revisions([("a", " ".join(f"t{i}" for i in range(600)))]))
        assert len(compute_change_bars(g).column_heat) == 512
        small = build(_revisions([("a", "a b c")]))
        assert len(compute_change_bars(small).column_heat) == 3

    def test_rejects_bad_arguments(self):
        g = build(golden_revisions())
        with pytest.raises(ValueError):
            compute_change_bars(g, buckets=0)
        with pytest.raises(ValueError):
            compute_change_bars(g, scale="sqrt")

    def test_linear_normalization_is_scale_free(self):
        v = np.array([1.0, 3.0, 2.0])
        assert _normalize(2 * v, "linear") == _normalize(v, "linear")

    def test_log_scale_keeps_argmax(self):
        g = build(golden_revisions())
        lin = compute_change_bars(g, scale="linear")
        log = compute_change_bars(g, scale="log")
        assert lin.revision_heat.index(1.0) == log.revision_heat.index(1.0)
        assert max(log.revision_heat) == 1.0


class TestAuthorBands:
    def test_first_appearance_order(self):
        g = build(_revisions([("A", "a"), ("B", "a b"), ("B", "a b c"), ("A", "a b c d")]))
        assert assign_author_bands(g) == (0, 1, 1, 0)

    def test_single_author(self):
        g = build(golden_revisions())
        assert assign_author_bands(g) == (0, 0, 0, 0)

    def test_three_authors_three_classes(self):
        g = build(_revisions([("ann", "a"), ("ben", "a b"), ("cat", "a b c")]))
        assert len(set(assign_author_bands(g))) == 3
