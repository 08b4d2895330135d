import pytest
from hypothesis import given
from hypothesis import strategies as st

from revmap.document import (SectionSpan, Token, TokenSeq, detect_sections,
                             token_hash, tokenize)


class TestTokenize:
    def test_word_splits_on_whitespace_runs(self):
        assert tokenize("a  b\nc", "word").texts() == ("a", "b", "c")

    def test_empty_input(self):
        assert tokenize("", "word").texts() == ()
        assert tokenize("   \n\t", "word").texts() == ()

    def test_line_splits_on_newlines(self):
        assert tokenize("x\ny\n", "line").texts() == ("x", "y")

    def test_line_drops_blank_lines(self):
        assert tokenize("x\n\n\ny", "line").texts() == ("x", "y")

    def test_unknown_granularity(self):
        with pytest.raises(ValueError):
            tokenize("a", "sentence")

    def test_deterministic(self):
        text = "alpha beta\tgamma  delta"
        assert tokenize(text) == tokenize(text)

    @given(st.lists(st.text(alphabet="abcxyz", min_size=1, max_size=6), max_size=30))
    def test_reconstruction_roundtrip(self, words):
        seq = TokenSeq.from_texts(words)
        assert tokenize(seq.text(" "), "word") == seq
        assert tokenize(seq.text("\n"), "line") == seq


class TestToken:
    def test_rejects_empty_text(self):
        with pytest.raises(ValueError):
            Token("", 0)

    def test_equal_text_equal_hash(self):
        assert token_hash("same") == token_hash("same")
        assert tokenize("x y x")[0] == tokenize("x")[0]

    def test_hash_collision_does_not_equate_tokens(self):
        h = token_hash("a")
        assert Token("a", h) != Token("b", h)

    def test_slicing_returns_tokenseq(self):
        seq = tokenize("a b c d")
        assert isinstance(seq[1:3], TokenSeq)
        assert seq[1:3].texts() == ("b", "c")


class TestDetectSections:
    def test_latex_heading_position(self):
        # heading token at position 271, mirroring a section header added
        # after the 271-th token
        words = [f"w{i}" for i in range(271)] + ["\\section{Introduction}", "intro", "text"]
        spans = detect_sections(TokenSeq.from_texts(words), "latex")
        named = [s for s in spans if s.title]
        assert named == [SectionSpan("Introduction", 271, 274)]
        assert spans[0] == SectionSpan("", 0, 271)

    def test_latex_multiword_title(self):
        words = ["\\section{Related", "Work}", "body"]
        spans = detect_sections(TokenSeq.from_texts(words), "latex")
        assert spans[0].title == "Related Work"

    def test_no_headings_falls_back_to_anonymous_span(self):
        seq = tokenize("plain words only")
        assert detect_sections(seq, "latex") == [SectionSpan("", 0, 3)]

    def test_none_format_single_span(self):
        seq = tokenize("a b c")
        assert detect_sections(seq, "none") == [SectionSpan("", 0, 3)]

    def test_empty_document(self):
        assert detect_sections(TokenSeq(), "none") == []
        assert detect_sections(TokenSeq(), "latex") == []

    def test_mediawiki_two_headings(self):
        words = ["==Intro=="] + [f"a{i}" for i in range(9)] + ["==Usage=="] + [
            f"b{i}" for i in range(9)]
        spans = detect_sections(TokenSeq.from_texts(words), "mediawiki")
        assert spans == [SectionSpan("Intro", 0, 10), SectionSpan("Usage", 10, 20)]

    def test_mediawiki_spaced_heading_word_tokens(self):
        seq = tokenize("== Early History == body text here")
        spans = detect_sections(seq, "mediawiki")
        assert spans[0].title == "Early History"
        assert spans[0].start == 0

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            detect_sections(tokenize("a"), "markdown")

    @given(st.lists(st.sampled_from(["word", "==h==", "\\section{x}"]), min_size=1, max_size=40),
           st.sampled_from(["latex", "mediawiki", "none"]))
    def test_spans_partition_document(self, words, fmt):
        seq = TokenSeq.from_texts(words)
        spans = detect_sections(seq, fmt)
        assert spans[0].start == 0
        assert spans[-1].end == len(seq)
        for left, right in zip(spans, spans[1:]):
            assert left.end == right.start
