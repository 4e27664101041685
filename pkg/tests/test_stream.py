"""Stream algorithm: word merging, row banding, column inference."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdfgrid.errors import ExtractionError
from pdfgrid.geom import PageDims, PageRect
from pdfgrid.model import PageContent, TextChunk, TextElement
from pdfgrid.stream import (
    extract_stream,
    group_lines,
    group_rows,
    infer_columns,
    merge_words,
)


def glyph(left: float, top: float, text: str, width: float = 6.0, height: float = 10.0,
          wos: float = 6.0) -> TextElement:
    return TextElement(
        bbox=PageRect(top=top, left=left, bottom=top + height, right=left + width),
        text=text,
        font_size=10.0,
        width_of_space=wos,
    )


def word(text: str, left: float, top: float, char_w: float = 6.0, wos: float = 6.0,
         height: float = 10.0) -> list[TextElement]:
    return [
        glyph(left + i * char_w, top, ch, width=char_w, height=height, wos=wos)
        for i, ch in enumerate(text)
    ]


def chunk(text: str, left: float, top: float, char_w: float = 6.0, wos: float = 6.0) -> TextChunk:
    return TextChunk.from_elements(word(text, left, top, char_w=char_w, wos=wos))


class TestMergeWords:
    def test_adjacent_glyphs_join(self):
        chunks = merge_words(word("cat", 10, 100))
        assert [c.text for c in chunks] == ["cat"]
        assert chunks[0].bbox.left == 10 and chunks[0].bbox.right == 28

    def test_gap_at_half_space_splits(self):
        els = word("ab", 10, 100) + word("cd", 10 + 12 + 3.0, 100)
        assert [c.text for c in merge_words(els)] == ["ab", "cd"]

    def test_gap_below_half_space_joins(self):
        els = word("ab", 10, 100) + word("cd", 10 + 12 + 2.9, 100)
        assert [c.text for c in merge_words(els)] == ["abcd"]

    def test_min_gap_floor_for_tiny_fonts(self):
        # wos 0.1 makes 0.5 * wos = 0.05; the 0.3pt floor still applies
        els = word("ab", 10, 100, wos=0.1) + word("cd", 22.3, 100, wos=0.1)
        assert [c.text for c in merge_words(els)] == ["ab", "cd"]
        els = word("ab", 10, 100, wos=0.1) + word("cd", 22.2, 100, wos=0.1)
        assert [c.text for c in merge_words(els)] == ["abcd"]

    def test_lines_kept_apart(self):
        els = word("up", 10, 100) + word("dn", 10, 120)
        texts = {c.text for c in merge_words(els)}
        assert texts == {"up", "dn"}

    def test_out_of_order_input(self):
        els = word("cat", 10, 100)
        chunks = merge_words(list(reversed(els)))
        assert [c.text for c in chunks] == ["cat"]


class TestGroupLines:
    def test_reading_order(self):
        chunks = [chunk("right", 100, 50), chunk("left", 10, 50), chunk("below", 10, 80)]
        lines = group_lines(chunks)
        assert [[c.text for c in line] for line in lines] == [
            ["left", "right"], ["below"],
        ]

    def test_half_overlap_same_line(self):
        a = chunk("a", 10, 100)
        b = chunk("b", 30, 105)  # 5 of 10 pts overlap: exactly 50%
        assert len(group_lines([a, b])) == 1

    def test_less_overlap_splits(self):
        a = chunk("a", 10, 100)
        b = chunk("b", 30, 106)
        assert len(group_lines([a, b])) == 2


class TestGroupRows:
    def test_bands_sorted_top_down(self):
        rows = group_rows([chunk("b", 10, 200), chunk("a", 10, 100)])
        assert [r.chunks[0].text for r in rows] == ["a", "b"]
        assert rows[0].band == (100, 110)


def make_grid(cell_texts: list[list[str]], col_xs: list[float], row_tops: list[float],
              char_w: float = 6.0, wos: float = 6.0) -> list[TextElement]:
    els: list[TextElement] = []
    for r, top in enumerate(row_tops):
        for c, x in enumerate(col_xs):
            els.extend(word(cell_texts[r][c], x, top, char_w=char_w, wos=wos))
    return els


class TestInferColumns:
    def test_two_columns(self):
        els = make_grid([["aa", "bb"], ["cc", "dd"], ["ee", "ff"]], [10, 60], [100, 120, 140])
        rows = group_rows(merge_words(els))
        seps = infer_columns(rows)
        assert len(seps) == 1
        # clear interval runs from x=22 to x=60
        assert seps[0] == pytest.approx(41.0)

    def test_narrow_gap_rejected(self):
        # 11pt gap < 2 * median wos = 12
        els = make_grid([["aa", "bb"], ["cc", "dd"], ["ee", "ff"]], [10, 33], [100, 120, 140])
        rows = group_rows(merge_words(els))
        assert infer_columns(rows) == []

    def test_min_gap_override(self):
        els = make_grid([["aa", "bb"], ["cc", "dd"], ["ee", "ff"]], [10, 33], [100, 120, 140])
        rows = group_rows(merge_words(els))
        assert len(infer_columns(rows, min_gap=5.0)) == 1

    def test_blocked_row_within_tolerance(self):
        # a spanning chunk blocks the gap in 1 of 6 rows: still clear
        texts = [["aa", "bb"]] * 5
        els = make_grid(texts, [10, 60], [100, 120, 140, 160, 180])
        els.extend(word("wide-spanner", 10, 200))
        rows = group_rows(merge_words(els))
        assert len(infer_columns(rows)) == 1

    def test_blocked_rows_beyond_tolerance(self):
        # 2 of 6 rows blocked exceeds the 20% allowance
        texts = [["aa", "bb"]] * 4
        els = make_grid(texts, [10, 60], [100, 120, 140, 160])
        els.extend(word("wide-spanner", 10, 180))
        els.extend(word("wide-spanner", 10, 200))
        rows = group_rows(merge_words(els))
        assert infer_columns(rows) == []

    def test_empty_side_drops_separator(self):
        # one row whose lone wide cell clears a sliver past every other
        # row's text: the sliver must not mint a text-less column
        texts = [["aaaaaaaa"], ["bb"], ["bb"], ["bb"], ["bb"], ["bb"]]
        els = make_grid(texts, [10], [100, 120, 140, 160, 180, 200])
        rows = group_rows(merge_words(els))
        assert infer_columns(rows) == []

    def test_no_rows(self):
        assert infer_columns([]) == []


class TestExtractStream:
    def area(self) -> PageRect:
        return PageRect(top=90, left=0, bottom=220, right=300)

    def content(self, els: list[TextElement]) -> PageContent:
        return PageContent(
            page=1, dims=PageDims(width=612, height=792), elements=els, rulings=[]
        )

    def test_basic_grid(self):
        els = make_grid([["aa", "bb"], ["cc", "dd"], ["ee", "ff"]], [10, 60], [100, 120, 140])
        table = extract_stream(self.content(els), self.area())
        assert table.rows == [["aa", "bb"], ["cc", "dd"], ["ee", "ff"]]
        assert table.method == "stream"

    def test_missing_cell_left_empty(self):
        els = make_grid([["aa", "bb"], ["cc", "dd"]], [10, 60], [100, 120])
        els.extend(word("ee", 10, 140))
        table = extract_stream(self.content(els), self.area())
        assert table.rows[2] == ["ee", ""]

    def test_two_words_one_cell(self):
        els = make_grid([["aa", "bb"], ["cc", "dd"], ["ee", "ff"]], [10, 60], [100, 120, 140])
        els.extend(word("xx", 10, 160) + word("yy", 30, 160))
        table = extract_stream(self.content(els), self.area())
        assert table.rows[3][0] == "xx yy"

    def test_area_filters_by_midpoint(self):
        els = make_grid([["aa", "bb"], ["cc", "dd"], ["ee", "ff"]], [10, 60], [100, 120, 140])
        els.extend(word("outside", 10, 400))
        table = extract_stream(self.content(els), self.area())
        assert all("outside" not in " ".join(row) for row in table.rows)

    def test_explicit_columns(self):
        els = make_grid([["aa", "bb"], ["cc", "dd"], ["ee", "ff"]], [10, 60], [100, 120, 140])
        table = extract_stream(self.content(els), self.area(), columns=[30.0])
        assert table.rows[0] == ["aa", "bb"]
        # a deliberately absurd split: everything lands right of x=5
        table = extract_stream(self.content(els), self.area(), columns=[5.0])
        assert table.rows[0] == ["", "aa bb"]

    def test_midpoint_on_separator_goes_left(self):
        els = make_grid([["aa", "bb"], ["cc", "dd"], ["ee", "ff"]], [10, 60], [100, 120, 140])
        # chunk "aa" spans x 10..22, midpoint exactly 16
        table = extract_stream(self.content(els), self.area(), columns=[16.0])
        assert table.rows[0][0] == "aa"

    def test_area_exceeding_page_raises(self):
        els = make_grid([["aa", "bb"]], [10, 60], [100])
        with pytest.raises(ExtractionError):
            extract_stream(self.content(els), PageRect(top=0, left=0, bottom=900, right=612))

    def test_empty_area_gives_empty_table(self):
        table = extract_stream(self.content([]), self.area())
        assert table.rows == [] and table.n_rows == 0


@settings(max_examples=40, deadline=None)
@given(
    dx=st.floats(min_value=0, max_value=300, allow_nan=False),
    dy=st.floats(min_value=0, max_value=400, allow_nan=False),
)
def test_translation_invariance(dx, dy):
    """Shifting every glyph and the area together must not change the grid."""
    base = make_grid(
        [["aa", "bbb"], ["cccc", "dd"], ["e", "ff"]], [10, 70], [100, 120, 140]
    )
    shifted = [
        TextElement(
            bbox=PageRect(
                top=el.bbox.top + dy,
                left=el.bbox.left + dx,
                bottom=el.bbox.bottom + dy,
                right=el.bbox.right + dx,
            ),
            text=el.text,
            font_size=el.font_size,
            width_of_space=el.width_of_space,
        )
        for el in base
    ]
    dims = PageDims(width=1000, height=1000)
    area0 = PageRect(top=90, left=0, bottom=220, right=300)
    area1 = PageRect(
        top=area0.top + dy, left=area0.left + dx,
        bottom=area0.bottom + dy, right=area0.right + dx,
    )
    t0 = extract_stream(PageContent(page=1, dims=dims, elements=base, rulings=[]), area0)
    t1 = extract_stream(PageContent(page=1, dims=dims, elements=shifted, rulings=[]), area1)
    assert t0.rows == t1.rows
