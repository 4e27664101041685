"""Automatic table detection and method resolution."""

from pdfgrid.detect import detect_tables, resolve_method
from pdfgrid.geom import HORIZONTAL, VERTICAL, PageDims, PageRect, Ruling
from pdfgrid.ingest import read_page_content
from pdfgrid.model import ExtractionOptions, PageContent, TextElement


def glyph(left: float, top: float, text: str) -> TextElement:
    return TextElement(
        bbox=PageRect(top=top, left=left, bottom=top + 10, right=left + 6),
        text=text,
        font_size=10.0,
        width_of_space=6.0,
    )


def word(text: str, left: float, top: float) -> list[TextElement]:
    return [glyph(left + 6 * i, top, ch) for i, ch in enumerate(text)]


def text_block(col_xs, row_tops) -> list[TextElement]:
    els = []
    for top in row_tops:
        for x in col_xs:
            els.extend(word("ab", x, top))
    return els


def grid_rulings(xs, ys) -> list[Ruling]:
    rules = [Ruling(HORIZONTAL, y, xs[0], xs[-1]) for y in ys]
    rules += [Ruling(VERTICAL, x, ys[0], ys[-1]) for x in xs]
    return rules


def content_with(elements, rulings) -> PageContent:
    return PageContent(
        page=1, dims=PageDims(width=612, height=792), elements=elements, rulings=rulings
    )


class TestDetectTables:
    def test_ruled_grid_detected_as_lattice(self):
        rulings = grid_rulings([0, 50, 100], [10, 30, 50])
        found = detect_tables(content_with([], rulings))
        assert found == [(PageRect(top=10, left=0, bottom=50, right=100), "lattice")]

    def test_unruled_block_detected_as_stream(self):
        els = text_block([72, 144], [100, 115, 130])
        found = detect_tables(content_with(els, []))
        assert len(found) == 1
        assert found[0][1] == "stream"
        assert found[0][0].contains_point(100, 115)

    def test_single_column_prose_ignored(self):
        els = []
        for i in range(4):
            els.extend(word("paragraphtext", 72, 100 + 15 * i))
        assert detect_tables(content_with(els, [])) == []

    def test_single_row_ignored(self):
        els = text_block([72, 144], [100])
        assert detect_tables(content_with(els, [])) == []

    def test_title_far_above_excluded(self):
        els = word("Title", 72, 30)
        els += text_block([72, 144], [100, 115, 130])
        found = detect_tables(content_with(els, []))
        assert len(found) == 1
        assert found[0][0].top > 60

    def test_stacked_blocks_split_by_wide_gap(self):
        els = text_block([72, 144], [100, 115, 130])
        els += text_block([72, 144], [300, 315, 330])
        found = detect_tables(content_with(els, []))
        assert len(found) == 2
        assert found[0][0].bottom < found[1][0].top

    def test_text_inside_grid_not_double_counted(self):
        rulings = grid_rulings([0, 50, 100], [10, 30, 50])
        els = [glyph(10, 15, "a"), glyph(60, 15, "b"), glyph(10, 35, "c"), glyph(60, 35, "d")]
        found = detect_tables(content_with(els, rulings))
        assert len(found) == 1
        assert found[0][1] == "lattice"

    def test_overlapping_proposals_merge_lattice_wins(self):
        rulings = grid_rulings([0, 50, 100], [100, 120, 140])
        # free text interleaved with the grid rows, just outside the rules
        els = text_block([110, 160], [102, 122])
        found = detect_tables(content_with(els, rulings))
        methods = [m for _, m in found]
        assert methods.count("lattice") == len([m for m in methods if m == "lattice"])
        assert all(m in ("lattice", "stream") for m in methods)

    def test_sorted_reading_order(self):
        els = text_block([72, 144], [300, 315, 330])
        rulings = grid_rulings([0, 50, 100], [10, 30, 50])
        found = detect_tables(content_with(els, rulings))
        tops = [rect.top for rect, _ in found]
        assert tops == sorted(tops)


class TestFixtureDetection:
    def test_guess_matches_manifest(self, fixture_handle, manifest):
        for entry in manifest["guess"]:
            content = read_page_content(fixture_handle, entry["page"])
            found = detect_tables(content)
            page_entries = [e for e in manifest["guess"] if e["page"] == entry["page"]]
            assert len(found) == len(page_entries)

    def test_page_two_detects_both_iris_blocks(self, fixture_handle):
        found = detect_tables(read_page_content(fixture_handle, 2))
        assert len(found) == 2
        assert all(method == "lattice" for _, method in found)
        assert found[0][0].bottom <= found[1][0].top

    def test_page_titles_not_inside_detected_areas(self, fixture_handle):
        # the page-1 title band must stay outside the table proposal
        found = detect_tables(read_page_content(fixture_handle, 1))
        assert len(found) == 1
        rect, method = found[0]
        assert method == "lattice"
        assert rect.top > 55


class TestResolveMethod:
    def grid_content(self):
        return content_with([], grid_rulings([0, 50, 100], [10, 30, 50]))

    def area(self):
        return PageRect(top=0, left=0, bottom=792, right=612)

    def test_explicit_override(self):
        content = self.grid_content()
        assert resolve_method(ExtractionOptions(method="stream"), content, self.area()) == "stream"
        bare = content_with([], [])
        assert resolve_method(ExtractionOptions(method="lattice"), bare, self.area()) == "lattice"

    def test_decide_prefers_lattice_at_four_cells(self):
        content = self.grid_content()
        assert resolve_method(ExtractionOptions(), content, self.area()) == "lattice"

    def test_decide_falls_back_to_stream(self):
        # a single closed rectangle is only 1 cell: not enough
        rulings = grid_rulings([0, 100], [10, 50])
        content = content_with([], rulings)
        assert resolve_method(ExtractionOptions(), content, self.area()) == "stream"

    def test_decide_counts_only_inside_area(self):
        content = self.grid_content()
        far_away = PageRect(top=400, left=0, bottom=500, right=612)
        assert resolve_method(ExtractionOptions(), content, far_away) == "stream"
