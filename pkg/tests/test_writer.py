"""PDF writer: serialization forms, determinism, split/merge structure."""

import pytest

from pdfgrid import open_document
from pdfgrid.ingest import extract_text, get_page_dims, merge_pdfs, split_pdf
from pdfgrid.pdf.cos import Name, Ref, Stream
from pdfgrid.pdf.writer import PdfWriter, build_document, serialize


class TestSerialize:
    def test_numbers(self):
        assert serialize(3) == b"3"
        assert serialize(3.0) == b"3"
        assert serialize(3.25) == b"3.25"
        assert serialize(-0.5) == b"-0.5"

    def test_name_escaping(self):
        assert serialize(Name("Simple")) == b"/Simple"
        assert serialize(Name("With Space")) == b"/With#20Space"

    def test_string_escaping(self):
        assert serialize(b"a(b)c\\") == b"(a\\(b\\)c\\\\)"

    def test_bool_null(self):
        assert serialize(True) == b"true"
        assert serialize(False) == b"false"
        assert serialize(None) == b"null"

    def test_ref(self):
        assert serialize(Ref(7, 0)) == b"7 0 R"

    def test_nested(self):
        v = {Name("A"): [1, Name("B"), b"s"]}
        assert serialize(v) == b"<<\n/A [1 /B (s)]\n>>"

    def test_stream_length_overridden(self):
        s = Stream({Name("Length"): 9999}, b"body")
        out = serialize(s)
        assert b"/Length 4" in out
        assert b"stream\nbody\nendstream" in out


class TestPdfWriter:
    def test_round_trips_through_reader(self, tmp_path):
        w = PdfWriter()
        pages_ref = w.reserve()
        page_ref = w.add(
            {
                Name("Type"): Name("Page"),
                Name("Parent"): pages_ref,
                Name("MediaBox"): [0, 0, 100, 200],
            }
        )
        w.set(
            pages_ref,
            {Name("Type"): Name("Pages"), Name("Kids"): [page_ref], Name("Count"): 1},
        )
        root = w.add({Name("Type"): Name("Catalog"), Name("Pages"): pages_ref})
        data = w.build(root)
        path = tmp_path / "w.pdf"
        path.write_bytes(data)
        h = open_document(path)
        assert h.n_pages == 1
        d = get_page_dims(h)[0]
        assert (d.width, d.height) == (100, 200)

    def test_build_is_deterministic(self):
        def make():
            w = PdfWriter()
            root = w.add({Name("Type"): Name("Catalog")})
            return w.build(root)

        assert make() == make()


class TestSplitMerge:
    def test_split_names_and_content(self, fixture_handle, tmp_path):
        paths = split_pdf(fixture_handle, tmp_path)
        assert [p.rsplit("/", 1)[-1] for p in paths] == [
            "fixture-1.pdf", "fixture-2.pdf", "fixture-3.pdf",
        ]
        for i, p in enumerate(paths, start=1):
            h = open_document(p)
            assert h.n_pages == 1
            assert extract_text(h) == extract_text(fixture_handle, pages=[i])

    def test_split_deterministic(self, fixture_handle, tmp_path):
        a = split_pdf(fixture_handle, tmp_path / "a")
        b = split_pdf(fixture_handle, tmp_path / "b")
        for pa, pb in zip(a, b):
            assert open(pa, "rb").read() == open(pb, "rb").read()

    def test_merge_dims_preserved(self, letter_path, a4_path, tmp_path):
        merged = merge_pdfs([letter_path, a4_path], tmp_path / "m.pdf")
        dims = get_page_dims(merged)
        assert (dims[0].width, dims[0].height) == (612, 792)
        assert dims[2].width == pytest.approx(595.28, abs=0.01)
        assert dims[2].height == pytest.approx(841.89, abs=0.01)

    def test_merge_preserves_text_order(self, letter_path, a4_path, tmp_path):
        merged = merge_pdfs([a4_path, letter_path], tmp_path / "m.pdf")
        texts = extract_text(merged)
        assert texts[0] == "A4 sample content"
        assert texts[1] == "Hello letter page one"
        assert texts[2] == "Second page body text"

    def test_merge_single_source_round_trip(self, fixture_handle, fixture_path, tmp_path):
        merged = merge_pdfs([fixture_path], tmp_path / "m.pdf")
        assert merged.n_pages == 3
        assert extract_text(merged) == extract_text(fixture_handle)

    def test_split_then_merge_round_trip(self, fixture_handle, tmp_path):
        parts = split_pdf(fixture_handle, tmp_path)
        merged = merge_pdfs(parts, tmp_path / "back.pdf")
        assert merged.n_pages == fixture_handle.n_pages
        assert extract_text(merged) == extract_text(fixture_handle)

    def test_tables_survive_round_trip(self, fixture_handle, tmp_path):
        from pdfgrid import ExtractionOptions, extract_tables

        parts = split_pdf(fixture_handle, tmp_path)
        merged = merge_pdfs(parts, tmp_path / "back.pdf")
        before = [t.rows for t in extract_tables(fixture_handle, ExtractionOptions())]
        after = [t.rows for t in extract_tables(merged, ExtractionOptions())]
        assert before == after
