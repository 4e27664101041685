"""Document access: opening, dims, text, metadata, thumbnails, downloads."""

import http.server
import io
import math
import threading

import pytest
from PIL import Image
from reportlab.lib.pagesizes import letter
from reportlab.pdfgen import canvas

import pdfgrid.ingest as ingest
from pdfgrid import open_document
from pdfgrid.errors import DownloadError, OptionsError, PageRangeError
from pdfgrid.geom import PageRect
from pdfgrid.ingest import (
    extract_metadata,
    extract_text,
    get_n_pages,
    get_page_dims,
    make_thumbnails,
    read_page_content,
)


def _rotated_pdf(rotate: int) -> bytes:
    """Minimal one-page letter document carrying an explicit /Rotate."""
    from pdfgrid.pdf.cos import Name
    from pdfgrid.pdf.writer import PdfWriter

    w = PdfWriter()
    pages_ref = w.reserve()
    page_ref = w.add(
        {
            Name("Type"): Name("Page"),
            Name("Parent"): pages_ref,
            Name("MediaBox"): [0, 0, 612, 792],
            Name("Rotate"): rotate,
        }
    )
    w.set(
        pages_ref,
        {Name("Type"): Name("Pages"), Name("Kids"): [page_ref], Name("Count"): 1},
    )
    root = w.add({Name("Type"): Name("Catalog"), Name("Pages"): pages_ref})
    return w.build(root)


@pytest.fixture()
def http_root(fixtures, tmp_path_factory):
    """Serve the fixture directory over a local HTTP socket."""
    import os

    root = os.path.dirname(fixtures["paths"]["fixture"])
    handler = lambda *a, **kw: http.server.SimpleHTTPRequestHandler(*a, directory=root, **kw)
    server = http.server.ThreadingHTTPServer(("127.0.0.1", 0), handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}"
    server.shutdown()


class TestOpen:
    def test_n_pages(self, fixture_handle):
        assert get_n_pages(fixture_handle) == 3

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            open_document(tmp_path / "nope.pdf")

    def test_stem(self, fixture_handle):
        assert fixture_handle.stem == "fixture"

    def test_page_out_of_range(self, fixture_handle):
        with pytest.raises(PageRangeError):
            read_page_content(fixture_handle, 4)
        with pytest.raises(PageRangeError):
            read_page_content(fixture_handle, 0)


class TestDownload:
    def test_url_open_and_cache(self, http_root, monkeypatch, tmp_path):
        monkeypatch.setenv(ingest.DOWNLOAD_DIR_ENV, str(tmp_path / "dl"))
        monkeypatch.setattr(ingest, "_download_dir", None)
        url = f"{http_root}/fixture.pdf"
        h1 = open_document(url)
        assert h1.n_pages == 3
        assert h1.source == url
        assert str(tmp_path / "dl") in h1.local_path
        # second open must reuse the cached file, not re-download
        h2 = open_document(url)
        assert h2.local_path == h1.local_path

    def test_unreachable_host(self, monkeypatch, tmp_path):
        monkeypatch.setenv(ingest.DOWNLOAD_DIR_ENV, str(tmp_path / "dl"))
        monkeypatch.setattr(ingest, "_download_dir", None)
        with pytest.raises(DownloadError):
            open_document("http://127.0.0.1:9/having-no-listener.pdf")

    def test_http_404(self, http_root, monkeypatch, tmp_path):
        monkeypatch.setenv(ingest.DOWNLOAD_DIR_ENV, str(tmp_path / "dl"))
        monkeypatch.setattr(ingest, "_download_dir", None)
        with pytest.raises(DownloadError):
            open_document(f"{http_root}/absent.pdf")


class TestDims:
    def test_letter(self, letter_path):
        dims = get_page_dims(open_document(letter_path))
        assert len(dims) == 2
        assert (dims[0].width, dims[0].height) == (612, 792)

    def test_a4(self, a4_path):
        d = get_page_dims(open_document(a4_path))[0]
        assert d.width == pytest.approx(595.28, abs=0.01)
        assert d.height == pytest.approx(841.89, abs=0.01)

    def test_pages_subset(self, fixture_handle):
        dims = get_page_dims(fixture_handle, pages=[2])
        assert len(dims) == 1
        assert (dims[0].width, dims[0].height) == (612, 792)

    def test_rotated_page_swaps_dims(self, tmp_path):
        path = tmp_path / "rot.pdf"
        path.write_bytes(_rotated_pdf(90))
        d = get_page_dims(open_document(path))[0]
        assert (d.width, d.height) == (792, 612)

    def test_rotate_180_keeps_dims(self, tmp_path):
        path = tmp_path / "rot.pdf"
        path.write_bytes(_rotated_pdf(180))
        d = get_page_dims(open_document(path))[0]
        assert (d.width, d.height) == (612, 792)


class TestExtractText:
    def test_all_pages(self, letter_path):
        texts = extract_text(open_document(letter_path))
        assert texts == ["Hello letter page one", "Second page body text"]

    def test_page_selection(self, letter_path):
        assert extract_text(open_document(letter_path), pages=[2]) == [
            "Second page body text"
        ]

    def test_blank_page(self, blank_path):
        assert extract_text(open_document(blank_path)) == [""]

    def test_area_filters_by_midpoint(self, fixture_handle):
        # page 1 title sits near the top; a band over the table excludes it
        full = extract_text(fixture_handle, pages=[1])[0]
        assert "Motor Trend Car Road Tests" in full
        area = [PageRect(top=60, left=0, bottom=792, right=612)]
        cropped = extract_text(fixture_handle, pages=[1], area=area)[0]
        assert "Motor Trend Car Road Tests" not in cropped
        assert "Mazda RX4" in cropped

    def test_area_count_mismatch(self, fixture_handle):
        areas = [PageRect(0, 0, 10, 10), PageRect(0, 0, 10, 10)]
        with pytest.raises(OptionsError):
            extract_text(fixture_handle, area=areas)

    def test_one_area_per_page(self, letter_path):
        h = open_document(letter_path)
        areas = [
            PageRect(top=0, left=0, bottom=792, right=612),
            PageRect(top=0, left=0, bottom=10, right=10),
        ]
        assert extract_text(h, area=areas) == ["Hello letter page one", ""]


class TestMetadata:
    def test_fixture_fields(self, fixture_handle, manifest):
        meta = extract_metadata(fixture_handle)
        assert meta.n_pages == 3
        assert meta.title == manifest["metadata"]["title"]
        assert meta.author == manifest["metadata"]["author"]
        assert meta.subject == manifest["metadata"]["subject"]
        assert meta.created == manifest["metadata"]["created"]

    def test_as_dict_keys(self, fixture_handle):
        d = extract_metadata(fixture_handle).as_dict()
        assert set(d) == {
            "n_pages", "title", "author", "subject", "keywords",
            "creator", "producer", "created", "modified",
        }

    @pytest.mark.parametrize(
        "raw,expected",
        [
            ("D:20000101000000+00'00'", "2000-01-01T00:00:00+00:00"),
            ("D:20231115093012Z", "2023-11-15T09:30:12+00:00"),
            ("D:20231115093012-05'30'", "2023-11-15T09:30:12-05:30"),
            ("D:2023", "2023-01-01T00:00:00"),
            ("D:202311", "2023-11-01T00:00:00"),
            ("not a date", "not a date"),
        ],
    )
    def test_format_pdf_date(self, raw, expected):
        assert ingest._format_pdf_date(raw) == expected


class TestThumbnails:
    def test_names_and_ceil_dims(self, fixture_handle, tmp_path):
        paths = make_thumbnails(fixture_handle, tmp_path, dpi=100)
        assert [p.rsplit("/", 1)[-1] for p in paths] == [
            "fixture-1.png", "fixture-2.png", "fixture-3.png",
        ]
        expect = (math.ceil(612 * 100 / 72), math.ceil(792 * 100 / 72))
        for p in paths:
            assert Image.open(p).size == expect

    def test_page_subset(self, fixture_handle, tmp_path):
        paths = make_thumbnails(fixture_handle, tmp_path, pages=[3], dpi=36)
        assert len(paths) == 1
        assert paths[0].endswith("fixture-3.png")
        assert Image.open(paths[0]).size == (306, 396)

    def test_bad_dpi(self, fixture_handle, tmp_path):
        with pytest.raises(OptionsError):
            make_thumbnails(fixture_handle, tmp_path, dpi=0)

    def test_content_visible(self, fixture_handle, tmp_path):
        # the rendered page must not be uniformly white
        path = make_thumbnails(fixture_handle, tmp_path, pages=[1], dpi=72)[0]
        img = Image.open(path).convert("L")
        assert img.getextrema()[0] < 255


class TestPageContent:
    def test_cached(self, fixture_handle):
        a = read_page_content(fixture_handle, 1)
        assert read_page_content(fixture_handle, 1) is a

    def test_fixture_page_one(self, fixture_handle):
        content = read_page_content(fixture_handle, 1)
        assert content.page == 1
        assert (content.dims.width, content.dims.height) == (612, 792)
        # elements are per-glyph, emitted in content-stream order
        joined = "".join(el.text for el in content.elements)
        assert "Mazda" in joined
        horiz = [r for r in content.rulings if r.orientation == "horizontal"]
        vert = [r for r in content.rulings if r.orientation == "vertical"]
        assert len(horiz) == 7 and len(vert) == 13

    def test_blank_page_empty(self, blank_path):
        content = read_page_content(open_document(blank_path), 1)
        assert content.elements == [] and content.rulings == []
