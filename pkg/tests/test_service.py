"""Area-picker HTTP service: endpoints, validation, CLI parity."""

import io
import json

import pytest
from fastapi.testclient import TestClient
from PIL import Image

from pdfgrid import open_document
from pdfgrid.service import create_app


@pytest.fixture(scope="module")
def client(fixtures):
    handle = open_document(fixtures["paths"]["fixture"])
    return TestClient(create_app(handle))


class TestDocInfo:
    def test_shape(self, client):
        data = client.get("/api/doc").json()
        assert data["n_pages"] == 3
        assert data["dims"] == [[612, 792]] * 3


class TestPageImage:
    def test_png_at_default_dpi(self, client):
        resp = client.get("/api/pages/1/image")
        assert resp.status_code == 200
        assert resp.headers["content-type"] == "image/png"
        img = Image.open(io.BytesIO(resp.content))
        # 144 dpi doubles the 72-pt-per-inch page size
        assert img.size == (1224, 1584)

    def test_dpi_parameter(self, client):
        resp = client.get("/api/pages/1/image", params={"dpi": 36})
        assert Image.open(io.BytesIO(resp.content)).size == (306, 396)

    def test_caching_returns_identical_bytes(self, client):
        a = client.get("/api/pages/2/image", params={"dpi": 72})
        b = client.get("/api/pages/2/image", params={"dpi": 72})
        assert a.content == b.content

    def test_page_out_of_range_404(self, client):
        assert client.get("/api/pages/4/image").status_code == 404
        assert client.get("/api/pages/0/image").status_code == 404

    def test_bad_dpi_400(self, client):
        assert client.get("/api/pages/1/image", params={"dpi": 0}).status_code == 400
        assert client.get("/api/pages/1/image", params={"dpi": 601}).status_code == 400


class TestExtract:
    def post(self, client, **body):
        return client.post("/api/extract", json=body)

    def test_stream_area(self, client, manifest):
        entry = manifest["areas"][0]
        resp = self.post(
            client, page=entry["page"], area=list(entry["rect"]), method="stream"
        )
        assert resp.status_code == 200, resp.text
        data = resp.json()
        assert data["page"] == entry["page"]
        assert data["method"] == "stream"
        assert data["names"] == ["Sepal.Length", "Sepal.Width", "Petal.Length", "Petal.Width", "Species"]
        assert data["records"][0] == {
            "Sepal.Length": 5.1, "Sepal.Width": 3.5,
            "Petal.Length": 1.4, "Petal.Width": 0.2, "Species": "setosa",
        }
        assert data["n_tables"] == 1

    def test_decide_method_defaults(self, client, manifest):
        entry = manifest["areas"][0]
        resp = self.post(client, page=entry["page"], area=list(entry["rect"]))
        assert resp.status_code == 200
        assert resp.json()["method"] in ("lattice", "stream")

    def test_records_match_cli_serialization(self, client, manifest, fixtures, capsys):
        """The preview payload must equal what the CLI writes for the same call."""
        from pdfgrid.cli import main

        entry = manifest["areas"][0]
        resp = self.post(
            client, page=entry["page"], area=list(entry["rect"]), method="stream"
        )
        code = main([
            "extract", str(fixtures["paths"]["fixture"]),
            "--pages", str(entry["page"]),
            "--area", ",".join(str(v) for v in entry["rect"]),
            "--no-guess", "--method", "stream", "--format", "json", "--out", "-",
        ])
        out = capsys.readouterr().out
        assert code == 0
        canonical = lambda records: json.dumps(records, sort_keys=True)
        assert canonical(resp.json()["records"]) == canonical(json.loads(out))

    def test_col_names_false(self, client, manifest):
        entry = manifest["areas"][0]
        resp = self.post(
            client,
            page=entry["page"], area=list(entry["rect"]),
            method="stream", col_names=False,
        )
        data = resp.json()
        assert data["names"] == ["X1", "X2", "X3", "X4", "X5"]
        assert data["records"][0]["X1"] == "Sepal.Length"

    def test_page_404(self, client):
        assert self.post(client, page=9, area=[0, 0, 10, 10]).status_code == 404

    def test_bad_area_length_400(self, client):
        assert self.post(client, page=1, area=[0, 0, 10]).status_code == 400

    def test_inverted_area_400(self, client):
        assert self.post(client, page=1, area=[100, 0, 10, 10]).status_code == 400

    def test_area_exceeding_page_400(self, client):
        assert self.post(client, page=1, area=[0, 0, 800, 700]).status_code == 400

    def test_unknown_method_400(self, client):
        resp = self.post(client, page=1, area=[0, 0, 100, 100], method="magic")
        assert resp.status_code == 400

    def test_empty_area_422(self, client):
        resp = self.post(client, page=1, area=[0, 0, 20, 20], method="stream")
        assert resp.status_code == 422

    def test_malformed_body_422(self, client):
        resp = client.post("/api/extract", json={"page": "not-a-number"})
        assert resp.status_code == 422


class TestStatic:
    def test_index_served(self, client):
        resp = client.get("/")
        assert resp.status_code == 200
        assert "text/html" in resp.headers["content-type"]

    def test_asset_media_types(self, client):
        js = client.get("/static/picker.js")
        assert js.status_code == 200
        assert "javascript" in js.headers["content-type"]
        css = client.get("/static/picker.css")
        assert css.status_code == 200
        assert "text/css" in css.headers["content-type"]

    def test_traversal_blocked(self, client):
        resp = client.get("/static/%2e%2e%2fpicker.py")
        assert resp.status_code in (404, 422)

    def test_absent_asset_404(self, client):
        assert client.get("/static/nope.js").status_code == 404


class TestReadOnly:
    def test_source_file_untouched(self, fixtures, tmp_path):
        import shutil

        copy = tmp_path / "copy.pdf"
        shutil.copyfile(fixtures["paths"]["fixture"], copy)
        before = copy.read_bytes()
        client = TestClient(create_app(open_document(copy)))
        client.get("/api/pages/1/image")
        client.post(
            "/api/extract", json={"page": 1, "area": [60, 30, 200, 580], "method": "decide"}
        )
        assert copy.read_bytes() == before
