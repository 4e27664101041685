"""Command-line interface: subcommands, exit codes, file naming."""

import json

import pytest

from pdfgrid.cli import main


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExtract:
    def test_guess_writes_one_file_per_table(self, fixture_path, tmp_path, capsys):
        code, out, err = run(capsys, "extract", str(fixture_path), "--out", str(tmp_path))
        assert code == 0, err
        names = sorted(p.name for p in tmp_path.iterdir())
        assert names == [
            "fixture-p1-t1.csv",
            "fixture-p2-t1.csv",
            "fixture-p2-t2.csv",
            "fixture-p3-t1.csv",
        ]
        assert sorted(out.strip().splitlines()) == sorted(
            str(tmp_path / n) for n in names
        )

    def test_stdout_single_table(self, fixture_path, manifest, capsys):
        code, out, err = run(
            capsys,
            "extract", str(fixture_path),
            "--pages", "2",
            "--area", ",".join(str(v) for v in manifest["areas"][0]["rect"]),
            "--no-guess", "--method", "stream",
            "--out", "-",
        )
        assert code == 0, err
        lines = out.splitlines()
        assert lines[0] == "Sepal.Length,Sepal.Width,Petal.Length,Petal.Width,Species"
        assert lines[1] == "5.1,3.5,1.4,0.2,setosa"

    def test_stdout_rejects_multiple_tables(self, fixture_path, capsys):
        code, _, err = run(capsys, "extract", str(fixture_path), "--out", "-")
        assert code == 1
        assert "exactly one" in err

    def test_area_requires_no_guess(self, fixture_path, capsys):
        code, _, err = run(
            capsys, "extract", str(fixture_path), "--area", "0,0,100,100"
        )
        assert code == 1
        assert "--no-guess" in err

    def test_no_tables_exit_3(self, blank_path, capsys):
        code, _, err = run(capsys, "extract", str(blank_path))
        assert code == 3

    def test_missing_file_exit_2(self, tmp_path, capsys):
        code, _, err = run(capsys, "extract", str(tmp_path / "nope.pdf"))
        assert code == 2

    def test_not_a_pdf_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.pdf"
        bad.write_bytes(b"this is not a pdf at all")
        code, _, _ = run(capsys, "extract", str(bad))
        assert code == 2

    def test_bad_pages_exit_1(self, fixture_path, capsys):
        code, _, err = run(capsys, "extract", str(fixture_path), "--pages", "x")
        assert code == 1

    def test_bad_area_exit_1(self, fixture_path, capsys):
        code, _, _ = run(
            capsys, "extract", str(fixture_path), "--no-guess", "--area", "1,2,3"
        )
        assert code == 1

    def test_page_out_of_range_exit_2(self, fixture_path, capsys):
        code, _, _ = run(capsys, "extract", str(fixture_path), "--pages", "9")
        assert code == 2

    def test_json_format(self, fixture_path, manifest, tmp_path, capsys):
        rect = ",".join(str(v) for v in manifest["areas"][0]["rect"])
        code, out, _ = run(
            capsys,
            "extract", str(fixture_path),
            "--pages", "2", "--area", rect, "--no-guess", "--method", "stream",
            "--format", "json", "--out", "-",
        )
        assert code == 0
        records = json.loads(out)
        assert records[0]["Species"] == "setosa"
        assert records[0]["Sepal.Length"] == 5.1

    def test_no_col_names(self, fixture_path, manifest, capsys):
        rect = ",".join(str(v) for v in manifest["areas"][0]["rect"])
        code, out, _ = run(
            capsys,
            "extract", str(fixture_path),
            "--pages", "2", "--area", rect, "--no-guess", "--method", "stream",
            "--no-col-names", "--out", "-",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "X1,X2,X3,X4,X5"
        assert lines[1] == "Sepal.Length,Sepal.Width,Petal.Length,Petal.Width,Species"

    def test_deterministic_output(self, fixture_path, tmp_path, capsys):
        run(capsys, "extract", str(fixture_path), "--out", str(tmp_path / "a"))
        run(capsys, "extract", str(fixture_path), "--out", str(tmp_path / "b"))
        for p in (tmp_path / "a").iterdir():
            assert p.read_bytes() == (tmp_path / "b" / p.name).read_bytes()

    def test_encrypted_password(self, fixtures, tmp_path, capsys):
        src = str(fixtures["paths"]["encrypted128"])
        code, _, _ = run(capsys, "text", src, "--password", "user")
        assert code == 0
        code, _, _ = run(capsys, "text", src)
        assert code == 2


class TestText:
    def test_pages_joined_with_form_feed(self, letter_path, capsys):
        code, out, _ = run(capsys, "text", str(letter_path))
        assert code == 0
        assert out == "Hello letter page one\n\f\nSecond page body text\n"

    def test_page_selection(self, letter_path, capsys):
        code, out, _ = run(capsys, "text", str(letter_path), "--pages", "2")
        assert out == "Second page body text\n"


class TestMeta:
    def test_json_fields(self, fixture_path, manifest, capsys):
        code, out, _ = run(capsys, "meta", str(fixture_path))
        assert code == 0
        data = json.loads(out)
        assert data["n_pages"] == 3
        assert data["title"] == manifest["metadata"]["title"]
        assert data["created"] == manifest["metadata"]["created"]


class TestPagesDims:
    def test_pages(self, fixture_path, capsys):
        code, out, _ = run(capsys, "pages", str(fixture_path))
        assert code == 0 and out == "3\n"

    def test_dims_integral_collapse(self, fixture_path, capsys):
        code, out, _ = run(capsys, "dims", str(fixture_path))
        assert out == "612 792\n612 792\n612 792\n"

    def test_dims_fractional(self, a4_path, capsys):
        code, out, _ = run(capsys, "dims", str(a4_path))
        assert out == "595.2756 841.8898\n"


class TestFileCommands:
    def test_thumbnails(self, fixture_path, tmp_path, capsys):
        code, out, _ = run(
            capsys, "thumbnails", str(fixture_path), "--pages", "1", "--out", str(tmp_path)
        )
        assert code == 0
        assert (tmp_path / "fixture-1.png").exists()
        assert out.strip() == str(tmp_path / "fixture-1.png")

    def test_thumbnails_bad_dpi_exit_1(self, fixture_path, tmp_path, capsys):
        code, _, _ = run(
            capsys, "thumbnails", str(fixture_path), "--dpi", "0", "--out", str(tmp_path)
        )
        assert code == 1

    def test_split_and_merge(self, fixture_path, tmp_path, capsys):
        code, out, _ = run(capsys, "split", str(fixture_path), "--out", str(tmp_path))
        assert code == 0
        parts = out.strip().splitlines()
        assert len(parts) == 3
        merged = tmp_path / "merged.pdf"
        code, out, _ = run(capsys, "merge", *parts, "--out", str(merged))
        assert code == 0
        code, out, _ = run(capsys, "pages", str(merged))
        assert out == "3\n"

    def test_merge_requires_out(self, fixture_path, capsys):
        code, _, _ = run(capsys, "merge", str(fixture_path))
        assert code == 1


class TestHelp:
    def test_help_exits_zero(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == 0
        for sub in ("extract", "text", "meta", "pages", "dims",
                    "thumbnails", "split", "merge", "serve"):
            assert sub in out

    def test_no_args_shows_usage(self, capsys):
        code, out, err = run(capsys)
        assert code in (0, 1, 2)
        assert "Usage" in out + err

    def test_unknown_command_exit_1(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 1
