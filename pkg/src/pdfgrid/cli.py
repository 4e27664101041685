"""Command-line front end for pdfgrid.

Exit codes partition failure classes: 1 for argument problems, 2 for
I/O or document errors, 3 when an extract run finds no tables.  All
diagnostics go to stderr; stdout carries only requested output.

Area flags are `--area TOP,LEFT,BOTTOM,RIGHT` in pt measured from the
top-left page corner, matching the coordinate convention used across
the package.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .errors import OptionsError, PdfGridError
from .geom import PageRect
from .ingest import (
    extract_metadata,
    extract_text,
    get_n_pages,
    get_page_dims,
    make_thumbnails,
    merge_pdfs,
    open_document,
    split_pdf,
)
from .model import ExtractionOptions
from .output import build_typed, write_table
from .pipeline import extract_tables


class NoTablesFound(Exception):
    """Raised by `extract` when the run produced zero tables (exit 3)."""


def _parse_pages(values: tuple[str, ...]) -> list[int] | None:
    """Expand repeatable --pages flags; each accepts '3', '2-4', '1,3,5'."""
    if not values:
        return None
    pages: list[int] = []
    for chunk in values:
        for part in chunk.split(","):
            part = part.strip()
            try:
                if "-" in part:
                    lo_s, _, hi_s = part.partition("-")
                    lo, hi = int(lo_s), int(hi_s)
                    if lo > hi:
                        raise ValueError
                    pages.extend(range(lo, hi + 1))
                else:
                    pages.append(int(part))
            except ValueError:
                raise click.UsageError(
                    f"bad --pages value {part!r}; expected a page, range, or comma list"
                ) from None
    return pages


def _parse_areas(values: tuple[str, ...]) -> list[PageRect] | None:
    if not values:
        return None
    rects = []
    for value in values:
        parts = value.split(",")
        if len(parts) != 4:
            raise click.UsageError(f"bad --area value {value!r}; expected TOP,LEFT,BOTTOM,RIGHT")
        try:
            top, left, bottom, right = (float(p) for p in parts)
            rects.append(PageRect(top=top, left=left, bottom=bottom, right=right))
        except ValueError as exc:
            raise click.UsageError(f"bad --area value {value!r}: {exc}") from None
    return rects


def _parse_columns(value: str | None) -> list[float] | None:
    if value is None:
        return None
    try:
        return [float(p) for p in value.split(",")]
    except ValueError:
        raise click.UsageError(
            f"bad --columns value {value!r}; expected comma-separated x positions"
        ) from None


def _fmt_pt(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else str(x)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli() -> None:
    """Extract tables and page data from PDF documents."""


@cli.command()
@click.argument("src")
@click.option("--pages", "pages_", multiple=True, metavar="LIST", help="Pages, e.g. 2, 2-4, 1,3.")
@click.option(
    "--area",
    "areas",
    multiple=True,
    metavar="T,L,B,R",
    help="Extraction area in pt from the top-left corner; repeatable; needs --no-guess.",
)
@click.option("--columns", metavar="X,...", help="Explicit column x positions in pt (stream only).")
@click.option(
    "--method",
    type=click.Choice(["decide", "lattice", "stream"]),
    default="decide",
    show_default=True,
)
@click.option("--no-guess", is_flag=True, help="Skip table detection; use areas or whole pages.")
@click.option("--no-col-names", is_flag=True, help="Treat the first row as data, not a header.")
@click.option(
    "--format", "fmt", type=click.Choice(["csv", "tsv", "json"]), default="csv", show_default=True
)
@click.option(
    "--out",
    "out_dir",
    default=".",
    metavar="DIR",
    help="Output directory, or '-' to stream a single table to stdout.",
)
@click.option("--password", default=None, help="Password for encrypted documents.")
def extract(src, pages_, areas, columns, method, no_guess, no_col_names, fmt, out_dir, password):
    """Extract tables, one output file per table: <stem>-p<page>-t<n>.<ext>."""
    if areas and not no_guess:
        raise click.UsageError("--area requires --no-guess")
    options = ExtractionOptions(
        pages=_parse_pages(pages_),
        area=_parse_areas(areas),
        columns=_parse_columns(columns),
        guess=not no_guess,
        method=method,
        output_format=fmt,
        password=password,
        col_names=not no_col_names,
    )
    handle = open_document(src, password=password)
    tables = extract_tables(handle, options)
    if not tables:
        raise NoTablesFound("no tables found")
    typed = [build_typed(t, col_names=options.col_names) for t in tables]
    payloads = [write_table(t, fmt) for t in typed]
    if out_dir == "-":
        if len(payloads) != 1:
            raise click.UsageError(
                f"extracted {len(payloads)} tables; '--out -' streams exactly one"
            )
        sys.stdout.buffer.write(payloads[0])
        sys.stdout.buffer.flush()
        return
    target_dir = Path(out_dir)
    target_dir.mkdir(parents=True, exist_ok=True)
    per_page: dict[int, int] = {}
    for table, payload in zip(typed, payloads):
        index = per_page.get(table.page, 0) + 1
        per_page[table.page] = index
        target = target_dir / f"{handle.stem}-p{table.page}-t{index}.{fmt}"
        target.write_bytes(payload)
        click.echo(str(target))


@cli.command()
@click.argument("src")
@click.option("--pages", "pages_", multiple=True, metavar="LIST")
@click.option("--area", "areas", multiple=True, metavar="T,L,B,R")
@click.option("--password", default=None)
def text(src, pages_, areas, password):
    """Print reading-order text; pages separated by form feed."""
    handle = open_document(src, password=password)
    chunks = extract_text(handle, _parse_pages(pages_), _parse_areas(areas))
    sys.stdout.write("\n\f\n".join(chunks) + "\n")


@cli.command()
@click.argument("src")
@click.option("--password", default=None)
def meta(src, password):
    """Print document metadata as JSON."""
    handle = open_document(src, password=password)
    info = extract_metadata(handle)
    click.echo(json.dumps(info.as_dict(), indent=2, ensure_ascii=False))


@cli.command()
@click.argument("src")
@click.option("--password", default=None)
def pages(src, password):
    """Print the page count."""
    handle = open_document(src, password=password)
    click.echo(str(get_n_pages(handle)))


@cli.command()
@click.argument("src")
@click.option("--pages", "pages_", multiple=True, metavar="LIST")
@click.option("--password", default=None)
def dims(src, pages_, password):
    """Print page dimensions in pt, one 'WIDTH HEIGHT' line per page."""
    handle = open_document(src, password=password)
    for d in get_page_dims(handle, _parse_pages(pages_)):
        click.echo(f"{_fmt_pt(d.width)} {_fmt_pt(d.height)}")


@cli.command()
@click.argument("src")
@click.option("--pages", "pages_", multiple=True, metavar="LIST")
@click.option("--dpi", default=72.0, show_default=True)
@click.option("--out", "out_dir", default=".", metavar="DIR")
@click.option("--password", default=None)
def thumbnails(src, pages_, dpi, out_dir, password):
    """Render pages to PNG files named <stem>-<page>.png."""
    handle = open_document(src, password=password)
    for path in make_thumbnails(handle, out_dir, _parse_pages(pages_), dpi):
        click.echo(path)


@cli.command()
@click.argument("src")
@click.option("--out", "out_dir", default=".", metavar="DIR")
@click.option("--password", default=None)
def split(src, out_dir, password):
    """Write each page as its own PDF named <stem>-<page>.pdf."""
    handle = open_document(src, password=password)
    for path in split_pdf(handle, out_dir):
        click.echo(path)


@cli.command()
@click.argument("srcs", nargs=-1, required=True)
@click.option("--out", "out_path", required=True, metavar="FILE")
def merge(srcs, out_path):
    """Concatenate the pages of SRCS, in order, into one PDF."""
    merge_pdfs(list(srcs), out_path)
    click.echo(out_path)


@cli.command()
@click.argument("src")
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--password", default=None)
def serve(src, port, host, password):
    """Serve the interactive area picker for one document."""
    from .service import run_service

    handle = open_document(src, password=password)
    run_service(handle, host=host, port=port)


def main(argv: list[str] | None = None) -> int:
    """Run the CLI; returns the process exit code instead of raising."""
    try:
        cli.main(args=argv, prog_name="pdfgrid", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        click.echo(f"pdfgrid: {exc.format_message()}", err=True)
        return 1
    except NoTablesFound as exc:
        click.echo(f"pdfgrid: {exc}", err=True)
        return 3
    except OptionsError as exc:
        click.echo(f"pdfgrid: {exc}", err=True)
        return 1
    except (OSError, PdfGridError) as exc:
        click.echo(f"pdfgrid: {exc}", err=True)
        return 2
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
