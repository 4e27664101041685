"""End-to-end extraction: pages -> areas -> method -> tables.

Area precedence per page: explicit areas (options.area) beat detection;
detection (guess) beats whole-page.  The method is resolved per area:
an explicit lattice/stream wins, "decide" checks for closed cells.
"""

from __future__ import annotations

from .detect import detect_tables, resolve_method
from .ingest import DocumentHandle, read_page_content
from .lattice import extract_lattice
from .model import ExtractionOptions, RawTable
from .output import TypedTable, build_typed
from .stream import extract_stream


def extract_tables(handle: DocumentHandle, options: ExtractionOptions) -> list[RawTable]:
    """Raw tables for every requested page, in page-then-area order."""
    pages = options.pages or list(range(1, handle.n_pages + 1))
    tables: list[RawTable] = []
    for idx, page in enumerate(pages):
        content = read_page_content(handle, page)
        if options.area is not None:
            areas = [(options.area_for(idx), None)]
        elif options.guess:
            areas = detect_tables(content)
        else:
            areas = [(None, None)]
        for area, _proposed in areas:
            effective = area if area is not None else content.dims.rect()
            method = resolve_method(options, content, effective)
            if method == "lattice":
                found = extract_lattice(content, area)
            else:
                found = [extract_stream(content, effective, options.columns)]
            for t in found:
                if t.rows:
                    tables.append(t)
    return tables


def extract_typed_tables(
    handle: DocumentHandle, options: ExtractionOptions
) -> list[TypedTable]:
    return [build_typed(raw, options.col_names) for raw in extract_tables(handle, options)]
