"""Stream method: table structure from text positions alone.

Columns are inferred from vertical strips of whitespace that stay clear
across most rows; rows come from vertical bbox overlap.  No ruling
information is consulted, which makes this the method of choice for
tables typeset without a drawn grid.
"""

from __future__ import annotations

import statistics
from bisect import bisect_left
from dataclasses import dataclass

from .errors import ExtractionError
from .geom import PageRect
from .model import PageContent, RawTable, TextChunk, TextElement

WORD_GAP_FACTOR = 0.5
MIN_WORD_GAP = 0.3
ROW_OVERLAP = 0.5
CLEARANCE = 0.8


def _band_overlap_groups(items, key=lambda it: it.bbox):
    """Group items into bands by >= 50% vertical overlap with the band so far."""
    if not items:
        return []
    ordered = sorted(items, key=lambda it: (key(it).y_mid, key(it).top))
    groups: list[list] = [[ordered[0]]]
    band_top = key(ordered[0]).top
    band_bottom = key(ordered[0]).bottom
    for item in ordered[1:]:
        r = key(item)
        overlap = min(band_bottom, r.bottom) - max(band_top, r.top)
        smaller = min(band_bottom - band_top, r.height)
        if smaller <= 0:
            joined = overlap >= 0
        else:
            joined = overlap >= ROW_OVERLAP * smaller
        if joined:
            groups[-1].append(item)
            band_top = min(band_top, r.top)
            band_bottom = max(band_bottom, r.bottom)
        else:
            groups.append([item])
            band_top, band_bottom = r.top, r.bottom
    return groups


def group_lines(chunks: list[TextChunk]) -> list[list[TextChunk]]:
    """Reading-order lines: bands top-to-bottom, chunks left-to-right."""
    return [sorted(g, key=lambda c: c.bbox.left) for g in _band_overlap_groups(chunks)]


def merge_words(
    elements: list[TextElement],
    word_gap_factor: float = WORD_GAP_FACTOR,
    min_gap: float = MIN_WORD_GAP,
) -> list[TextChunk]:
    """Join horizontally adjacent glyphs into word-like chunks."""
    chunks: list[TextChunk] = []
    for line in _band_overlap_groups(elements):
        line.sort(key=lambda el: (el.bbox.left, el.bbox.right))
        run: list[TextElement] = []
        for el in line:
            if run:
                gap = el.bbox.left - run[-1].bbox.right
                threshold = max(word_gap_factor * run[-1].width_of_space, min_gap)
                if gap >= threshold:
                    chunks.append(TextChunk.from_elements(run))
                    run = []
            run.append(el)
        if run:
            chunks.append(TextChunk.from_elements(run))
    return chunks


@dataclass
class Row:
    """One visual table row: a y-band and its x-ordered chunks."""

    band: tuple[float, float]
    chunks: list[TextChunk]


def group_rows(chunks: list[TextChunk]) -> list[Row]:
    rows = []
    for group in _band_overlap_groups(chunks):
        group.sort(key=lambda c: c.bbox.left)
        top = min(c.bbox.top for c in group)
        bottom = max(c.bbox.bottom for c in group)
        rows.append(Row(band=(top, bottom), chunks=group))
    rows.sort(key=lambda r: r.band[0])
    return rows


def infer_columns(rows: list[Row], min_gap: float | None = None) -> list[float]:
    """Column separator x-positions from whitespace clear across rows.

    A maximal x-interval qualifies when it is at least `min_gap` wide
    (default: twice the median space width) and no chunk crosses it in
    at least 80% of the rows.  Separators sit at interval midpoints.
    """
    all_chunks = [c for row in rows for c in row.chunks]
    if not all_chunks or not rows:
        return []
    if min_gap is None:
        min_gap = 2.0 * statistics.median(c.width_of_space for c in all_chunks)
    x_lo = min(c.bbox.left for c in all_chunks)
    x_hi = max(c.bbox.right for c in all_chunks)
    edges = sorted({x for c in all_chunks for x in (c.bbox.left, c.bbox.right)})
    n_rows = len(rows)
    max_blocked = (1.0 - CLEARANCE) * n_rows

    def rows_blocking(a: float, b: float) -> int:
        blocked = 0
        for row in rows:
            if any(c.bbox.left < b and c.bbox.right > a for c in row.chunks):
                blocked += 1
        return blocked

    # elementary intervals between adjacent edges, then merge clear runs
    clear_flags = []
    for a, b in zip(edges, edges[1:]):
        if b <= x_lo or a >= x_hi or b - a <= 0:
            clear_flags.append(False)
        else:
            clear_flags.append(rows_blocking(a, b) <= max_blocked)
    separators = []
    i = 0
    while i < len(clear_flags):
        if not clear_flags[i]:
            i += 1
            continue
        j = i
        while j + 1 < len(clear_flags) and clear_flags[j + 1]:
            j += 1
        a, b = edges[i], edges[j + 1]
        if b - a >= min_gap and rows_blocking(a, b) <= max_blocked:
            separators.append((a + b) / 2.0)
        i = j + 1
    return _drop_empty_columns(separators, rows)


def _drop_empty_columns(separators: list[float], rows: list["Row"]) -> list[float]:
    """Discard separators that would delimit a column holding no chunk.

    A lone wide cell (say a header wider than its column's data) can
    carve a qualifying whitespace sliver at a block's edge; a separator
    only counts if both resulting columns receive text.
    """
    mids = [c.bbox.x_mid for row in rows for c in row.chunks]
    while separators:
        counts = [0] * (len(separators) + 1)
        for m in mids:
            counts[bisect_left(separators, m)] += 1
        empty = [i for i, n in enumerate(counts) if n == 0]
        if not empty:
            break
        col = empty[0]
        separators.pop(col - 1 if col > 0 else 0)
    return separators


def extract_stream(
    content: PageContent,
    area: PageRect,
    columns: list[float] | None = None,
) -> RawTable:
    """Build a RawTable from the text inside `area`."""
    page_rect = content.dims.rect()
    if not page_rect.contains_rect(area):
        raise ExtractionError(
            f"area {area.as_tuple()} exceeds page bounds "
            f"({content.dims.width} x {content.dims.height})"
        )
    chunks = merge_words(content.elements)
    chunks = [c for c in chunks if area.contains_point(c.bbox.x_mid, c.bbox.y_mid)]
    rows = group_rows(chunks)
    if not rows:
        return RawTable(page=content.page, bbox=area, rows=[], method="stream")
    separators = list(columns) if columns is not None else infer_columns(rows)
    n_cols = len(separators) + 1
    grid: list[list[str]] = []
    for row in rows:
        cells: list[list[str]] = [[] for _ in range(n_cols)]
        for chunk in row.chunks:
            # midpoint exactly on a separator goes to the left column
            col = bisect_left(separators, chunk.bbox.x_mid)
            cells[col].append(chunk.text)
        grid.append([" ".join(parts) for parts in cells])
    return RawTable(page=content.page, bbox=area, rows=grid, method="stream")
