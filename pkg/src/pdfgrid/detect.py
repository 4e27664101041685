"""Automatic table detection (the guess=True behavior).

Ruled tables are found first from edge-connected cell groups; whatever
text remains is scanned for unruled blocks that look tabular (at least
two rows and two inferred columns).  Wide bands of vertical whitespace
split candidate blocks so stacked tables stay separate.
"""

from __future__ import annotations

import statistics

from .geom import PageRect, bounding_rect
from .lattice import SNAP_TOL, cell_groups, count_cells
from .model import ExtractionOptions, PageContent
from .stream import Row, group_rows, infer_columns, merge_words

BLOCK_GAP_LINES = 3.0
MIN_BLOCK_ROWS = 2
MIN_BLOCK_COLS = 2


def detect_tables(content: PageContent) -> list[tuple[PageRect, str]]:
    """Propose (area, method) pairs, sorted top-to-bottom, left-to-right."""
    proposals: list[tuple[PageRect, str]] = []
    for group in cell_groups(content, None):
        proposals.append((bounding_rect(group), "lattice"))
    lattice_areas = [rect for rect, _ in proposals]
    chunks = merge_words(content.elements)
    free = [
        c
        for c in chunks
        if not any(a.contains_point(c.bbox.x_mid, c.bbox.y_mid) for a in lattice_areas)
    ]
    rows = group_rows(free)
    for block in _split_blocks(rows):
        if len(block) < MIN_BLOCK_ROWS:
            continue
        if len(infer_columns(block)) + 1 < MIN_BLOCK_COLS:
            continue
        rect = bounding_rect([c.bbox for row in block for c in row.chunks])
        proposals.append((rect, "stream"))
    proposals = _merge_overlaps(proposals)
    proposals.sort(key=lambda p: (p[0].top, p[0].left))
    return proposals


def _split_blocks(rows: list[Row]) -> list[list[Row]]:
    """Split a row sequence wherever the vertical gap spans >= 3 line heights."""
    if not rows:
        return []
    heights = [r.band[1] - r.band[0] for r in rows]
    line_height = statistics.median(heights) if heights else 0.0
    threshold = BLOCK_GAP_LINES * max(line_height, 1.0)
    blocks = [[rows[0]]]
    for prev, cur in zip(rows, rows[1:]):
        gap = cur.band[0] - prev.band[1]
        if gap >= threshold:
            blocks.append([cur])
        else:
            blocks[-1].append(cur)
    return blocks


def _merge_overlaps(proposals: list[tuple[PageRect, str]]) -> list[tuple[PageRect, str]]:
    """Union overlapping proposals until a fixpoint; lattice wins on merge."""
    items = list(proposals)
    changed = True
    while changed:
        changed = False
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                a_rect, a_method = items[i]
                b_rect, b_method = items[j]
                if a_rect.intersects(b_rect):
                    method = "lattice" if "lattice" in (a_method, b_method) else "stream"
                    items[i] = (a_rect.union(b_rect), method)
                    del items[j]
                    changed = True
                    break
            if changed:
                break
    return items


def resolve_method(options: ExtractionOptions, content: PageContent, area: PageRect) -> str:
    """Explicit method wins; `decide` needs >= 4 closed cells for lattice."""
    if options.method in ("lattice", "stream"):
        return options.method
    if count_cells(content, area, SNAP_TOL) >= 4:
        return "lattice"
    return "stream"
