"""Lattice method: table structure from ruling intersections.

Rulings are first snapped (collinear fragments merged, jitter
quantized), then every intersection is considered as a potential cell
corner; minimal rectangles closed on all four sides become cells.
Edge-connected cells form one table whose grid is read off the distinct
row and column edge positions.
"""

from __future__ import annotations

from .geom import HORIZONTAL, VERTICAL, PageRect, Ruling
from .model import PageContent, RawTable, TextChunk
from .stream import _band_overlap_groups, merge_words

SNAP_TOL = 2.0
MIN_CELLS_FOR_LATTICE = 4


def snap_rulings(rulings: list[Ruling], tol: float = SNAP_TOL) -> list[Ruling]:
    """Merge collinear fragments and quantize jittered positions.

    Idempotent: gap-based position clustering guarantees two cluster
    means are always more than `tol` apart, so a second pass is a no-op.
    """
    out: list[Ruling] = []
    for orientation in (HORIZONTAL, VERTICAL):
        group = sorted(
            (r for r in rulings if r.orientation == orientation),
            key=lambda r: (r.position, r.start),
        )
        i = 0
        while i < len(group):
            # cluster by position: break when adjacent gap exceeds tol
            j = i
            while j + 1 < len(group) and group[j + 1].position - group[j].position <= tol:
                j += 1
            cluster = group[i : j + 1]
            i = j + 1
            mean_pos = sum(r.position for r in cluster) / len(cluster)
            spans = sorted((r.start, r.end) for r in cluster)
            merged = [list(spans[0])]
            for s, e in spans[1:]:
                if s <= merged[-1][1] + tol:
                    merged[-1][1] = max(merged[-1][1], e)
                else:
                    merged.append([s, e])
            for s, e in merged:
                out.append(Ruling(orientation, mean_pos, s, e))
    out.sort(key=lambda r: (r.orientation, r.position, r.start))
    return out


def find_cells(
    horizontal: list[Ruling],
    vertical: list[Ruling],
    tol: float = SNAP_TOL,
) -> list[PageRect]:
    """Minimal rectangles closed on all four sides by rulings.

    Every intersection (crossing or T-touch within tol) is a candidate
    top-left corner; the nearest intersection pair downward and rightward
    that closes a rectangle along shared rulings wins.
    """
    points: dict[tuple[float, float], tuple[Ruling, Ruling]] = {}
    for h in horizontal:
        for v in vertical:
            if (
                h.start - tol <= v.position <= h.end + tol
                and v.start - tol <= h.position <= v.end + tol
            ):
                points[(h.position, v.position)] = (h, v)
    keys = sorted(points)
    cells: list[PageRect] = []
    by_x: dict[float, list[tuple[float, float]]] = {}
    by_y: dict[float, list[tuple[float, float]]] = {}
    for y, x in keys:
        by_x.setdefault(x, []).append((y, x))
        by_y.setdefault(y, []).append((y, x))
    for y, x in keys:
        h_tl, v_tl = points[(y, x)]
        below = [p for p in by_x[x] if p[0] > y and points[p][1] is v_tl]
        right = [p for p in by_y[y] if p[1] > x and points[p][0] is h_tl]
        found = False
        for yb, _xb in below:
            h_bl = points[(yb, x)][0]
            for _yr, xr in right:
                v_tr = points[(y, xr)][1]
                corner = points.get((yb, xr))
                if corner is not None and corner[0] is h_bl and corner[1] is v_tr:
                    cells.append(PageRect(top=y, left=x, bottom=yb, right=xr))
                    found = True
                    break
            if found:
                break
    return cells


def _connected_groups(cells: list[PageRect], tol: float) -> list[list[PageRect]]:
    """Union cells that share (part of) an edge."""
    n = len(cells)
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for i in range(n):
        a = cells[i]
        for j in range(i + 1, n):
            b = cells[j]
            x_overlap = min(a.right, b.right) - max(a.left, b.left)
            y_overlap = min(a.bottom, b.bottom) - max(a.top, b.top)
            shares_vertical = (
                min(abs(a.right - b.left), abs(b.right - a.left)) <= tol and y_overlap > tol / 2
            )
            shares_horizontal = (
                min(abs(a.bottom - b.top), abs(b.bottom - a.top)) <= tol and x_overlap > tol / 2
            )
            if shares_vertical or shares_horizontal:
                union(i, j)
    groups: dict[int, list[PageRect]] = {}
    for i, cell in enumerate(cells):
        groups.setdefault(find(i), []).append(cell)
    return list(groups.values())


def _quantize(values: list[float], tol: float) -> list[float]:
    """Collapse near-equal edge positions (same clustering rule as snap)."""
    values = sorted(values)
    out = []
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[j + 1] - values[j] <= tol:
            j += 1
        out.append(sum(values[i : j + 1]) / (j - i + 1))
        i = j + 1
    return out


def cell_text(chunks: list[TextChunk]) -> str:
    """Row bands joined with CR; within a band, chunks joined by spaces."""
    bands = _band_overlap_groups(chunks)
    parts = []
    for band in bands:
        band.sort(key=lambda c: c.bbox.left)
        parts.append(" ".join(c.text for c in band))
    return "\r".join(parts)


def cell_groups(content: PageContent, area: PageRect | None, tol: float = SNAP_TOL):
    """Snapped, clipped rulings -> cells -> edge-connected groups."""
    rulings = content.rulings
    if area is not None:
        rulings = [r for r in (r.clipped(area) for r in rulings) if r is not None]
    snapped = snap_rulings(rulings, tol)
    horizontal = [r for r in snapped if r.orientation == HORIZONTAL]
    vertical = [r for r in snapped if r.orientation == VERTICAL]
    cells = find_cells(horizontal, vertical, tol)
    return _connected_groups(cells, tol)


def count_cells(content: PageContent, area: PageRect | None, tol: float = SNAP_TOL) -> int:
    return sum(len(g) for g in cell_groups(content, area, tol))


def extract_lattice(
    content: PageContent,
    area: PageRect | None = None,
    tol: float = SNAP_TOL,
) -> list[RawTable]:
    """All ruled tables in `area` (whole page when None)."""
    groups = cell_groups(content, area, tol)
    if not groups:
        return []
    chunks = merge_words(content.elements)
    tables = []
    for group in groups:
        row_edges = _quantize([e for c in group for e in (c.top, c.bottom)], tol)
        col_edges = _quantize([e for c in group for e in (c.left, c.right)], tol)
        if len(row_edges) < 2 or len(col_edges) < 2:
            continue
        bbox = PageRect(
            top=row_edges[0], left=col_edges[0], bottom=row_edges[-1], right=col_edges[-1]
        )
        cell_chunks: dict[int, list[TextChunk]] = {i: [] for i in range(len(group))}
        for chunk in chunks:
            mx, my = chunk.bbox.x_mid, chunk.bbox.y_mid
            for i, cell in enumerate(group):
                if cell.contains_point(mx, my):
                    cell_chunks[i].append(chunk)
                    break
        texts = {i: cell_text(cell_chunks[i]) for i in range(len(group))}
        n_rows = len(row_edges) - 1
        n_cols = len(col_edges) - 1
        grid = [["" for _ in range(n_cols)] for _ in range(n_rows)]
        for i, cell in enumerate(group):
            # text lands in the slot whose top-left matches the cell's;
            # the rest of a spanning cell stays empty
            row_idx = _nearest_index(row_edges, cell.top)
            col_idx = _nearest_index(col_edges, cell.left)
            if row_idx < n_rows and col_idx < n_cols:
                grid[row_idx][col_idx] = texts[i]
        tables.append(RawTable(page=content.page, bbox=bbox, rows=grid, method="lattice"))
    tables.sort(key=lambda t: (t.bbox.top, t.bbox.left))
    return tables


def _nearest_index(edges: list[float], value: float) -> int:
    best, best_dist = 0, abs(edges[0] - value)
    for i, e in enumerate(edges[1:], start=1):
        d = abs(e - value)
        if d < best_dist:
            best, best_dist = i, d
    return best
