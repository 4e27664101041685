/**
 * Selection model: the rectangles a user has drawn, plus the exports
 * (CLI flags, JSON) derived from them.  Pure data manipulation; the DOM
 * layer in picker.ts owns rendering and events.
 */
import { mapPoint, normalizeRect, roundPt } from "./coords.js";
/** Compact pt formatting: trailing zeros dropped (58 not 58.00). */
export function fmtPt(v) {
    return String(roundPt(v));
}
/** The area portion of a CLI call: "T,L,B,R" with 1/100 pt precision. */
export function areaFlagValue(rect) {
    return [rect.top, rect.left, rect.bottom, rect.right].map(fmtPt).join(",");
}
/** Ready-to-paste CLI flags reproducing this selection. */
export function cliFlags(sel) {
    return `--pages ${sel.page} --area ${areaFlagValue(sel.rect)}`;
}
/** JSON export of every selection, in creation order. */
export function areasJson(selections) {
    return JSON.stringify(selections.map((s) => ({
        page: s.page,
        area: [
            roundPt(s.rect.top),
            roundPt(s.rect.left),
            roundPt(s.rect.bottom),
            roundPt(s.rect.right),
        ],
    })));
}
/** Human-readable label for the selection list. */
export function selectionLabel(sel) {
    const r = sel.rect;
    return `p${sel.page} (${fmtPt(r.top)}, ${fmtPt(r.left)}, ${fmtPt(r.bottom)}, ${fmtPt(r.right)})`;
}
/** Drag a corner handle to a new pixel position; keeps the rect valid. */
export function moveCorner(rect, corner, xPx, yPx, dpi, dims) {
    const p = mapPoint(xPx, yPx, dpi, dims);
    const next = { ...rect };
    if (corner === "nw" || corner === "ne") {
        next.top = p.y;
    }
    else {
        next.bottom = p.y;
    }
    if (corner === "nw" || corner === "sw") {
        next.left = p.x;
    }
    else {
        next.right = p.x;
    }
    return normalizeRect(next, dims);
}
