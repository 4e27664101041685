/**
 * Pixel/point coordinate mapping for the area picker.
 *
 * Page images are rendered at a fixed dpi; the browser reports mouse
 * positions in image pixels.  Everything the service consumes is pt in
 * top-left page coordinates, so the mapping here is the single source
 * of truth: pt = px * 72 / dpi, clamped to the page box.
 */

export const RENDER_DPI = 144;

/** Minimum drag extent in px; anything smaller is a click, not a rectangle. */
export const MIN_DRAG_PX = 3;

export interface PageDims {
  width: number;
  height: number;
}

export interface PtRect {
  top: number;
  left: number;
  bottom: number;
  right: number;
}

export interface Point {
  x: number;
  y: number;
}

export function pxToPt(px: number, dpi: number): number {
  return (px * 72) / dpi;
}

export function ptToPx(pt: number, dpi: number): number {
  return (pt * dpi) / 72;
}

function clamp(v: number, lo: number, hi: number): number {
  return Math.max(lo, Math.min(v, hi));
}

/** Round pt values to 1/100 pt, the precision shown and exported. */
export function roundPt(v: number): number {
  return Math.round(v * 100) / 100;
}

/** Map an image-pixel point to page pt, clamped to the page bounds. */
export function mapPoint(xPx: number, yPx: number, dpi: number, dims: PageDims): Point {
  return {
    x: clamp(pxToPt(xPx, dpi), 0, dims.width),
    y: clamp(pxToPt(yPx, dpi), 0, dims.height),
  };
}

/**
 * Turn a drag gesture (any corner order) into a clamped pt rectangle.
 * Returns null for a degenerate drag (a click without movement).
 */
export function rectFromDrag(
  x0: number,
  y0: number,
  x1: number,
  y1: number,
  dpi: number,
  dims: PageDims
): PtRect | null {
  if (Math.abs(x1 - x0) < MIN_DRAG_PX || Math.abs(y1 - y0) < MIN_DRAG_PX) {
    return null;
  }
  const a = mapPoint(Math.min(x0, x1), Math.min(y0, y1), dpi, dims);
  const b = mapPoint(Math.max(x0, x1), Math.max(y0, y1), dpi, dims);
  return {
    top: roundPt(a.y),
    left: roundPt(a.x),
    bottom: roundPt(b.y),
    right: roundPt(b.x),
  };
}

/** Clamp and re-normalize a pt rectangle after an edit. */
export function normalizeRect(rect: PtRect, dims: PageDims): PtRect {
  const top = clamp(Math.min(rect.top, rect.bottom), 0, dims.height);
  const bottom = clamp(Math.max(rect.top, rect.bottom), 0, dims.height);
  const left = clamp(Math.min(rect.left, rect.right), 0, dims.width);
  const right = clamp(Math.max(rect.left, rect.right), 0, dims.width);
  return {
    top: roundPt(top),
    left: roundPt(left),
    bottom: roundPt(bottom),
    right: roundPt(right),
  };
}

/** Pixel-space rectangle (left, top, width, height) for drawing a pt rect. */
export function rectToPx(
  rect: PtRect,
  dpi: number
): { left: number; top: number; width: number; height: number } {
  const left = ptToPx(rect.left, dpi);
  const top = ptToPx(rect.top, dpi);
  return {
    left,
    top,
    width: ptToPx(rect.right, dpi) - left,
    height: ptToPx(rect.bottom, dpi) - top,
  };
}
