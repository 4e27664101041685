"""Page-space geometry shared by every extraction stage.

All coordinates are PDF points (1/72 inch) with the origin at the page's
top-left corner and y increasing downward.  Rectangles are closed regions
given as (top, left, bottom, right), the same order used for `--area`
arguments on the command line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


@dataclass(frozen=True)
class PageRect:
    """Axis-aligned rectangle in top-left-origin page coordinates."""

    top: float
    left: float
    bottom: float
    right: float

    def __post_init__(self):
        for name in ("top", "left", "bottom", "right"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0:
                raise ValueError(f"rect {name} must be finite and >= 0, got {v!r}")
        if self.top > self.bottom:
            raise ValueError(f"rect top {self.top} > bottom {self.bottom}")
        if self.left > self.right:
            raise ValueError(f"rect left {self.left} > right {self.right}")

    @property
    def width(self) -> float:
        return self.right - self.left

    @property
    def height(self) -> float:
        return self.bottom - self.top

    @property
    def x_mid(self) -> float:
        return (self.left + self.right) / 2.0

    @property
    def y_mid(self) -> float:
        return (self.top + self.bottom) / 2.0

    def intersects(self, other: "PageRect") -> bool:
        """True iff the two closed rectangles share at least one point."""
        return (
            self.left <= other.right
            and other.left <= self.right
            and self.top <= other.bottom
            and other.top <= self.bottom
        )

    def union(self, other: "PageRect") -> "PageRect":
        """Smallest rectangle containing both operands."""
        return PageRect(
            top=min(self.top, other.top),
            left=min(self.left, other.left),
            bottom=max(self.bottom, other.bottom),
            right=max(self.right, other.right),
        )

    def contains_point(self, x: float, y: float) -> bool:
        return self.left <= x <= self.right and self.top <= y <= self.bottom

    def contains_rect(self, other: "PageRect") -> bool:
        return (
            self.left <= other.left
            and other.right <= self.right
            and self.top <= other.top
            and other.bottom <= self.bottom
        )

    def vertical_overlap(self, other: "PageRect") -> float:
        """Length of the shared y-interval (0 when disjoint)."""
        return max(0.0, min(self.bottom, other.bottom) - max(self.top, other.top))

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.top, self.left, self.bottom, self.right)


@dataclass(frozen=True)
class PageDims:
    """Page width and height in points, from the MediaBox."""

    width: float
    height: float

    def __post_init__(self):
        if not (self.width > 0 and self.height > 0):
            raise ValueError(f"page dims must be positive, got {self.width}x{self.height}")

    def rect(self) -> PageRect:
        return PageRect(0.0, 0.0, self.height, self.width)


@dataclass(frozen=True)
class Ruling:
    """An axis-aligned line segment, typically a drawn table border.

    `position` is the constant coordinate (y for horizontal rulings, x for
    vertical ones); `start`/`end` span the varying axis with start < end.
    Oblique segments are never stored: ingest snaps near-axis paths and
    drops the rest.
    """

    orientation: str
    position: float
    start: float
    end: float

    def __post_init__(self):
        if self.orientation not in (HORIZONTAL, VERTICAL):
            raise ValueError(f"bad orientation {self.orientation!r}")
        if not self.start < self.end:
            raise ValueError(f"ruling start {self.start} must be < end {self.end}")

    @property
    def length(self) -> float:
        return self.end - self.start

    def bbox(self) -> PageRect:
        if self.orientation == HORIZONTAL:
            return PageRect(self.position, self.start, self.position, self.end)
        return PageRect(self.start, self.position, self.end, self.position)

    def clipped(self, rect: PageRect) -> "Ruling | None":
        """Portion of the ruling inside `rect`, or None when outside."""
        if self.orientation == HORIZONTAL:
            if not rect.top <= self.position <= rect.bottom:
                return None
            lo, hi = max(self.start, rect.left), min(self.end, rect.right)
        else:
            if not rect.left <= self.position <= rect.right:
                return None
            lo, hi = max(self.start, rect.top), min(self.end, rect.bottom)
        if lo >= hi:
            return None
        return Ruling(self.orientation, self.position, lo, hi)


def bounding_rect(rects) -> PageRect:
    """Union of a non-empty iterable of rects."""
    it = iter(rects)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("bounding_rect needs at least one rect") from None
    for r in it:
        acc = acc.union(r)
    return acc
