"""Minimal page rasterizer for thumbnails and the picker UI.

Renders text and ruling lines onto a white canvas.  This is not a
faithful PDF renderer: glyph shapes come from a bundled UI font and
raster images are skipped.  It exists so a human can see where tables
sit on a page; pixel dims always follow ceil(pt * dpi / 72).
"""

from __future__ import annotations

import math
from functools import lru_cache

from PIL import Image, ImageDraw, ImageFont

from .model import PageContent


@lru_cache(maxsize=32)
def _font(px: int):
    try:
        return ImageFont.load_default(size=px)
    except TypeError:
        return ImageFont.load_default()


def pixel_dims(width_pt: float, height_pt: float, dpi: float) -> tuple[int, int]:
    return (
        math.ceil(width_pt * dpi / 72.0),
        math.ceil(height_pt * dpi / 72.0),
    )


def render_page(content: PageContent, dpi: float = 72) -> Image.Image:
    scale = dpi / 72.0
    w_px, h_px = pixel_dims(content.dims.width, content.dims.height, dpi)
    image = Image.new("RGB", (w_px, h_px), "white")
    draw = ImageDraw.Draw(image)
    for el in content.elements:
        px = max(4, round(el.font_size * scale))
        draw.text(
            (el.bbox.left * scale, el.bbox.top * scale),
            el.text,
            fill=(20, 20, 20),
            font=_font(px),
        )
    line_w = max(1, round(scale))
    for r in content.rulings:
        box = r.bbox()
        draw.line(
            (box.left * scale, box.top * scale, box.right * scale, box.bottom * scale),
            fill=(60, 60, 60),
            width=line_w,
        )
    return image
