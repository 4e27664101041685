"""Content stream interpreter.

Executes the operators that matter for table extraction: text showing
(with full text-state handling), path construction and painting (the
source of ruling lines), transformation stack, and form XObjects.
Colour, shading, clipping, and raster images are consumed and ignored.

Output coordinates are page space: origin at the top-left of the page
as displayed (the /Rotate entry is honoured), y growing downward, units
of 1/72 inch.
"""

from __future__ import annotations

import math

from ..geom import HORIZONTAL, VERTICAL, PageRect, Ruling
from ..model import TextElement
from .cos import DELIMITERS, WHITESPACE, Lexer, Name, Ref, Stream
from .fonts import Font

IDENTITY = (1.0, 0.0, 0.0, 1.0, 0.0, 0.0)

# a segment counts as axis-aligned when it is within 1 degree of the axis
# (or wobbles less than half a point, whichever is looser)
AXIS_SLOPE = math.tan(math.radians(1.0))
AXIS_TOL = 0.5
# segments shorter than this are ignored
MIN_RULING_LEN = 0.5
# filled rectangles at most this thick are rulings, thicker ones are decoration
THIN_FILL = 2.0


def mat_mult(m1, m2):
    """Compose transforms: apply m1 first, then m2 (row-vector order)."""
    a1, b1, c1, d1, e1, f1 = m1
    a2, b2, c2, d2, e2, f2 = m2
    return (
        a1 * a2 + b1 * c2,
        a1 * b2 + b1 * d2,
        c1 * a2 + d1 * c2,
        c1 * b2 + d1 * d2,
        e1 * a2 + f1 * c2 + e2,
        e1 * b2 + f1 * d2 + f2,
    )


def mat_apply(m, x, y):
    return (m[0] * x + m[2] * y + m[4], m[1] * x + m[3] * y + m[5])


class DeviceMapper:
    """Maps device coordinates to rotated, top-left-origin page space."""

    def __init__(self, mediabox, rotate: int):
        llx, lly, urx, ury = mediabox
        self.llx = llx
        self.lly = lly
        self.w = urx - llx
        self.h = ury - lly
        self.rotate = rotate
        if rotate in (90, 270):
            self.page_width, self.page_height = self.h, self.w
        else:
            self.page_width, self.page_height = self.w, self.h

    def to_page(self, xd: float, yd: float) -> tuple[float, float]:
        x = xd - self.llx
        y = yd - self.lly
        r = self.rotate
        if r == 90:
            return (y, x)
        if r == 180:
            return (self.w - x, y)
        if r == 270:
            return (self.h - y, self.w - x)
        return (x, self.h - y)

    def rect_from_device(self, corners) -> PageRect:
        pts = [self.to_page(x, y) for x, y in corners]
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        return PageRect(
            top=max(0.0, min(ys)),
            left=max(0.0, min(xs)),
            bottom=max(0.0, max(ys)),
            right=max(0.0, max(xs)),
        )


class GState:
    """The slice of graphics state q/Q must preserve for our purposes."""

    __slots__ = (
        "ctm",
        "char_space",
        "word_space",
        "hscale",
        "leading",
        "font",
        "font_size",
        "rise",
        "render_mode",
    )

    def __init__(self):
        self.ctm = IDENTITY
        self.char_space = 0.0
        self.word_space = 0.0
        self.hscale = 1.0
        self.leading = 0.0
        self.font: Font | None = None
        self.font_size = 0.0
        self.rise = 0.0
        self.render_mode = 0

    def copy(self) -> "GState":
        g = GState.__new__(GState)
        for slot in GState.__slots__:
            setattr(g, slot, getattr(self, slot))
        return g


class ContentInterpreter:
    """Runs content streams and accumulates text elements and rulings."""

    def __init__(self, resolve, mapper: DeviceMapper, font_loader):
        self.resolve = resolve
        self.mapper = mapper
        self.font_loader = font_loader
        self.elements: list[TextElement] = []
        self.segments: list[tuple[float, float, float, float]] = []
        self.gs = GState()
        self.gs_stack: list[GState] = []
        self.tm = IDENTITY
        self.tlm = IDENTITY
        self.path: list[list[tuple[float, float]]] = []
        self._form_guard: set[int] = set()
        self._fallback_font: Font | None = None

    # -- public entry ---------------------------------------------------

    def run(self, data: bytes, resources: dict):
        self._execute(data, resources or {}, 0)

    def rulings(self) -> list[Ruling]:
        out = []
        for x0, y0, x1, y1 in self.segments:
            px0, py0 = self.mapper.to_page(x0, y0)
            px1, py1 = self.mapper.to_page(x1, y1)
            dx, dy = abs(px1 - px0), abs(py1 - py0)
            if dy <= max(AXIS_TOL, dx * AXIS_SLOPE) and dx >= MIN_RULING_LEN:
                pos = (py0 + py1) / 2.0
                lo, hi = min(px0, px1), max(px0, px1)
                if pos >= 0 and lo >= 0:
                    out.append(Ruling(HORIZONTAL, pos, lo, hi))
            elif dx <= max(AXIS_TOL, dy * AXIS_SLOPE) and dy >= MIN_RULING_LEN:
                pos = (px0 + px1) / 2.0
                lo, hi = min(py0, py1), max(py0, py1)
                if pos >= 0 and lo >= 0:
                    out.append(Ruling(VERTICAL, pos, lo, hi))
        return out

    # -- execution ------------------------------------------------------

    def _execute(self, data: bytes, resources: dict, depth: int):
        if depth > 12:
            return
        lexer = Lexer(data)
        operands: list = []
        while True:
            tok = lexer.next_token()
            if tok is None:
                break
            kind, value = tok
            if kind in ("num", "str", "name"):
                operands.append(value)
            elif kind == "[":
                operands.append(self._collect_array(lexer))
            elif kind == "<<":
                operands.append(self._collect_dict(lexer))
            elif kind in ("]", ">>", "{", "}"):
                continue
            elif kind == "kw":
                if value == b"ID":
                    self._skip_inline_image(lexer)
                    operands = []
                else:
                    self._op(value, operands, resources, lexer, depth)
                    operands = []

    def _collect_array(self, lexer: Lexer) -> list:
        out = []
        while True:
            tok = lexer.next_token()
            if tok is None or tok[0] == "]":
                return out
            kind, value = tok
            if kind in ("num", "str", "name"):
                out.append(value)
            elif kind == "[":
                out.append(self._collect_array(lexer))
            elif kind == "<<":
                out.append(self._collect_dict(lexer))
            elif kind == "kw" and value in (b"true", b"false", b"null"):
                out.append({b"true": True, b"false": False, b"null": None}[value])

    def _collect_dict(self, lexer: Lexer) -> dict:
        out = {}
        key = None
        while True:
            tok = lexer.next_token()
            if tok is None or tok[0] == ">>":
                return out
            kind, value = tok
            if key is None:
                if kind == "name":
                    key = str(value)
                continue
            if kind == "[":
                out[key] = self._collect_array(lexer)
            elif kind == "<<":
                out[key] = self._collect_dict(lexer)
            elif kind in ("num", "str", "name"):
                out[key] = value
            key = None

    def _skip_inline_image(self, lexer: Lexer):
        data = lexer.data
        p = lexer.pos
        if p < len(data) and data[p] in WHITESPACE:
            p += 1
        while True:
            idx = data.find(b"EI", p)
            if idx < 0:
                lexer.pos = len(data)
                return
            before_ok = idx > 0 and data[idx - 1] in WHITESPACE
            after = data[idx + 2 : idx + 3]
            after_ok = not after or after[0] in WHITESPACE or after[0] in DELIMITERS
            if before_ok and after_ok:
                lexer.pos = idx + 2
                return
            p = idx + 2

    # -- operator dispatch ------------------------------------------------

    def _op(self, op: bytes, st: list, resources: dict, lexer: Lexer, depth: int):
        gs = self.gs
        if op == b"q":
            self.gs_stack.append(gs.copy())
        elif op == b"Q":
            if self.gs_stack:
                self.gs = self.gs_stack.pop()
        elif op == b"cm" and len(st) >= 6:
            m = tuple(float(v) for v in st[-6:])
            gs.ctm = mat_mult(m, gs.ctm)
        elif op == b"BT":
            self.tm = IDENTITY
            self.tlm = IDENTITY
        elif op == b"ET":
            pass
        elif op == b"Tf" and len(st) >= 2:
            gs.font = self._lookup_font(st[-2], resources)
            gs.font_size = float(st[-1])
        elif op == b"Td" and len(st) >= 2:
            self._td(float(st[-2]), float(st[-1]))
        elif op == b"TD" and len(st) >= 2:
            gs.leading = -float(st[-1])
            self._td(float(st[-2]), float(st[-1]))
        elif op == b"Tm" and len(st) >= 6:
            m = tuple(float(v) for v in st[-6:])
            self.tm = m
            self.tlm = m
        elif op == b"T*":
            self._td(0.0, -gs.leading)
        elif op == b"TL" and st:
            gs.leading = float(st[-1])
        elif op == b"Tc" and st:
            gs.char_space = float(st[-1])
        elif op == b"Tw" and st:
            gs.word_space = float(st[-1])
        elif op == b"Tz" and st:
            gs.hscale = float(st[-1]) / 100.0
        elif op == b"Ts" and st:
            gs.rise = float(st[-1])
        elif op == b"Tr" and st:
            gs.render_mode = int(st[-1])
        elif op == b"Tj" and st:
            if isinstance(st[-1], bytes):
                self._show(st[-1])
        elif op == b"'" and st:
            self._td(0.0, -gs.leading)
            if isinstance(st[-1], bytes):
                self._show(st[-1])
        elif op == b'"' and len(st) >= 3:
            gs.word_space = float(st[-3])
            gs.char_space = float(st[-2])
            self._td(0.0, -gs.leading)
            if isinstance(st[-1], bytes):
                self._show(st[-1])
        elif op == b"TJ" and st and isinstance(st[-1], list):
            for item in st[-1]:
                if isinstance(item, bytes):
                    self._show(item)
                elif isinstance(item, (int, float)):
                    tx = -float(item) / 1000.0 * gs.font_size * gs.hscale
                    self.tm = mat_mult((1, 0, 0, 1, tx, 0), self.tm)
        elif op == b"m" and len(st) >= 2:
            self.path.append([mat_apply(gs.ctm, float(st[-2]), float(st[-1]))])
        elif op == b"l" and len(st) >= 2:
            self._line_to(float(st[-2]), float(st[-1]))
        elif op == b"c" and len(st) >= 6:
            self._line_to(float(st[-2]), float(st[-1]))
        elif op == b"v" and len(st) >= 4:
            self._line_to(float(st[-2]), float(st[-1]))
        elif op == b"y" and len(st) >= 4:
            self._line_to(float(st[-2]), float(st[-1]))
        elif op == b"re" and len(st) >= 4:
            x, y, w, h = (float(v) for v in st[-4:])
            pts = [(x, y), (x + w, y), (x + w, y + h), (x, y + h), (x, y)]
            self.path.append([mat_apply(gs.ctm, px, py) for px, py in pts])
        elif op == b"h":
            self._close_path()
        elif op == b"S":
            self._paint_path(close=False, stroke=True)
        elif op == b"s":
            self._paint_path(close=True, stroke=True)
        elif op in (b"f", b"F", b"f*"):
            self._paint_path(close=True, stroke=False)
        elif op in (b"B", b"B*"):
            self._paint_path(close=False, stroke=True)
        elif op in (b"b", b"b*"):
            self._paint_path(close=True, stroke=True)
        elif op == b"n":
            self.path = []
        elif op == b"Do" and st:
            self._do_xobject(st[-1], resources, depth)
        # everything else (colour, clip, marked content, line style) is
        # consumed without effect

    def _td(self, tx: float, ty: float):
        self.tlm = mat_mult((1, 0, 0, 1, tx, ty), self.tlm)
        self.tm = self.tlm

    def _line_to(self, x: float, y: float):
        pt = mat_apply(self.gs.ctm, x, y)
        if not self.path:
            self.path.append([pt])
        else:
            self.path[-1].append(pt)

    def _close_path(self):
        if self.path and len(self.path[-1]) > 1:
            first = self.path[-1][0]
            if self.path[-1][-1] != first:
                self.path[-1].append(first)

    def _paint_path(self, close: bool, stroke: bool):
        if close:
            self._close_path()
        if stroke:
            for sub in self.path:
                for (x0, y0), (x1, y1) in zip(sub, sub[1:]):
                    self.segments.append((x0, y0, x1, y1))
        else:
            # fills only matter when they are thin rectangles standing in
            # for drawn borders; emit their centre lines
            for sub in self.path:
                seg = self._thin_rect_centerline(sub)
                if seg is not None:
                    self.segments.append(seg)
        self.path = []

    def _thin_rect_centerline(self, sub) -> tuple | None:
        pts = sub[:-1] if len(sub) >= 2 and sub[0] == sub[-1] else sub
        if len(pts) != 4:
            return None
        xs = sorted(p[0] for p in pts)
        ys = sorted(p[1] for p in pts)
        # axis-aligned rect: two distinct x values and two distinct y values
        if abs(xs[0] - xs[1]) > AXIS_TOL or abs(xs[2] - xs[3]) > AXIS_TOL:
            return None
        if abs(ys[0] - ys[1]) > AXIS_TOL or abs(ys[2] - ys[3]) > AXIS_TOL:
            return None
        x0, x1 = (xs[0] + xs[1]) / 2, (xs[2] + xs[3]) / 2
        y0, y1 = (ys[0] + ys[1]) / 2, (ys[2] + ys[3]) / 2
        w, h = x1 - x0, y1 - y0
        if h <= THIN_FILL and w > h:
            mid = (y0 + y1) / 2
            return (x0, mid, x1, mid)
        if w <= THIN_FILL and h >= w:
            mid = (x0 + x1) / 2
            return (mid, y0, mid, y1)
        return None

    def _lookup_font(self, name, resources: dict) -> Font | None:
        fonts = self.resolve(resources.get("Font"))
        entry = fonts.get(str(name)) if isinstance(fonts, dict) else None
        if entry is None:
            # missing resource: keep the text, approximate the metrics
            if self._fallback_font is None:
                self._fallback_font = Font(
                    self.resolve, {Name("Subtype"): Name("Type1"), Name("BaseFont"): Name("Helvetica")}
                )
            return self._fallback_font
        return self.font_loader(entry)

    def _do_xobject(self, name, resources: dict, depth: int):
        xobjects = self.resolve(resources.get("XObject"))
        if not isinstance(xobjects, dict):
            return
        ref = xobjects.get(str(name))
        key = ref.num if isinstance(ref, Ref) else id(ref)
        xobj = self.resolve(ref)
        if not isinstance(xobj, Stream):
            return
        if str(self.resolve(xobj.dict.get("Subtype", ""))) != "Form":
            return
        if key in self._form_guard:
            return
        self._form_guard.add(key)
        saved_gs = self.gs.copy()
        saved_stack_len = len(self.gs_stack)
        saved_tm, saved_tlm = self.tm, self.tlm
        matrix = self.resolve(xobj.dict.get("Matrix"))
        if isinstance(matrix, list) and len(matrix) == 6:
            m = tuple(float(self.resolve(v)) for v in matrix)
            self.gs.ctm = mat_mult(m, self.gs.ctm)
        sub_resources = self.resolve(xobj.dict.get("Resources"))
        if not isinstance(sub_resources, dict):
            sub_resources = resources
        try:
            self._execute(xobj.get_data(), sub_resources, depth + 1)
        except Exception:
            pass
        del self.gs_stack[saved_stack_len:]
        self.gs = saved_gs
        self.tm, self.tlm = saved_tm, saved_tlm
        self._form_guard.discard(key)

    # -- text showing -----------------------------------------------------

    def _show(self, raw: bytes):
        gs = self.gs
        font = gs.font
        if font is None:
            return
        fs = gs.font_size
        th = gs.hscale
        for code, text, w0 in font.iter_codes(raw):
            trm = mat_mult((fs * th, 0.0, 0.0, fs, 0.0, gs.rise), mat_mult(self.tm, gs.ctm))
            if text and not text.isspace():
                self._emit_glyph(trm, font, w0, text)
            word = gs.word_space if (code == 32 and not font.two_byte) else 0.0
            tx = (w0 * fs + gs.char_space + word) * th
            self.tm = mat_mult((1, 0, 0, 1, tx, 0), self.tm)

    def _emit_glyph(self, trm, font: Font, w0: float, text: str):
        descent = font.descent if font.descent < 0 else -0.2
        ascent = font.ascent if font.ascent > 0 else 0.8
        width = w0 if w0 > 0 else 0.5 * font.space_width
        corners = [
            mat_apply(trm, 0.0, descent),
            mat_apply(trm, width, descent),
            mat_apply(trm, width, ascent),
            mat_apply(trm, 0.0, ascent),
        ]
        bbox = self.mapper.rect_from_device(corners)
        if bbox.width <= 0 and bbox.height <= 0:
            return
        size = math.hypot(trm[2], trm[3])
        wos = font.space_width * math.hypot(trm[0], trm[1])
        self.elements.append(
            TextElement(bbox=bbox, text=text, font_size=size, width_of_space=max(wos, 0.1))
        )


def interpret_page(resolve, page, font_loader, content: bytes):
    """Convenience wrapper: run one page's content, return (elements, rulings)."""
    mapper = DeviceMapper(page.mediabox, page.rotate)
    interp = ContentInterpreter(resolve, mapper, font_loader)
    interp.run(content, page.resources)
    return interp.elements, interp.rulings(), mapper
