"""Document access: opening, page content, text, metadata, file utilities.

This module is the only place that touches the filesystem or network on
behalf of the extraction pipeline.  Everything downstream works on the
immutable PageContent snapshots produced here.
"""

from __future__ import annotations

import atexit
import hashlib
import os
import re
import shutil
import tempfile
import urllib.error
import urllib.request
from pathlib import Path

from .errors import DownloadError, OptionsError, PageRangeError, PdfGridError
from .geom import PageDims, PageRect
from .model import Metadata, PageContent, TextElement
from .pdf.content import DeviceMapper, interpret_page
from .pdf.cos import Document, PageNode, Ref, Stream, decode_text_string
from .pdf.fonts import Font
from .pdf.writer import build_document

DOWNLOAD_DIR_ENV = "PDFGRID_DOWNLOAD_DIR"

_download_dir: str | None = None


def _get_download_dir() -> str:
    global _download_dir
    if _download_dir is None:
        configured = os.environ.get(DOWNLOAD_DIR_ENV)
        if configured:
            os.makedirs(configured, exist_ok=True)
            _download_dir = configured
        else:
            _download_dir = tempfile.mkdtemp(prefix="pdfgrid-")
            atexit.register(shutil.rmtree, _download_dir, ignore_errors=True)
    return _download_dir


def _download(url: str) -> str:
    """Fetch a remote document into the per-process cache, keyed by URL."""
    cache_dir = _get_download_dir()
    digest = hashlib.sha256(url.encode("utf-8")).hexdigest()[:16]
    tail = os.path.basename(url.split("?", 1)[0]) or "document.pdf"
    if not tail.lower().endswith(".pdf"):
        tail += ".pdf"
    target = os.path.join(cache_dir, f"{digest}-{tail}")
    if os.path.exists(target):
        return target
    try:
        with urllib.request.urlopen(url, timeout=60) as resp:
            payload = resp.read()
    except (urllib.error.URLError, OSError, ValueError) as exc:
        raise DownloadError(f"could not fetch {url}: {exc}") from exc
    tmp = target + ".part"
    with open(tmp, "wb") as fh:
        fh.write(payload)
    os.replace(tmp, target)
    return target


class DocumentHandle:
    """A read-only opened document plus per-page content cache."""

    def __init__(self, local_path: str, source: str, doc: Document):
        self.local_path = local_path
        self.source = source
        self.doc = doc
        self.pages: list[PageNode] = doc.get_pages()
        self.n_pages = len(self.pages)
        self._content_cache: dict[int, PageContent] = {}
        self._font_cache: dict = {}

    @property
    def stem(self) -> str:
        return Path(self.local_path).stem

    def _load_font(self, entry):
        key = entry.num if isinstance(entry, Ref) else id(entry)
        if key not in self._font_cache:
            font_dict = self.doc.resolve(entry)
            if isinstance(font_dict, dict):
                try:
                    self._font_cache[key] = Font(self.doc.resolve, font_dict)
                except Exception:
                    self._font_cache[key] = None
            else:
                self._font_cache[key] = None
        return self._font_cache[key]

    def _page_node(self, page: int) -> PageNode:
        if not 1 <= page <= self.n_pages:
            raise PageRangeError(
                f"page {page} out of range; document has {self.n_pages} pages (1-based)"
            )
        return self.pages[page - 1]

    def _page_stream_data(self, node: PageNode) -> bytes:
        contents = self.doc.resolve(node.obj.get("Contents"))
        parts: list[bytes] = []
        if isinstance(contents, Stream):
            parts.append(contents.get_data())
        elif isinstance(contents, list):
            for item in contents:
                stream = self.doc.resolve(item)
                if isinstance(stream, Stream):
                    parts.append(stream.get_data())
        return b"\n".join(parts)


def open_document(source: str | os.PathLike, password: str | None = None) -> DocumentHandle:
    """Open a local path or http(s) URL; URLs are cached in the temp dir."""
    source = str(source)
    if re.match(r"^https?://", source, re.IGNORECASE):
        local_path = _download(source)
    else:
        local_path = source
    with open(local_path, "rb") as fh:
        data = fh.read()
    return DocumentHandle(local_path, source, Document(data, password=password))


def get_n_pages(handle: DocumentHandle) -> int:
    return handle.n_pages


def get_page_dims(handle: DocumentHandle, pages: list[int] | None = None) -> list[PageDims]:
    out = []
    for p in pages or range(1, handle.n_pages + 1):
        node = handle._page_node(p)
        mapper = DeviceMapper(node.mediabox, node.rotate)
        out.append(PageDims(width=mapper.page_width, height=mapper.page_height))
    return out


def read_page_content(handle: DocumentHandle, page: int) -> PageContent:
    """Interpret one page (1-based) into elements and rulings, cached."""
    cached = handle._content_cache.get(page)
    if cached is not None:
        return cached
    node = handle._page_node(page)
    mapper = DeviceMapper(node.mediabox, node.rotate)
    dims = PageDims(width=mapper.page_width, height=mapper.page_height)
    page_rect = dims.rect()
    elements: list[TextElement] = []
    rulings = []
    try:
        data = handle._page_stream_data(node)
    except PdfGridError:
        data = b""
    if data:
        els, ruls, _ = interpret_page(handle.doc.resolve, node, handle._load_font, data)
        for el in els:
            bbox = _clip_rect(el.bbox, page_rect)
            if bbox is not None:
                elements.append(
                    TextElement(
                        bbox=bbox,
                        text=el.text,
                        font_size=el.font_size,
                        width_of_space=el.width_of_space,
                    )
                )
        for r in ruls:
            clipped = r.clipped(page_rect)
            if clipped is not None:
                rulings.append(clipped)
    content = PageContent(page=page, dims=dims, elements=elements, rulings=rulings)
    handle._content_cache[page] = content
    return content


def _clip_rect(rect: PageRect, bounds: PageRect) -> PageRect | None:
    if not rect.intersects(bounds):
        return None
    return PageRect(
        top=max(rect.top, bounds.top),
        left=max(rect.left, bounds.left),
        bottom=min(rect.bottom, bounds.bottom),
        right=min(rect.right, bounds.right),
    )


def extract_text(
    handle: DocumentHandle,
    pages: list[int] | None = None,
    area: list[PageRect] | None = None,
) -> list[str]:
    """Reading-order text, one string per requested page."""
    from .stream import group_lines, merge_words

    wanted = list(pages or range(1, handle.n_pages + 1))
    if area is not None and len(area) not in (1, len(wanted)):
        raise OptionsError(
            f"got {len(area)} areas for {len(wanted)} pages; supply one per page or one total"
        )
    out = []
    for idx, p in enumerate(wanted):
        content = read_page_content(handle, p)
        chunks = merge_words(content.elements)
        if area is not None:
            rect = area[0] if len(area) == 1 else area[idx]
            chunks = [c for c in chunks if rect.contains_point(c.bbox.x_mid, c.bbox.y_mid)]
        lines = group_lines(chunks)
        out.append("\n".join(" ".join(c.text for c in line) for line in lines))
    return out


_PDF_DATE_RE = re.compile(
    r"D:(\d{4})(\d{2})?(\d{2})?(\d{2})?(\d{2})?(\d{2})?([Zz+-])?(\d{2})?'?(\d{2})?"
)


def _format_pdf_date(raw: str) -> str:
    """PDF D:YYYYMMDDHHmmSS dates to ISO 8601; unparsable stays verbatim."""
    m = _PDF_DATE_RE.match(raw.strip())
    if not m:
        return raw
    y, mo, d, h, mi, s, tzsign, tzh, tzm = m.groups()
    iso = f"{y}-{mo or '01'}-{d or '01'}T{h or '00'}:{mi or '00'}:{s or '00'}"
    if tzsign in ("Z", "z"):
        iso += "+00:00"
    elif tzsign in ("+", "-") and tzh:
        iso += f"{tzsign}{tzh}:{tzm or '00'}"
    return iso


def extract_metadata(handle: DocumentHandle) -> Metadata:
    info = handle.doc.info_dict()

    def text_field(key: str) -> str | None:
        value = handle.doc.resolve(info.get(key))
        if isinstance(value, bytes):
            value = decode_text_string(value)
        if isinstance(value, str) and value:
            return value
        return None

    def date_field(key: str) -> str | None:
        value = text_field(key)
        return _format_pdf_date(value) if value else None

    return Metadata(
        n_pages=handle.n_pages,
        title=text_field("Title"),
        author=text_field("Author"),
        subject=text_field("Subject"),
        keywords=text_field("Keywords"),
        creator=text_field("Creator"),
        producer=text_field("Producer"),
        created=date_field("CreationDate"),
        modified=date_field("ModDate"),
    )


def make_thumbnails(
    handle: DocumentHandle,
    out_dir: str | os.PathLike,
    pages: list[int] | None = None,
    dpi: float = 72,
) -> list[str]:
    """Render pages to PNG files named `<stem>-<page>.png`."""
    from .render import render_page

    if dpi <= 0:
        raise OptionsError(f"dpi must be positive, got {dpi}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for p in pages or range(1, handle.n_pages + 1):
        content = read_page_content(handle, p)
        image = render_page(content, dpi)
        target = out_dir / f"{handle.stem}-{p}.png"
        image.save(target, format="PNG")
        paths.append(str(target))
    return paths


def split_pdf(handle: DocumentHandle, out_dir: str | os.PathLike) -> list[str]:
    """Write each page as its own PDF named `<stem>-<page>.pdf`."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, node in enumerate(handle.pages, start=1):
        data = build_document([(handle.doc, [node])])
        target = out_dir / f"{handle.stem}-{i}.pdf"
        target.write_bytes(data)
        paths.append(str(target))
    return paths


def merge_pdfs(sources: list[str | os.PathLike], out_path: str | os.PathLike) -> DocumentHandle:
    """Concatenate the pages of the given files, in order, into out_path."""
    if not sources:
        raise OptionsError("merge needs at least one source document")
    handles = [open_document(src) for src in sources]
    data = build_document([(h.doc, h.pages) for h in handles])
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_bytes(data)
    return open_document(out_path)
