"""Deterministic PDF writer for page-level document surgery.

Serializes a fresh document with a classic cross-reference table and no
incidental state (no /ID, no dates, no producer string), so identical
inputs always yield identical bytes.  Pages are copied across documents
by deep-copying their object graphs; references are memoized per source
document so shared resources are written once.
"""

from __future__ import annotations

from .cos import Document, Name, PageNode, Ref, Stream

_NAME_OK = set(range(0x21, 0x7F)) - set(b"()<>[]{}/%#")


def _fmt_number(v) -> bytes:
    if isinstance(v, bool):
        return b"true" if v else b"false"
    if isinstance(v, int):
        return str(v).encode("ascii")
    if v == int(v) and abs(v) < 1e15:
        return str(int(v)).encode("ascii")
    s = f"{v:.6f}".rstrip("0").rstrip(".")
    return (s or "0").encode("ascii")


def _fmt_name(name: str) -> bytes:
    out = bytearray(b"/")
    for byte in name.encode("utf-8"):
        if byte in _NAME_OK:
            out.append(byte)
        else:
            out += f"#{byte:02X}".encode("ascii")
    return bytes(out)


def _fmt_string(raw: bytes) -> bytes:
    out = bytearray(b"(")
    for byte in raw:
        if byte in b"()\\":
            out.append(0x5C)
            out.append(byte)
        elif 0x20 <= byte < 0x7F:
            out.append(byte)
        elif byte == 0x0A:
            out += b"\\n"
        elif byte == 0x0D:
            out += b"\\r"
        else:
            out += f"\\{byte:03o}".encode("ascii")
    out.append(0x29)
    return bytes(out)


def serialize(obj) -> bytes:
    if obj is None:
        return b"null"
    if isinstance(obj, bool):
        return b"true" if obj else b"false"
    if isinstance(obj, (int, float)):
        return _fmt_number(obj)
    if isinstance(obj, Name):
        return _fmt_name(str(obj))
    if isinstance(obj, bytes):
        return _fmt_string(obj)
    if isinstance(obj, str):
        return _fmt_string(obj.encode("latin-1", "replace"))
    if isinstance(obj, Ref):
        return f"{obj.num} {obj.gen} R".encode("ascii")
    if isinstance(obj, list):
        return b"[" + b" ".join(serialize(x) for x in obj) + b"]"
    if isinstance(obj, Stream):
        d = dict(obj.dict)
        d["Length"] = len(obj.raw)
        return serialize_dict(d) + b"\nstream\n" + obj.raw + b"\nendstream"
    if isinstance(obj, dict):
        return serialize_dict(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def serialize_dict(d: dict) -> bytes:
    parts = [b"<<"]
    for key in d:
        parts.append(_fmt_name(str(key)) + b" " + serialize(d[key]))
    parts.append(b">>")
    return b"\n".join(parts)


class PdfWriter:
    """Collects numbered objects and emits a complete file."""

    def __init__(self):
        self._objects: list = []

    def reserve(self) -> Ref:
        self._objects.append(None)
        return Ref(len(self._objects), 0)

    def set(self, ref: Ref, obj):
        self._objects[ref.num - 1] = obj

    def add(self, obj) -> Ref:
        ref = self.reserve()
        self.set(ref, obj)
        return ref

    def build(self, root: Ref) -> bytes:
        out = bytearray(b"%PDF-1.6\n%\xe2\xe3\xcf\xd3\n")
        offsets = []
        for i, obj in enumerate(self._objects, start=1):
            offsets.append(len(out))
            out += f"{i} 0 obj\n".encode("ascii")
            out += serialize(obj)
            out += b"\nendobj\n"
        xref_pos = len(out)
        out += f"xref\n0 {len(self._objects) + 1}\n".encode("ascii")
        out += b"0000000000 65535 f \n"
        for off in offsets:
            out += f"{off:010d} 00000 n \n".encode("ascii")
        trailer = {"Size": len(self._objects) + 1, "Root": root}
        out += b"trailer\n" + serialize_dict(trailer)
        out += f"\nstartxref\n{xref_pos}\n%%EOF\n".encode("ascii")
        return bytes(out)


class PageCopier:
    """Deep-copies page object graphs from source documents into a writer."""

    def __init__(self, writer: PdfWriter):
        self.writer = writer
        self._memo: dict[tuple[int, int], Ref] = {}

    def copy_value(self, doc: Document, obj):
        if isinstance(obj, Ref):
            key = (id(doc), obj.num)
            hit = self._memo.get(key)
            if hit is not None:
                return hit
            new_ref = self.writer.reserve()
            self._memo[key] = new_ref
            target = doc.get_object(obj)
            self.writer.set(new_ref, self.copy_value(doc, target))
            return new_ref
        if isinstance(obj, Stream):
            d = {k: self.copy_value(doc, v) for k, v in obj.dict.items() if k != "Length"}
            return Stream(d, obj.raw)
        if isinstance(obj, dict):
            return {k: self.copy_value(doc, v) for k, v in obj.items()}
        if isinstance(obj, list):
            return [self.copy_value(doc, v) for v in obj]
        return obj

    def copy_page(self, doc: Document, page: PageNode, parent: Ref) -> Ref:
        d: dict = {
            "Type": Name("Page"),
            "Parent": parent,
            "MediaBox": [float(v) for v in page.mediabox],
        }
        if page.rotate:
            d["Rotate"] = page.rotate
        if "Contents" in page.obj:
            d["Contents"] = self.copy_value(doc, page.obj["Contents"])
        d["Resources"] = self.copy_value(doc, page.resources_raw)
        return self.writer.add(d)


def build_document(sources: list[tuple[Document, list[PageNode]]]) -> bytes:
    """Assemble a new PDF from (document, pages) selections, in order."""
    writer = PdfWriter()
    pages_ref = writer.reserve()
    copier = PageCopier(writer)
    kids = []
    for doc, pages in sources:
        for page in pages:
            kids.append(copier.copy_page(doc, page, pages_ref))
    writer.set(pages_ref, {"Type": Name("Pages"), "Kids": kids, "Count": len(kids)})
    catalog = writer.add({"Type": Name("Catalog"), "Pages": pages_ref})
    return writer.build(catalog)
