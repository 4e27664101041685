"""Low-level PDF machinery: object model, fonts, content streams, writer."""

from .cos import Document, Name, PageNode, Ref, Stream, decode_text_string
from .writer import PdfWriter, build_document

__all__ = [
    "Document",
    "Name",
    "PageNode",
    "Ref",
    "Stream",
    "decode_text_string",
    "PdfWriter",
    "build_document",
]
