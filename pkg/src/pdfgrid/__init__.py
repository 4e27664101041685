"""pdfgrid: table extraction and page utilities for PDF documents.

The package reads PDF files directly (no external PDF runtime), locates
tabular regions on each page, and reconstructs them either from ruling
lines (lattice) or from whitespace structure (stream).  Extracted tables
carry inferred column types and serialize to CSV, TSV, or JSON.  Page
level helpers cover text extraction, metadata, thumbnails, splitting,
and merging.
"""

from .errors import (
    DownloadError,
    EncryptionError,
    ExtractionError,
    OptionsError,
    PageRangeError,
    PdfGridError,
    PdfSyntaxError,
    UnsupportedEncryption,
)
from .geom import PageDims, PageRect, Ruling
from .ingest import (
    DocumentHandle,
    extract_metadata,
    extract_text,
    get_n_pages,
    get_page_dims,
    make_thumbnails,
    merge_pdfs,
    open_document,
    read_page_content,
    split_pdf,
)
from .model import ExtractionOptions, Metadata, PageContent, RawTable
from .output import TypedTable, build_typed, write_table
from .pipeline import extract_tables, extract_typed_tables
from .render import render_page

__version__ = "0.1.0"

__all__ = [
    "DocumentHandle",
    "DownloadError",
    "EncryptionError",
    "ExtractionError",
    "ExtractionOptions",
    "Metadata",
    "OptionsError",
    "PageContent",
    "PageDims",
    "PageRangeError",
    "PageRect",
    "PdfGridError",
    "PdfSyntaxError",
    "RawTable",
    "Ruling",
    "TypedTable",
    "UnsupportedEncryption",
    "build_typed",
    "extract_metadata",
    "extract_tables",
    "extract_text",
    "extract_typed_tables",
    "get_n_pages",
    "get_page_dims",
    "make_thumbnails",
    "merge_pdfs",
    "open_document",
    "read_page_content",
    "render_page",
    "split_pdf",
    "write_table",
    "__version__",
]
