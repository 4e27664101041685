"""Exception taxonomy for the pdfgrid package.

Every error raised on purpose by this package derives from PdfGridError so
callers can catch one type at the boundary.  Parse-level problems carry the
byte offset where the reader gave up when that is known.
"""

from __future__ import annotations


class PdfGridError(Exception):
    """Base class for all pdfgrid errors."""


class PdfSyntaxError(PdfGridError):
    """The file is not well-formed PDF (bad header, xref, or object)."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class EncryptionError(PdfGridError):
    """The document is encrypted and could not be opened."""


class UnsupportedEncryption(EncryptionError):
    """The document uses an encryption scheme this package does not implement."""


class PageRangeError(PdfGridError):
    """A page number or page range fell outside the document."""


class OptionsError(PdfGridError):
    """Extraction options are inconsistent (bad area/pages/columns combination)."""


class ExtractionError(PdfGridError):
    """Table extraction failed for a reason other than bad input syntax."""


class DownloadError(PdfGridError):
    """A remote document could not be fetched."""
