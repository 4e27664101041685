"""Core value types passed between ingest, extraction, and output stages."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import OptionsError
from .geom import PageDims, PageRect


@dataclass(frozen=True)
class TextElement:
    """A single positioned glyph.

    `width_of_space` is the width of the space glyph in the element's font
    at the rendered size; it drives word-merge and column-gap thresholds.
    Whitespace glyphs are dropped at ingest, so every element carries
    visible text.
    """

    bbox: PageRect
    text: str
    font_size: float
    width_of_space: float

    @property
    def baseline_left(self) -> float:
        return self.bbox.left


@dataclass(frozen=True)
class TextChunk:
    """A run of horizontally adjacent elements forming one word-like unit."""

    bbox: PageRect
    text: str
    width_of_space: float

    @classmethod
    def from_elements(cls, elements: "list[TextElement]") -> "TextChunk":
        if not elements:
            raise ValueError("cannot build a chunk from zero elements")
        bbox = elements[0].bbox
        for el in elements[1:]:
            bbox = bbox.union(el.bbox)
        text = "".join(el.text for el in elements)
        wos = max(el.width_of_space for el in elements)
        return cls(bbox=bbox, text=text, width_of_space=wos)


@dataclass
class RawTable:
    """A rectangular grid of cell strings plus provenance.

    `rows` is rectangular: every row has the same length.  Empty cells are
    empty strings.  `page` is 1-based.  `method` names the algorithm that
    produced the grid ("lattice" or "stream").
    """

    page: int
    bbox: PageRect
    rows: list[list[str]]
    method: str

    def __post_init__(self):
        if self.rows:
            ncols = len(self.rows[0])
            for r in self.rows:
                if len(r) != ncols:
                    raise ValueError("table rows must all have the same length")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0


VALID_METHODS = ("decide", "lattice", "stream")
VALID_OUTPUTS = ("csv", "tsv", "json")


@dataclass
class ExtractionOptions:
    """Validated knobs for a table-extraction run.

    Invariants enforced here rather than downstream:

    - `area` given with `pages` must supply one rect per page, or exactly
      one rect that is then applied to every page.
    - `columns` only makes sense for the stream algorithm.
    - `area` and `guess=True` are mutually exclusive: an explicit area is
      a promise that detection must not override.
    """

    pages: list[int] | None = None
    area: list[PageRect] | None = None
    columns: list[float] | None = None
    guess: bool = True
    method: str = "decide"
    output_format: str = "csv"
    password: str | None = None
    col_names: bool = True

    def __post_init__(self):
        if self.method not in VALID_METHODS:
            raise OptionsError(f"unknown method {self.method!r}; expected one of {VALID_METHODS}")
        if self.output_format not in VALID_OUTPUTS:
            raise OptionsError(
                f"unknown output format {self.output_format!r}; expected one of {VALID_OUTPUTS}"
            )
        if self.pages is not None:
            if not self.pages:
                raise OptionsError("pages list may not be empty")
            for p in self.pages:
                if not isinstance(p, int) or p < 1:
                    raise OptionsError(f"page numbers are 1-based positive ints, got {p!r}")
        if self.area is not None:
            if not self.area:
                raise OptionsError("area list may not be empty")
            if self.guess:
                raise OptionsError("area and guess=True are mutually exclusive")
            if self.pages is not None and len(self.area) not in (1, len(self.pages)):
                raise OptionsError(
                    f"got {len(self.area)} areas for {len(self.pages)} pages; "
                    "supply one area per page or a single area for all"
                )
        if self.columns is not None:
            if self.method == "lattice":
                raise OptionsError("columns apply only to the stream algorithm")
            if sorted(self.columns) != list(self.columns):
                raise OptionsError("column x-positions must be sorted ascending")

    def area_for(self, index: int) -> PageRect | None:
        """Area for the index-th requested page (0-based), if any."""
        if self.area is None:
            return None
        if len(self.area) == 1:
            return self.area[0]
        return self.area[index]


@dataclass
class Metadata:
    """Document information fields; n_pages always present, the rest optional."""

    n_pages: int
    title: str | None = None
    author: str | None = None
    subject: str | None = None
    keywords: str | None = None
    creator: str | None = None
    producer: str | None = None
    created: str | None = None
    modified: str | None = None

    def as_dict(self) -> dict:
        return {
            "n_pages": self.n_pages,
            "title": self.title,
            "author": self.author,
            "subject": self.subject,
            "keywords": self.keywords,
            "creator": self.creator,
            "producer": self.producer,
            "created": self.created,
            "modified": self.modified,
        }


@dataclass
class PageContent:
    """Everything extraction needs from one page, in page coordinates."""

    page: int
    dims: PageDims
    elements: list[TextElement] = field(default_factory=list)
    rulings: list = field(default_factory=list)
