"""HTTP service backing the interactive area picker.

One process serves exactly one document: page metadata, rendered page
images, and extraction previews for rectangles drawn in the browser.
All coordinates on the wire are pt in top-left page coordinates; pixel
mapping happens client-side.  The service never mutates the document.
"""

from __future__ import annotations

import io
import json
import threading
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import FileResponse, Response
from pydantic import BaseModel

from .errors import OptionsError, PdfGridError
from .geom import PageRect
from .ingest import DocumentHandle, get_page_dims, read_page_content
from .model import VALID_METHODS, ExtractionOptions
from .output import build_typed, write_table
from .pipeline import extract_tables
from .render import render_page

DEFAULT_PREVIEW_DPI = 144
MAX_DPI = 600

_STATIC_DIR = Path(__file__).parent / "static"


class ExtractRequest(BaseModel):
    page: int
    area: list[float]
    method: str = "decide"
    col_names: bool = True


def create_app(handle: DocumentHandle) -> FastAPI:
    app = FastAPI(title="pdfgrid picker", docs_url=None, redoc_url=None)
    dims = get_page_dims(handle)
    image_cache: dict[tuple[int, float], bytes] = {}
    cache_lock = threading.Lock()

    @app.get("/api/doc")
    def doc_info() -> dict:
        return {
            "n_pages": handle.n_pages,
            "dims": [[d.width, d.height] for d in dims],
        }

    @app.get("/api/pages/{page}/image")
    def page_image(page: int, dpi: float = DEFAULT_PREVIEW_DPI) -> Response:
        if not 1 <= page <= handle.n_pages:
            raise HTTPException(status_code=404, detail=f"no page {page}")
        if not 0 < dpi <= MAX_DPI:
            raise HTTPException(status_code=400, detail=f"dpi must be in (0, {MAX_DPI}]")
        key = (page, dpi)
        with cache_lock:
            payload = image_cache.get(key)
        if payload is None:
            image = render_page(read_page_content(handle, page), dpi)
            buf = io.BytesIO()
            image.save(buf, format="PNG")
            payload = buf.getvalue()
            with cache_lock:
                image_cache[key] = payload
        return Response(content=payload, media_type="image/png")

    @app.post("/api/extract")
    def extract_preview(req: ExtractRequest) -> dict:
        if not 1 <= req.page <= handle.n_pages:
            raise HTTPException(status_code=404, detail=f"no page {req.page}")
        if len(req.area) != 4:
            raise HTTPException(status_code=400, detail="area must be [top, left, bottom, right]")
        try:
            rect = PageRect(
                top=req.area[0], left=req.area[1], bottom=req.area[2], right=req.area[3]
            )
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        page_dims = dims[req.page - 1]
        if rect.right > page_dims.width or rect.bottom > page_dims.height:
            raise HTTPException(status_code=400, detail="area exceeds page bounds")
        if req.method not in VALID_METHODS:
            raise HTTPException(status_code=400, detail=f"unknown method {req.method!r}")
        try:
            options = ExtractionOptions(
                pages=[req.page],
                area=[rect],
                guess=False,
                method=req.method,
                col_names=req.col_names,
            )
            tables = extract_tables(handle, options)
        except OptionsError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        except PdfGridError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from None
        if not tables:
            raise HTTPException(status_code=422, detail="no table in the given area")
        typed = build_typed(tables[0], col_names=req.col_names)
        records = json.loads(write_table(typed, "json").decode("utf-8"))
        return {
            "page": typed.page,
            "method": typed.method,
            "names": typed.names,
            "types": typed.types,
            "records": records,
            "n_tables": len(tables),
        }

    @app.get("/")
    def index() -> FileResponse:
        return FileResponse(_STATIC_DIR / "index.html", media_type="text/html")

    @app.get("/static/{name}")
    def static_asset(name: str) -> FileResponse:
        target = (_STATIC_DIR / name).resolve()
        if _STATIC_DIR.resolve() not in target.parents or not target.is_file():
            raise HTTPException(status_code=404, detail="not found")
        media = "text/javascript" if name.endswith(".js") else "text/plain"
        if name.endswith(".css"):
            media = "text/css"
        if name.endswith(".html"):
            media = "text/html"
        return FileResponse(target, media_type=media)

    return app


def run_service(handle: DocumentHandle, host: str = "127.0.0.1", port: int = 8000) -> None:
    import uvicorn

    uvicorn.run(create_app(handle), host=host, port=port, log_level="warning")
