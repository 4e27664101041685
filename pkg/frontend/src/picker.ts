/**
 * Area picker application: page navigation, rectangle drawing and
 * editing, live extraction previews, and CLI-flag export.
 *
 * All selection state lives client-side in this module; a refresh
 * discards unsaved rectangles by design.  At most one preview request
 * is in flight: starting a new one aborts its predecessor.
 */

import { ApiError, PickerApi } from "./api.js";
import {
  PageDims,
  PtRect,
  RENDER_DPI,
  pxToPt,
  rectFromDrag,
  rectToPx,
  roundPt,
} from "./coords.js";
import {
  Corner,
  Selection,
  areasJson,
  cliFlags,
  moveCorner,
  selectionLabel,
} from "./areas.js";
import { previewModel, renderPreview } from "./preview.js";

interface DragState {
  x0: number;
  y0: number;
  ghost: HTMLDivElement;
}

interface EditState {
  id: number;
  corner: Corner;
}

const api = new PickerApi("");

let nPages = 0;
let pageDims: PageDims[] = [];
let page = 1;
let selections: Selection[] = [];
let nextId = 1;
let activeId: number | null = null;
let drag: DragState | null = null;
let edit: EditState | null = null;
let previewAbort: AbortController | null = null;

const app = document.getElementById("app");
if (app === null) {
  throw new Error("picker: #app mount point missing");
}

app.innerHTML = `
  <header class="toolbar">
    <button id="prev" type="button">&larr; prev</button>
    <span id="page-label">page - / -</span>
    <button id="next" type="button">next &rarr;</button>
    <span id="pointer-pos" class="pointer-pos"></span>
  </header>
  <div id="banner" class="banner hidden"></div>
  <main class="layout">
    <section class="viewer">
      <div id="canvas-wrap" class="canvas-wrap">
        <img id="page-img" alt="page" draggable="false" />
        <div id="overlay" class="overlay"></div>
      </div>
    </section>
    <aside class="sidebar">
      <h2>Selections</h2>
      <ul id="selection-list" class="selection-list"></ul>
      <div class="exports">
        <button id="copy-flags" type="button">Copy CLI flags</button>
        <button id="copy-json" type="button">Copy areas JSON</button>
        <textarea id="export-box" rows="3" readonly
          placeholder="exports appear here"></textarea>
      </div>
      <div id="notice" class="notice hidden"></div>
      <div id="preview" class="preview"></div>
    </aside>
  </main>
`;

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

const prevBtn = el<HTMLButtonElement>("prev");
const nextBtn = el<HTMLButtonElement>("next");
const pageLabel = el<HTMLSpanElement>("page-label");
const pointerPos = el<HTMLSpanElement>("pointer-pos");
const banner = el<HTMLDivElement>("banner");
const pageImg = el<HTMLImageElement>("page-img");
const overlay = el<HTMLDivElement>("overlay");
const selectionList = el<HTMLUListElement>("selection-list");
const exportBox = el<HTMLTextAreaElement>("export-box");
const notice = el<HTMLDivElement>("notice");
const previewBox = el<HTMLDivElement>("preview");

function dims(): PageDims {
  return pageDims[page - 1] ?? { width: 612, height: 792 };
}

function showBanner(message: string): void {
  banner.textContent = message;
  banner.classList.remove("hidden");
}

function hideBanner(): void {
  banner.classList.add("hidden");
}

function showNotice(message: string): void {
  notice.textContent = message;
  notice.classList.remove("hidden");
}

function hideNotice(): void {
  notice.classList.add("hidden");
}

function setPage(next: number): void {
  page = Math.max(1, Math.min(next, nPages));
  pageLabel.textContent = `page ${page} / ${nPages}`;
  prevBtn.disabled = page <= 1;
  nextBtn.disabled = page >= nPages;
  pageImg.src = api.pageImageUrl(page, RENDER_DPI);
  renderRects();
}

function setActive(id: number | null): void {
  activeId = id;
  renderRects();
  renderList();
  const sel = selections.find((s) => s.id === id);
  if (sel !== undefined) {
    exportBox.value = cliFlags(sel);
    void requestPreview(sel);
  }
}

function addSelection(rect: PtRect): void {
  const sel: Selection = { id: nextId, page, rect };
  nextId += 1;
  selections.push(sel);
  setActive(sel.id);
}

function deleteSelection(id: number): void {
  selections = selections.filter((s) => s.id !== id);
  if (activeId === id) {
    activeId = null;
    previewBox.textContent = "";
    hideNotice();
  }
  renderRects();
  renderList();
}

function updateRect(id: number, rect: PtRect): void {
  const sel = selections.find((s) => s.id === id);
  if (sel !== undefined) {
    sel.rect = rect;
  }
  renderRects();
  renderList();
}

/* ---- preview (latest wins) ---- */

async function requestPreview(sel: Selection): Promise<void> {
  previewAbort?.abort();
  const controller = new AbortController();
  previewAbort = controller;
  hideNotice();
  previewBox.textContent = "extracting…";
  try {
    const resp = await api.extract(
      {
        page: sel.page,
        area: [sel.rect.top, sel.rect.left, sel.rect.bottom, sel.rect.right],
        method: "decide",
      },
      controller.signal
    );
    if (previewAbort !== controller) {
      return;
    }
    hideBanner();
    previewBox.replaceChildren(renderPreview(previewModel(resp)));
  } catch (err) {
    if (previewAbort !== controller) {
      return;
    }
    previewBox.textContent = "";
    if (err instanceof ApiError) {
      if (err.status === 422) {
        showNotice("no table found in selection");
      } else {
        showNotice(`extraction failed: ${err.message}`);
      }
    } else if (err instanceof DOMException && err.name === "AbortError") {
      /* superseded by a newer request */
    } else {
      showBanner("service unreachable");
    }
  }
}

/* ---- overlay rendering ---- */

function renderRects(): void {
  overlay.replaceChildren();
  for (const sel of selections) {
    if (sel.page !== page) {
      continue;
    }
    const box = rectToPx(sel.rect, RENDER_DPI);
    const div = document.createElement("div");
    div.className = sel.id === activeId ? "rect active" : "rect";
    div.style.left = `${box.left}px`;
    div.style.top = `${box.top}px`;
    div.style.width = `${box.width}px`;
    div.style.height = `${box.height}px`;
    div.addEventListener("mousedown", (ev) => {
      ev.stopPropagation();
      setActive(sel.id);
    });
    for (const corner of ["nw", "ne", "sw", "se"] as Corner[]) {
      const handle = document.createElement("div");
      handle.className = `handle ${corner}`;
      handle.addEventListener("mousedown", (ev) => {
        ev.stopPropagation();
        ev.preventDefault();
        edit = { id: sel.id, corner };
        setActive(sel.id);
      });
      div.appendChild(handle);
    }
    overlay.appendChild(div);
  }
}

function renderList(): void {
  selectionList.replaceChildren();
  for (const sel of selections) {
    const li = document.createElement("li");
    li.className = sel.id === activeId ? "active" : "";
    const label = document.createElement("span");
    label.textContent = selectionLabel(sel);
    label.addEventListener("click", () => {
      if (sel.page !== page) {
        setPage(sel.page);
      }
      setActive(sel.id);
    });
    const del = document.createElement("button");
    del.type = "button";
    del.textContent = "×";
    del.title = "delete selection";
    del.addEventListener("click", () => deleteSelection(sel.id));
    li.append(label, del);
    selectionList.appendChild(li);
  }
}

/* ---- mouse wiring ---- */

function overlayPoint(ev: MouseEvent): { x: number; y: number } {
  const bounds = overlay.getBoundingClientRect();
  return { x: ev.clientX - bounds.left, y: ev.clientY - bounds.top };
}

overlay.addEventListener("mousedown", (ev) => {
  const p = overlayPoint(ev);
  const ghost = document.createElement("div");
  ghost.className = "rect ghost";
  overlay.appendChild(ghost);
  drag = { x0: p.x, y0: p.y, ghost };
  ev.preventDefault();
});

window.addEventListener("mousemove", (ev) => {
  const p = overlayPoint(ev);
  const d = dims();
  pointerPos.textContent = `${roundPt(pxToPt(p.x, RENDER_DPI))}, ${roundPt(
    pxToPt(p.y, RENDER_DPI)
  )} pt`;
  if (drag !== null) {
    const left = Math.min(drag.x0, p.x);
    const top = Math.min(drag.y0, p.y);
    drag.ghost.style.left = `${left}px`;
    drag.ghost.style.top = `${top}px`;
    drag.ghost.style.width = `${Math.abs(p.x - drag.x0)}px`;
    drag.ghost.style.height = `${Math.abs(p.y - drag.y0)}px`;
  } else if (edit !== null) {
    const sel = selections.find((s) => s.id === edit?.id);
    if (sel !== undefined) {
      updateRect(sel.id, moveCorner(sel.rect, edit.corner, p.x, p.y, RENDER_DPI, d));
    }
  }
});

window.addEventListener("mouseup", (ev) => {
  if (drag !== null) {
    const p = overlayPoint(ev);
    drag.ghost.remove();
    const rect = rectFromDrag(drag.x0, drag.y0, p.x, p.y, RENDER_DPI, dims());
    drag = null;
    if (rect !== null) {
      addSelection(rect);
    }
  }
  if (edit !== null) {
    const sel = selections.find((s) => s.id === edit?.id);
    edit = null;
    if (sel !== undefined) {
      setActive(sel.id);
    }
  }
});

/* ---- export actions ---- */

function exportText(text: string): void {
  exportBox.value = text;
  exportBox.select();
  void navigator.clipboard?.writeText(text).catch(() => {
    /* clipboard may be unavailable; the textarea still holds the text */
  });
}

el<HTMLButtonElement>("copy-flags").addEventListener("click", () => {
  const sel = selections.find((s) => s.id === activeId);
  if (sel !== undefined) {
    exportText(cliFlags(sel));
  } else {
    showNotice("no active selection to export");
  }
});

el<HTMLButtonElement>("copy-json").addEventListener("click", () => {
  exportText(areasJson(selections));
});

prevBtn.addEventListener("click", () => setPage(page - 1));
nextBtn.addEventListener("click", () => setPage(page + 1));

/* ---- boot ---- */

api
  .docInfo()
  .then((info) => {
    nPages = info.n_pages;
    pageDims = info.dims.map(([width, height]) => ({ width, height }));
    hideBanner();
    setPage(1);
  })
  .catch(() => {
    showBanner("service unreachable");
  });
