/**
 * Extraction preview: turn an extract response into a displayable grid.
 * The model step is pure so the cell text forms are testable; only
 * renderPreview touches the DOM.
 */

import { CellValue, ExtractResponse } from "./api.js";

export interface PreviewModel {
  header: string[];
  rows: string[][];
  caption: string;
}

/** The display form of one typed cell; mirrors the CLI's text forms. */
export function cellText(value: CellValue): string {
  if (value === null) {
    return "";
  }
  if (value === true) {
    return "TRUE";
  }
  if (value === false) {
    return "FALSE";
  }
  return String(value);
}

export function previewModel(resp: ExtractResponse): PreviewModel {
  const rows = resp.records.map((record) => resp.names.map((name) => cellText(record[name] ?? null)));
  const extra = resp.n_tables > 1 ? `; first of ${resp.n_tables} tables` : "";
  return {
    header: resp.names,
    rows,
    caption: `page ${resp.page}, ${resp.method} method, ${rows.length} rows${extra}`,
  };
}

export function renderPreview(model: PreviewModel): HTMLElement {
  const wrap = document.createElement("div");
  const caption = document.createElement("p");
  caption.className = "preview-caption";
  caption.textContent = model.caption;
  wrap.appendChild(caption);
  const table = document.createElement("table");
  table.className = "preview-table";
  const thead = document.createElement("thead");
  const headRow = document.createElement("tr");
  for (const name of model.header) {
    const th = document.createElement("th");
    th.textContent = name;
    headRow.appendChild(th);
  }
  thead.appendChild(headRow);
  table.appendChild(thead);
  const tbody = document.createElement("tbody");
  for (const row of model.rows) {
    const tr = document.createElement("tr");
    for (const cell of row) {
      const td = document.createElement("td");
      td.textContent = cell;
      tr.appendChild(td);
    }
    tbody.appendChild(tr);
  }
  table.appendChild(tbody);
  wrap.appendChild(table);
  return wrap;
}
