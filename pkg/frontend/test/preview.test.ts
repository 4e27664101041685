import { describe, expect, it } from "vitest";

import { ExtractResponse } from "../src/api.js";
import { cellText, previewModel } from "../src/preview.js";

const table: ExtractResponse = {
  page: 2,
  method: "stream",
  names: ["Sepal.Length", "Sepal.Width", "Species"],
  records: [
    { "Sepal.Length": 5.1, "Sepal.Width": 3.5, Species: "setosa" },
    { "Sepal.Length": 4.9, "Sepal.Width": null, Species: "virginica" },
  ],
  n_tables: 1,
};

describe("cellText", () => {
  it("renders null as empty", () => {
    expect(cellText(null)).toBe("");
  });

  it("renders booleans in upper case", () => {
    expect(cellText(true)).toBe("TRUE");
    expect(cellText(false)).toBe("FALSE");
  });

  it("renders numbers and strings verbatim", () => {
    expect(cellText(5.1)).toBe("5.1");
    expect(cellText(3)).toBe("3");
    expect(cellText("setosa")).toBe("setosa");
  });
});

describe("previewModel", () => {
  it("orders cells by column names", () => {
    const model = previewModel(table);
    expect(model.header).toEqual(["Sepal.Length", "Sepal.Width", "Species"]);
    expect(model.rows).toEqual([
      ["5.1", "3.5", "setosa"],
      ["4.9", "", "virginica"],
    ]);
  });

  it("captions page, method, and row count", () => {
    expect(previewModel(table).caption).toBe("page 2, stream method, 2 rows");
  });

  it("notes when more than one table matched", () => {
    const multi: ExtractResponse = { ...table, n_tables: 3 };
    expect(previewModel(multi).caption).toBe(
      "page 2, stream method, 2 rows; first of 3 tables"
    );
  });

  it("treats a missing key as an empty cell", () => {
    const sparse: ExtractResponse = {
      page: 1,
      method: "lattice",
      names: ["A", "B"],
      records: [{ A: "x" }],
      n_tables: 1,
    };
    expect(previewModel(sparse).rows).toEqual([["x", ""]]);
  });
});
