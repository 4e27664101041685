import { describe, expect, it } from "vitest";

import {
  Selection,
  areaFlagValue,
  areasJson,
  cliFlags,
  fmtPt,
  moveCorner,
  selectionLabel,
} from "../src/areas.js";
import { PageDims } from "../src/coords.js";

const LETTER: PageDims = { width: 612, height: 792 };

const sel: Selection = {
  id: 1,
  page: 2,
  rect: { top: 58, left: 125, bottom: 182, right: 488 },
};

describe("fmtPt", () => {
  it("drops trailing zeros", () => {
    expect(fmtPt(58)).toBe("58");
    expect(fmtPt(58.0)).toBe("58");
    expect(fmtPt(58.15)).toBe("58.15");
    expect(fmtPt(58.1)).toBe("58.1");
  });

  it("rounds sub-centipoint noise away", () => {
    expect(fmtPt(125.26999999)).toBe("125.27");
  });
});

describe("cliFlags", () => {
  it("produces the exact flag string", () => {
    expect(cliFlags(sel)).toBe("--pages 2 --area 58,125,182,488");
  });

  it("keeps fractional points", () => {
    const frac: Selection = {
      id: 2,
      page: 3,
      rect: { top: 58.15, left: 125.27, bottom: 182.02, right: 488.5 },
    };
    expect(cliFlags(frac)).toBe("--pages 3 --area 58.15,125.27,182.02,488.5");
  });
});

describe("areaFlagValue", () => {
  it("is comma-joined top,left,bottom,right", () => {
    expect(areaFlagValue(sel.rect)).toBe("58,125,182,488");
  });
});

describe("areasJson", () => {
  it("lists one record per selection", () => {
    const other: Selection = {
      id: 2,
      page: 1,
      rect: { top: 10, left: 20, bottom: 30, right: 40 },
    };
    const parsed = JSON.parse(areasJson([sel, other]));
    expect(parsed).toEqual([
      { page: 2, area: [58, 125, 182, 488] },
      { page: 1, area: [10, 20, 30, 40] },
    ]);
  });
});

describe("selectionLabel", () => {
  it("names the page and the rect", () => {
    expect(selectionLabel(sel)).toBe("p2 (58, 125, 182, 488)");
  });
});

describe("moveCorner", () => {
  it("moves one corner and keeps the opposite corner fixed", () => {
    const moved = moveCorner(sel.rect, "se", 1000, 380, 144, LETTER);
    expect(moved.top).toBe(58);
    expect(moved.left).toBe(125);
    expect(moved.bottom).toBe(190);
    expect(moved.right).toBe(500);
  });

  it("normalizes when the corner crosses its opposite", () => {
    const moved = moveCorner(sel.rect, "nw", 1100, 500, 144, LETTER);
    expect(moved.top).toBe(182);
    expect(moved.left).toBe(488);
    expect(moved.bottom).toBe(250);
    expect(moved.right).toBe(550);
  });

  it("clamps the dragged corner to the page", () => {
    const moved = moveCorner(sel.rect, "ne", 99999, -50, 144, LETTER);
    expect(moved.right).toBe(612);
    expect(moved.top).toBe(0);
  });
});
