import { afterEach, describe, expect, it, vi } from "vitest";

import {
  hideErrorBanner,
  renderRows,
  setEmptyNotice,
  setFieldError,
  showErrorBanner,
} from "../src/render.js";
import type { SuggestionItem } from "../src/types.js";

function item(overrides: Partial<SuggestionItem> = {}): SuggestionItem {
  return {
    path: "Masters, Data Science",
    segments: [{ level: "Masters", stream: "Data Science" }],
    score: 100.0,
    match_kind: "simple",
    matched_position: "Data Scientist",
    source_record: "10",
    ...overrides,
  };
}

afterEach(() => {
  vi.restoreAllMocks();
});

describe("renderRows", () => {
  it("formats rank, path, and two-decimal score", () => {
    const list = document.createElement("ol");
    renderRows(list, [item()]);
    expect(list.children).toHaveLength(1);
    expect(list.children[0]!.querySelector(".result-text")!.textContent).toBe(
      "1. Masters, Data Science — 100.00",
    );
  });

  it("pads scores to two decimals", () => {
    const list = document.createElement("ol");
    renderRows(list, [item({ score: 72.7 })]);
    expect(list.textContent).toContain("72.70");
  });

  it("shows the partial badge only for partial matches", () => {
    const list = document.createElement("ol");
    renderRows(list, [item(), item({ path: "Masters, CS", match_kind: "partial" })]);
    const rows = [...list.children];
    expect(rows[0]!.querySelector(".badge-partial")).toBeNull();
    expect(rows[1]!.querySelector(".badge-partial")!.textContent).toBe("partial match");
  });

  it("preserves server order without re-sorting", () => {
    const list = document.createElement("ol");
    renderRows(list, [
      item({ path: "Masters, Low", score: 62.5 }),
      item({ path: "Masters, High", score: 99.99 }),
    ]);
    expect(list.textContent).toContain("1. Masters, Low — 62.50");
    expect(list.textContent).toContain("2. Masters, High — 99.99");
  });

  it("skips malformed items with a console diagnostic", () => {
    const warn = vi.spyOn(console, "warn").mockImplementation(() => {});
    const list = document.createElement("ol");
    const malformed = { ...item(), path: "" } as SuggestionItem;
    const rendered = renderRows(list, [malformed, item({ path: "Masters, OK" })]);
    expect(rendered).toBe(1);
    expect(list.children).toHaveLength(1);
    expect(list.textContent).toContain("1. Masters, OK");
    expect(warn).toHaveBeenCalledOnce();
  });

  it("clears previous rows on re-render", () => {
    const list = document.createElement("ol");
    renderRows(list, [item(), item({ path: "Masters, Other" })]);
    renderRows(list, [item()]);
    expect(list.children).toHaveLength(1);
  });

  it("returns zero for an empty result set", () => {
    const list = document.createElement("ol");
    expect(renderRows(list, [])).toBe(0);
    expect(list.children).toHaveLength(0);
  });
});

describe("notices and banners", () => {
  it("toggles the empty notice", () => {
    const notice = document.createElement("p");
    setEmptyNotice(notice, true);
    expect(notice.hidden).toBe(false);
    setEmptyNotice(notice, false);
    expect(notice.hidden).toBe(true);
  });

  it("shows and hides the error banner with a message", () => {
    const banner = document.createElement("div");
    banner.hidden = true;
    banner.innerHTML = "<span data-error-text></span><button>Retry</button>";
    showErrorBanner(banner, "service down");
    expect(banner.hidden).toBe(false);
    expect(banner.querySelector("[data-error-text]")!.textContent).toBe("service down");
    hideErrorBanner(banner);
    expect(banner.hidden).toBe(true);
  });

  it("sets and clears the inline field error", () => {
    const field = document.createElement("p");
    setFieldError(field, "goal is required");
    expect(field.hidden).toBe(false);
    expect(field.textContent).toBe("goal is required");
    setFieldError(field, null);
    expect(field.hidden).toBe(true);
    expect(field.textContent).toBe("");
  });
});
