import type { SuggestionItem } from "./types.js";

function isRenderable(item: SuggestionItem): boolean {
  return typeof item.path === "string" && item.path !== "" && typeof item.score === "number";
}

/**
 * Render suggestion rows into the list, strictly in array order.
 * Malformed items are skipped with a console diagnostic.
 */
export function renderRows(list: HTMLElement, items: SuggestionItem[]): number {
  list.replaceChildren();
  let rank = 0;
  for (const item of items) {
    if (!isRenderable(item)) {
      console.warn("skipping malformed suggestion item", item);
      continue;
    }
    rank += 1;
    const row = document.createElement("li");
    row.className = "result-row";
    const text = document.createElement("span");
    text.className = "result-text";
    text.textContent = `${rank}. ${item.path} — ${item.score.toFixed(2)}`;
    row.appendChild(text);
    if (item.match_kind === "partial") {
      const badge = document.createElement("span");
      badge.className = "badge-partial";
      badge.textContent = "partial match";
      row.appendChild(badge);
    }
    list.appendChild(row);
  }
  return rank;
}

export function setEmptyNotice(notice: HTMLElement, visible: boolean): void {
  notice.hidden = !visible;
}

export function showErrorBanner(banner: HTMLElement, message: string): void {
  const text = banner.querySelector<HTMLElement>("[data-error-text]");
  if (text) {
    text.textContent = message;
  }
  banner.hidden = false;
}

export function hideErrorBanner(banner: HTMLElement): void {
  banner.hidden = true;
}

/** Inline message next to the goal field; null clears it. */
export function setFieldError(element: HTMLElement, message: string | null): void {
  element.textContent = message ?? "";
  element.hidden = message === null;
}
