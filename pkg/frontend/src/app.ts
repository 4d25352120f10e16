import { ApiError, fetchSuggestions } from "./api.js";
import {
  hideErrorBanner,
  renderRows,
  setEmptyNotice,
  setFieldError,
  showErrorBanner,
} from "./render.js";
import type { EducationToken, FormStatus } from "./types.js";

type Elements = {
  form: HTMLFormElement;
  goal: HTMLInputElement;
  education: HTMLSelectElement;
  submit: HTMLButtonElement;
  goalError: HTMLElement;
  banner: HTMLElement;
  retry: HTMLButtonElement;
  results: HTMLElement;
  emptyNotice: HTMLElement;
};

export type App = {
  status: () => FormStatus;
  /** Resolves when the in-flight request (if any) has settled. */
  idle: () => Promise<void>;
};

function requireElement<T extends HTMLElement>(root: Document, id: string): T {
  const element = root.getElementById(id);
  if (!element) {
    throw new Error(`missing element #${id}`);
  }
  return element as T;
}

function collectElements(root: Document): Elements {
  return {
    form: requireElement<HTMLFormElement>(root, "query-form"),
    goal: requireElement<HTMLInputElement>(root, "goal"),
    education: requireElement<HTMLSelectElement>(root, "education"),
    submit: requireElement<HTMLButtonElement>(root, "submit"),
    goalError: requireElement<HTMLElement>(root, "goal-error"),
    banner: requireElement<HTMLElement>(root, "error-banner"),
    retry: requireElement<HTMLButtonElement>(root, "retry"),
    results: requireElement<HTMLElement>(root, "results"),
    emptyNotice: requireElement<HTMLElement>(root, "empty-notice"),
  };
}

export function initApp(root: Document, baseUrl = ""): App {
  const el = collectElements(root);
  let status: FormStatus = "idle";
  let inflight: AbortController | null = null;
  let lastQuery: { goal: string; education: EducationToken } | null = null;
  let settled: Promise<void> = Promise.resolve();

  function syncSubmitDisabled(): void {
    el.submit.disabled = el.goal.value.trim() === "" || status === "loading";
  }

  function setStatus(next: FormStatus): void {
    status = next;
    el.form.dataset.status = next;
    syncSubmitDisabled();
  }

  async function runQuery(goal: string, education: EducationToken): Promise<void> {
    // A newer submission supersedes any request still in flight.
    inflight?.abort();
    const controller = new AbortController();
    inflight = controller;
    lastQuery = { goal, education };
    setStatus("loading");
    setFieldError(el.goalError, null);
    hideErrorBanner(el.banner);
    try {
      const response = await fetchSuggestions(baseUrl, goal, education, {
        signal: controller.signal,
      });
      if (controller !== inflight) {
        return;
      }
      const rendered = renderRows(el.results, response.suggestions);
      setEmptyNotice(el.emptyNotice, rendered === 0);
      setStatus("loaded");
    } catch (error) {
      if (controller !== inflight || (error instanceof DOMException && error.name === "AbortError")) {
        return;
      }
      setStatus("error");
      if (error instanceof ApiError && error.status >= 400 && error.status < 500) {
        setFieldError(el.goalError, error.message);
      } else {
        const message = error instanceof Error ? error.message : String(error);
        showErrorBanner(el.banner, `Request failed: ${message}. The service may be down.`);
      }
    } finally {
      if (controller === inflight) {
        inflight = null;
      }
    }
  }

  function submit(): void {
    const goal = el.goal.value.trim();
    if (goal === "" || status === "loading") {
      return;
    }
    settled = runQuery(goal, el.education.value as EducationToken);
  }

  el.form.addEventListener("submit", (event) => {
    event.preventDefault();
    submit();
  });
  el.goal.addEventListener("input", syncSubmitDisabled);
  el.retry.addEventListener("click", () => {
    if (lastQuery && status !== "loading") {
      settled = runQuery(lastQuery.goal, lastQuery.education);
    }
  });

  setStatus("idle");
  return {
    status: () => status,
    idle: () => settled,
  };
}
