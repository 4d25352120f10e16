import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

const here = dirname(fileURLToPath(import.meta.url));

export const frontendRoot = join(here, "..");
export const repoRoot = join(here, "..", "..");

/** Mount the real index.html markup (scripts stripped) into the jsdom body. */
export function mountIndexHtml(): void {
  const html = readFileSync(join(frontendRoot, "index.html"), "utf-8");
  const match = html.match(/<body>([\s\S]*)<\/body>/);
  if (!match) {
    throw new Error("index.html has no <body>");
  }
  document.body.innerHTML = match[1]!.replace(/<script[\s\S]*?<\/script>/g, "");
}

export function element<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) {
    throw new Error(`missing #${id}`);
  }
  return found as T;
}

export function dispatchSubmit(form: HTMLFormElement): void {
  form.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
}

export function dispatchInput(input: HTMLInputElement, value: string): void {
  input.value = value;
  input.dispatchEvent(new Event("input", { bubbles: true }));
}

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}
