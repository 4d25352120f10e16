import type { EducationToken, HealthResponse, SuggestResponse } from "./types.js";

/** A non-2xx response from the service, carrying its stable error code. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function errorFromResponse(response: Response): Promise<ApiError> {
  let code = "unknown";
  let message = `request failed with status ${response.status}`;
  try {
    const body = (await response.json()) as { error?: string; message?: string };
    if (body.error) code = body.error;
    if (body.message) message = body.message;
  } catch {
    // Non-JSON error body; keep the generic message.
  }
  return new ApiError(response.status, code, message);
}

export async function fetchSuggestions(
  baseUrl: string,
  goal: string,
  education: EducationToken,
  options: { limit?: number; signal?: AbortSignal } = {},
): Promise<SuggestResponse> {
  const params = new URLSearchParams({ goal, education });
  if (options.limit !== undefined) {
    params.set("limit", String(options.limit));
  }
  const response = await fetch(`${baseUrl}/api/v1/suggest?${params.toString()}`, {
    signal: options.signal,
  });
  if (!response.ok) {
    throw await errorFromResponse(response);
  }
  return (await response.json()) as SuggestResponse;
}

export async function fetchHealth(baseUrl: string, signal?: AbortSignal): Promise<HealthResponse> {
  const response = await fetch(`${baseUrl}/api/v1/health`, { signal });
  if (!response.ok) {
    throw await errorFromResponse(response);
  }
  return (await response.json()) as HealthResponse;
}
