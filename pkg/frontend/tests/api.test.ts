import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiError, fetchHealth, fetchSuggestions } from "../src/api.js";
import { jsonResponse } from "./helpers.js";

const emptyBody = { query: { goal: "x", education: "bachelors" }, suggestions: [] };

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("fetchSuggestions", () => {
  it("builds the query string with encoding", async () => {
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse(emptyBody));
    vi.stubGlobal("fetch", fetchMock);
    await fetchSuggestions("http://api.test", "Software Engineer", "high_school");
    const url = fetchMock.mock.calls[0]![0] as string;
    expect(url).toBe("http://api.test/api/v1/suggest?goal=Software+Engineer&education=high_school");
  });

  it("passes limit when given", async () => {
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse(emptyBody));
    vi.stubGlobal("fetch", fetchMock);
    await fetchSuggestions("", "x", "bachelors", { limit: 3 });
    expect(fetchMock.mock.calls[0]![0]).toContain("limit=3");
  });

  it("throws ApiError with the service's stable code", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn().mockResolvedValue(jsonResponse({ error: "missing_goal", message: "goal required" }, 400)),
    );
    const failure = await fetchSuggestions("", "x", "bachelors").catch((error) => error);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.status).toBe(400);
    expect(failure.code).toBe("missing_goal");
    expect(failure.message).toBe("goal required");
  });

  it("tolerates a non-JSON error body", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn().mockResolvedValue(new Response("<html>broken</html>", { status: 500 })),
    );
    const failure = await fetchSuggestions("", "x", "bachelors").catch((error) => error);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.code).toBe("unknown");
    expect(failure.status).toBe(500);
  });

  it("returns the parsed document", async () => {
    const body = {
      query: { goal: "Data Scientist", education: "bachelors" },
      suggestions: [
        {
          path: "Masters, Data Science",
          segments: [{ level: "Masters", stream: "Data Science" }],
          score: 100,
          match_kind: "simple",
          matched_position: "Data Scientist",
          source_record: "10",
        },
      ],
    };
    vi.stubGlobal("fetch", vi.fn().mockResolvedValue(jsonResponse(body)));
    const document = await fetchSuggestions("", "Data Scientist", "bachelors");
    expect(document).toEqual(body);
  });
});

describe("fetchHealth", () => {
  it("parses the health document", async () => {
    vi.stubGlobal("fetch", vi.fn().mockResolvedValue(jsonResponse({ status: "ok", records: 9 })));
    expect(await fetchHealth("")).toEqual({ status: "ok", records: 9 });
  });
});
