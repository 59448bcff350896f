import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";

function mockFetch(status: number, body: unknown) {
  return vi.fn(async () => ({
    ok: status >= 200 && status < 300,
    status,
    statusText: `status ${status}`,
    json: async () => body,
  })) as unknown as typeof fetch;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("ApiClient", () => {
  it("posts analyze bodies in the wire form", async () => {
    const fetcher = mockFetch(200, { oracle: "Losing" });
    vi.stubGlobal("fetch", fetcher);
    const api = new ApiClient("http://x");
    const result = await api.analyze("H1", { AB: 2, BC: 1, CD: 2, EF: 1 });
    expect(result.oracle).toBe("Losing");
    const [url, init] = (fetcher as any).mock.calls[0];
    expect(url).toBe("http://x/api/analyze");
    expect(JSON.parse(init.body)).toEqual({
      graph: "H1",
      weights: { AB: 2, BC: 1, CD: 2, EF: 1 },
    });
  });

  it("raises ApiError with the service's code and message", async () => {
    vi.stubGlobal(
      "fetch",
      mockFetch(422, { error: "invalid_weights", message: "weight on AB" }),
    );
    const api = new ApiClient();
    const failure = await api.analyze("H1", { AB: -1 }).catch((e) => e);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.status).toBe(422);
    expect(failure.code).toBe("invalid_weights");
    expect(failure.message).toContain("AB");
  });

  it("falls back to http_error for bodyless failures", async () => {
    vi.stubGlobal("fetch", mockFetch(500, null));
    const api = new ApiClient();
    const failure = await api.getSession("nope").catch((e) => e);
    expect(failure.code).toBe("http_error");
  });
});
