import { describe, expect, it, vi } from "vitest";

import { ApiClient, ApiRequestError, isAbort } from "../src/api.js";

function okResponse(result: unknown): Response {
  return new Response(JSON.stringify({ ok: true, result }), {
    headers: { "content-type": "application/json" },
  });
}

describe("ApiClient", () => {
  it("builds query strings and unwraps the envelope", async () => {
    const fetchImpl = vi.fn(async (url: RequestInfo | URL) => {
      expect(String(url)).toBe(
        "/api/apriori?mdes=0.5&alpha=0.05&power=0.8",
      );
      return okResponse({ n_required: 25 });
    });
    const client = new ApiClient("", fetchImpl as typeof fetch);
    const result = await client.apriori(0.5, 0.05, 0.8);
    expect(result.n_required).toBe(25);
  });

  it("prefixes a base URL", async () => {
    const fetchImpl = vi.fn(async (url: RequestInfo | URL) => {
      expect(String(url)).toMatch(/^http:\/\/api\.test\/api\/sensitivity\?/);
      return okResponse({ mdes_display: "0.30" });
    });
    const client = new ApiClient("http://api.test", fetchImpl as typeof fetch);
    await client.sensitivity(68, 0.05, 0.8);
    expect(fetchImpl).toHaveBeenCalledOnce();
  });

  it("raises a typed error from error envelopes", async () => {
    const fetchImpl = vi.fn(async () =>
      new Response(
        JSON.stringify({
          ok: false,
          error: { code: "DOMAIN", message: "MDES must lie in (0, 1)" },
        }),
        { status: 422 },
      ),
    );
    const client = new ApiClient("", fetchImpl as typeof fetch);
    await expect(client.apriori(0, 0.05, 0.8)).rejects.toSatisfy(
      (error: unknown) =>
        error instanceof ApiRequestError && error.code === "DOMAIN",
    );
  });

  it("aborts the in-flight request when the channel is reused", async () => {
    const seen: AbortSignal[] = [];
    const fetchImpl = vi.fn(
      (_url: RequestInfo | URL, init?: RequestInit) => {
        const signal = init!.signal as AbortSignal;
        seen.push(signal);
        return new Promise<Response>((resolve, reject) => {
          signal.addEventListener("abort", () =>
            reject(new DOMException("aborted", "AbortError")),
          );
          setTimeout(() => resolve(okResponse({ n_required: 25 })), 5);
        });
      },
    );
    const client = new ApiClient("", fetchImpl as typeof fetch);
    const first = client.apriori(0.4, 0.05, 0.8);
    const second = client.apriori(0.5, 0.05, 0.8);
    await expect(first).rejects.toSatisfy(isAbort);
    await expect(second).resolves.toEqual({ n_required: 25 });
    expect(seen[0].aborted).toBe(true);
    expect(seen[1].aborted).toBe(false);
  });

  it("keeps distinct channels independent", async () => {
    const fetchImpl = vi.fn(async () => okResponse({ n_required: 25 }));
    const client = new ApiClient("", fetchImpl as typeof fetch);
    await Promise.all([
      client.apriori(0.5, 0.05, 0.8, "result"),
      client.apriori(0.3, 0.05, 0.8, "whatif-0"),
    ]);
    expect(fetchImpl).toHaveBeenCalledTimes(2);
  });
});
