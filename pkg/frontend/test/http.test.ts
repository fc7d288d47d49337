import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { HttpError, requestJson } from "../src/http.js";

const jsonResponse = (body: unknown, status = 200) =>
  new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });

describe("requestJson", () => {
  let fetchMock: ReturnType<typeof vi.fn>;

  beforeEach(() => {
    fetchMock = vi.fn();
    vi.stubGlobal("fetch", fetchMock);
  });

  afterEach(() => {
    vi.unstubAllGlobals();
  });

  it("parses a successful JSON response", async () => {
    fetchMock.mockResolvedValueOnce(jsonResponse({ status: "ok" }));
    const body = await requestJson<{ status: string }>(
      "GET",
      "http://svc/health",
      undefined,
    );
    expect(body.status).toBe("ok");
    expect(fetchMock).toHaveBeenCalledTimes(1);
  });

  it("serializes the request body and sets content-type", async () => {
    fetchMock.mockResolvedValueOnce(jsonResponse({}));
    await requestJson("POST", "http://svc/v1/parse", { text: "hi" });
    const [, init] = fetchMock.mock.calls[0]!;
    expect(init.method).toBe("POST");
    expect(init.headers["content-type"]).toBe("application/json");
    expect(JSON.parse(init.body)).toEqual({ text: "hi" });
  });

  it("retries on 500 and then succeeds", async () => {
    fetchMock
      .mockResolvedValueOnce(jsonResponse({ detail: "boom" }, 500))
      .mockResolvedValueOnce(jsonResponse({ ok: true }));
    const body = await requestJson<{ ok: boolean }>(
      "POST",
      "http://svc/x",
      {},
      { retryBaseMs: 0 },
    );
    expect(body.ok).toBe(true);
    expect(fetchMock).toHaveBeenCalledTimes(2);
  });

  it("retries network-level failures", async () => {
    fetchMock
      .mockRejectedValueOnce(new TypeError("fetch failed"))
      .mockResolvedValueOnce(jsonResponse({ ok: true }));
    const body = await requestJson<{ ok: boolean }>(
      "GET",
      "http://svc/x",
      undefined,
      { retryBaseMs: 0 },
    );
    expect(body.ok).toBe(true);
  });

  it("does not retry a 400 and surfaces the detail", async () => {
    fetchMock.mockResolvedValue(jsonResponse({ detail: "bad input" }, 400));
    const err = await requestJson("POST", "http://svc/x", {}, { retryBaseMs: 0 })
      .then(() => null, (e: unknown) => e);
    expect(err).toBeInstanceOf(HttpError);
    expect((err as HttpError).status).toBe(400);
    expect((err as HttpError).detail).toBe("bad input");
    expect(fetchMock).toHaveBeenCalledTimes(1);
  });

  it("gives up after the configured retries", async () => {
    fetchMock.mockResolvedValue(jsonResponse({ detail: "down" }, 503));
    await expect(
      requestJson("GET", "http://svc/x", undefined, {
        retries: 2,
        retryBaseMs: 0,
      }),
    ).rejects.toMatchObject({ status: 503 });
    expect(fetchMock).toHaveBeenCalledTimes(3);
  });

  it("rejects malformed JSON bodies", async () => {
    fetchMock.mockResolvedValueOnce(new Response("not json", { status: 200 }));
    await expect(
      requestJson("GET", "http://svc/x", undefined),
    ).rejects.toThrow(/invalid JSON/);
  });
});
