import { afterEach, describe, expect, it, vi } from "vitest";

import { DEFAULT_BASE_URL, HttpProcessorClient } from "../src/client.js";

const PAYLOAD = { schema_version: 1, proofs: [], diagnostics: [] };

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("HttpProcessorClient", () => {
  it("posts the source as JSON to /process on the default backend", async () => {
    const fetchMock = vi.fn(async () =>
      new Response(JSON.stringify(PAYLOAD), { status: 200 }),
    );
    vi.stubGlobal("fetch", fetchMock);

    const client = new HttpProcessorClient();
    const signal = new AbortController().signal;
    const result = await client.process("Dis p (Neg p)\n", signal);

    expect(result).toEqual(PAYLOAD);
    expect(fetchMock).toHaveBeenCalledTimes(1);
    const [url, init] = fetchMock.mock.calls[0] as unknown as [string, RequestInit];
    expect(url).toBe(`${DEFAULT_BASE_URL}/process`);
    expect(init.method).toBe("POST");
    expect(init.signal).toBe(signal);
    expect(JSON.parse(init.body as string)).toEqual({
      source: "Dis p (Neg p)\n",
    });
  });

  it("honors a custom base URL", async () => {
    const fetchMock = vi.fn(async () =>
      new Response(JSON.stringify(PAYLOAD), { status: 200 }),
    );
    vi.stubGlobal("fetch", fetchMock);

    await new HttpProcessorClient("http://localhost:9000").process(
      "p",
      new AbortController().signal,
    );
    expect(fetchMock.mock.calls[0][0]).toBe("http://localhost:9000/process");
  });

  it("rejects on non-2xx answers", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => new Response("bad request", { status: 400 })),
    );
    await expect(
      new HttpProcessorClient().process("p", new AbortController().signal),
    ).rejects.toThrow("backend answered 400");
  });
});
