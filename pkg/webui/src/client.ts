import type { ProcessResponse } from "./schema.js";

export const DEFAULT_BASE_URL = "http://127.0.0.1:7878";

/** Anything that can turn a script into proofs + diagnostics. */
export interface ProcessorClient {
  process(source: string, signal: AbortSignal): Promise<ProcessResponse>;
}

export class HttpProcessorClient implements ProcessorClient {
  constructor(private readonly baseUrl: string = DEFAULT_BASE_URL) {}

  async process(source: string, signal: AbortSignal): Promise<ProcessResponse> {
    const resp = await fetch(`${this.baseUrl}/process`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ source }),
      signal,
    });
    if (!resp.ok) {
      throw new Error(`backend answered ${resp.status}`);
    }
    return (await resp.json()) as ProcessResponse;
  }
}
