/** Minimal fetch wrapper with timeouts and retry on transient failures. */

export class HttpError extends Error {
  readonly status?: number;
  readonly url: string;
  readonly detail?: string;

  constructor(
    message: string,
    opts: { url: string; status?: number; detail?: string },
  ) {
    super(message);
    this.name = "HttpError";
    this.url = opts.url;
    this.status = opts.status;
    this.detail = opts.detail;
  }
}

export interface HttpOptions {
  timeoutMs?: number;
  retries?: number;
  retryBaseMs?: number;
  headers?: Record<string, string>;
}

const sleep = (ms: number) => new Promise<void>((r) => setTimeout(r, ms));

function retriable(err: unknown): boolean {
  if (err instanceof HttpError) {
    return err.status === 429 || (err.status ?? 0) >= 500;
  }
  // Network-level failures (connection refused, timeout) are worth retrying.
  return true;
}

async function parseDetail(res: Response): Promise<string> {
  const text = await res.text().catch(() => "");
  try {
    const body = JSON.parse(text) as { detail?: unknown };
    if (typeof body.detail === "string") return body.detail;
  } catch {
    // fall through to the raw text
  }
  return text.slice(0, 200);
}

async function requestOnce<T>(
  method: "GET" | "POST",
  url: string,
  body: unknown,
  opts: HttpOptions,
): Promise<T> {
  const controller = new AbortController();
  const timer = setTimeout(() => controller.abort(), opts.timeoutMs ?? 120_000);
  try {
    const res = await fetch(url, {
      method,
      headers: {
        accept: "application/json",
        ...(body !== undefined ? { "content-type": "application/json" } : {}),
        ...opts.headers,
      },
      body: body !== undefined ? JSON.stringify(body) : undefined,
      signal: controller.signal,
    });
    if (!res.ok) {
      const detail = await parseDetail(res);
      throw new HttpError(`HTTP ${res.status}: ${detail}`, {
        url,
        status: res.status,
        detail,
      });
    }
    const text = await res.text();
    try {
      return JSON.parse(text) as T;
    } catch {
      throw new HttpError("invalid JSON in response", { url, status: res.status });
    }
  } finally {
    clearTimeout(timer);
  }
}

export async function requestJson<T>(
  method: "GET" | "POST",
  url: string,
  body: unknown,
  opts: HttpOptions = {},
): Promise<T> {
  const retries = opts.retries ?? 3;
  const baseMs = opts.retryBaseMs ?? 250;
  for (let attempt = 0; ; attempt++) {
    try {
      return await requestOnce<T>(method, url, body, opts);
    } catch (err) {
      if (attempt >= retries || !retriable(err)) throw err;
      await sleep(baseMs * 2 ** attempt);
    }
  }
}
