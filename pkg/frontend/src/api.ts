/**
 * Typed client for the JSON service.  Each named channel keeps at most
 * one request in flight: starting a new one aborts its predecessor, so
 * a dragged slider can never flood the backend or resolve out of order.
 */

import {
  AprioriResult,
  CurveResult,
  Envelope,
  SensitivityResult,
} from "./types.js";

export class ApiRequestError extends Error {
  constructor(
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

export class ApiClient {
  private controllers = new Map<string, AbortController>();

  constructor(
    private baseUrl: string = "",
    private fetchImpl: typeof fetch = fetch,
  ) {}

  /** Abort whatever is in flight on `channel` and claim it. */
  private claim(channel: string): AbortSignal {
    this.controllers.get(channel)?.abort();
    const controller = new AbortController();
    this.controllers.set(channel, controller);
    return controller.signal;
  }

  private async get<T>(
    channel: string,
    path: string,
    params: Record<string, string | number>,
  ): Promise<T> {
    const query = new URLSearchParams(
      Object.entries(params).map(([k, v]) => [k, String(v)]),
    );
    const signal = this.claim(channel);
    const response = await this.fetchImpl(
      `${this.baseUrl}${path}?${query}`,
      { signal },
    );
    const body = (await response.json()) as Envelope<T>;
    if (!body.ok) throw new ApiRequestError(body.error.code, body.error.message);
    return body.result;
  }

  apriori(
    mdes: number,
    alpha: number,
    power: number,
    channel = "result",
  ): Promise<AprioriResult> {
    return this.get<AprioriResult>(channel, "/api/apriori", {
      mdes,
      alpha,
      power,
    });
  }

  sensitivity(
    n: number,
    alpha: number,
    power: number,
    channel = "result",
  ): Promise<SensitivityResult> {
    return this.get<SensitivityResult>(channel, "/api/sensitivity", {
      n,
      alpha,
      power,
    });
  }

  curve(
    mode: "apriori" | "sensitivity",
    alpha: number,
    power: number,
    ref: number,
    channel = "curve",
  ): Promise<CurveResult> {
    return this.get<CurveResult>(channel, "/api/curve", {
      mode,
      alpha,
      power,
      ref,
    });
  }
}

/** True for fetch rejections caused by our own cancellation. */
export function isAbort(error: unknown): boolean {
  return error instanceof DOMException && error.name === "AbortError";
}
