/**
 * What-if exploration: a small table of required N across a range of
 * effect sizes.  Every N comes from the service, one request per row,
 * so the table never contains a number the UI computed itself.
 */

import { ApiClient } from "./api.js";

export const WHATIF_MIN = 0.01;
export const WHATIF_MAX = 0.99;
export const WHATIF_MAX_ROWS = 25;

export interface WhatIfPlan {
  values: number[];
  clamped: boolean;
}

/** Effect sizes to evaluate; out-of-domain ends are clamped with notice. */
export function whatIfValues(lo: number, hi: number, step: number): WhatIfPlan {
  if (!Number.isFinite(lo) || !Number.isFinite(hi) || !Number.isFinite(step)) {
    return { values: [], clamped: false };
  }
  if (hi < lo) [lo, hi] = [hi, lo];
  let clamped = false;
  if (lo < WHATIF_MIN) {
    lo = WHATIF_MIN;
    clamped = true;
  }
  if (hi > WHATIF_MAX) {
    hi = WHATIF_MAX;
    clamped = true;
  }
  if (hi < lo) return { values: [], clamped };
  if (step <= 0) return { values: [round3(lo)], clamped };

  const values: number[] = [];
  for (let i = 0; ; i++) {
    const value = lo + i * step;
    if (value > hi + step * 1e-9) break;
    values.push(round3(Math.min(value, hi)));
    if (values.length >= WHATIF_MAX_ROWS) break;
  }
  if (values.length === 0) values.push(round3(lo));
  return { values, clamped };
}

function round3(value: number): number {
  return Number(value.toFixed(3));
}

export interface WhatIfRow {
  mdes: number;
  n: number;
  message: string;
}

/**
 * Fetch one row per effect size.  Each index reuses its own request
 * channel, so re-running the table cancels the previous run's rows.
 */
export async function fetchWhatIfRows(
  client: ApiClient,
  values: number[],
  alpha: number,
  power: number,
): Promise<WhatIfRow[]> {
  const results = await Promise.all(
    values.map((mdes, i) =>
      client.apriori(mdes, alpha, power, `whatif-${i}`),
    ),
  );
  return results.map((result) => ({
    mdes: result.mdes,
    n: result.n_required,
    message: result.message,
  }));
}
