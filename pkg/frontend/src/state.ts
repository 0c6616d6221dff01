/**
 * UI state: the mode, the alpha radio selection, and one input value per
 * mode (kept separately so switching modes and back restores what the
 * user had typed).  The state round-trips through the URL query string
 * so results are shareable links.
 */

import { Mode, PAPER_ALPHAS, PaperAlpha } from "./types.js";

export interface UiState {
  mode: Mode;
  alpha: PaperAlpha;
  /** a priori input, kept across mode switches */
  mdes: number;
  /** sensitivity input, kept across mode switches */
  n: number;
  /** target power; fixed at 0.8 unless the advanced panel is opened */
  power: number;
}

export const DEFAULT_STATE: UiState = {
  mode: "a_priori",
  alpha: 0.05,
  mdes: 0.5,
  n: 68,
  power: 0.8,
};

/** Inline-validation outcome; a message means "do not send a request". */
export function validateMdes(value: number): string | null {
  if (!Number.isFinite(value)) return "Enter a number between 0 and 1.";
  if (value <= 0 || value >= 1)
    return "MDES must lie strictly between 0 and 1.";
  return null;
}

export function validateN(value: number): string | null {
  if (!Number.isFinite(value) || !Number.isInteger(value))
    return "Sample size must be a whole number.";
  if (value < 1) return "Sample size must be at least 1.";
  return null;
}

export function validatePower(value: number): string | null {
  if (!Number.isFinite(value) || value < 0.5 || value >= 1)
    return "Power must lie in [0.5, 1).";
  return null;
}

export function activeInputError(state: UiState): string | null {
  return state.mode === "a_priori"
    ? validateMdes(state.mdes)
    : validateN(state.n);
}

export function encodeState(state: UiState): string {
  const params = new URLSearchParams();
  params.set("mode", state.mode === "a_priori" ? "apriori" : "sensitivity");
  params.set("alpha", String(state.alpha));
  params.set("mdes", String(state.mdes));
  params.set("n", String(state.n));
  if (state.power !== 0.8) params.set("power", String(state.power));
  return params.toString();
}

function closestPaperAlpha(value: number): PaperAlpha {
  let best: PaperAlpha = 0.05;
  let bestDistance = Infinity;
  for (const alpha of PAPER_ALPHAS) {
    const distance = Math.abs(alpha - value);
    if (distance < bestDistance) {
      best = alpha;
      bestDistance = distance;
    }
  }
  return best;
}

/** Decode a query string, falling back to defaults field by field. */
export function decodeState(query: string): UiState {
  const params = new URLSearchParams(query);
  const state: UiState = { ...DEFAULT_STATE };

  const mode = params.get("mode");
  if (mode === "sensitivity") state.mode = "sensitivity";
  else if (mode === "apriori" || mode === "a_priori") state.mode = "a_priori";

  const alpha = Number(params.get("alpha"));
  if (PAPER_ALPHAS.includes(alpha as PaperAlpha))
    state.alpha = alpha as PaperAlpha;
  else if (Number.isFinite(alpha) && alpha > 0)
    state.alpha = closestPaperAlpha(alpha);

  const mdes = Number(params.get("mdes"));
  if (params.has("mdes") && validateMdes(mdes) === null) state.mdes = mdes;

  const n = Number(params.get("n"));
  if (params.has("n") && validateN(n) === null) state.n = n;

  const power = Number(params.get("power"));
  if (params.has("power") && validatePower(power) === null)
    state.power = power;

  return state;
}
