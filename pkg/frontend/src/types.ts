/** Wire types for the JSON service. */

export interface ApiError {
  code: "DOMAIN" | "VALIDATION" | "INTERNAL";
  message: string;
}

export type Envelope<T> =
  | { ok: true; result: T }
  | { ok: false; error: ApiError };

export interface AprioriResult {
  mdes: number;
  alpha: number;
  power: number;
  p_alpha: number;
  n_required: number;
  small_sample_flag: boolean;
  warning: string | null;
  message: string;
}

export interface SensitivityResult {
  n: number;
  alpha: number;
  power: number;
  p_alpha: number;
  mdes: number;
  mdes_display: string;
  small_sample_flag: boolean;
  warning: string | null;
  message: string;
}

export interface CurveResult {
  mode: "a_priori" | "sensitivity";
  alpha: number;
  power: number;
  points: [number, number][];
  reference: [number, number];
}

export type Mode = "a_priori" | "sensitivity";

export type PaperAlpha = 0.01 | 0.05 | 0.1;

export const PAPER_ALPHAS: readonly PaperAlpha[] = [0.01, 0.05, 0.1];
