/** jsdom harness: a minimal page matching AppElements plus a fake
 * service client that replays the recorded API fixtures. */

import { ApiClient } from "../src/api.js";
import { AppElements } from "../src/app.js";
import {
  AprioriResult,
  CurveResult,
  SensitivityResult,
} from "../src/types.js";

import fixtures from "./fixtures/api-recordings.json";

export const recorded = {
  apriori: fixtures.apriori_0_5 as AprioriResult,
  sensitivity68: fixtures.sensitivity_68 as SensitivityResult,
  sensitivity8: fixtures.sensitivity_8 as SensitivityResult,
  curveApriori: fixtures.curve_apriori_ref_0_5 as CurveResult,
  curveSensitivity: fixtures.curve_sensitivity_ref_68 as CurveResult,
  whatif: fixtures.whatif as Record<string, AprioriResult>,
};

export interface FakeClient {
  calls: { method: string; args: unknown[] }[];
  failCurve: boolean;
  apriori(mdes: number, alpha: number, power: number, channel?: string):
    Promise<AprioriResult>;
  sensitivity(n: number, alpha: number, power: number, channel?: string):
    Promise<SensitivityResult>;
  curve(mode: string, alpha: number, power: number, ref: number):
    Promise<CurveResult>;
}

export function fakeClient(): FakeClient {
  return {
    calls: [],
    failCurve: false,
    async apriori(mdes, alpha, power, channel) {
      this.calls.push({ method: "apriori", args: [mdes, alpha, power, channel] });
      const hit = recorded.whatif[String(mdes)];
      if (hit) return hit;
      return { ...recorded.apriori, mdes };
    },
    async sensitivity(n, alpha, power, channel) {
      this.calls.push({ method: "sensitivity", args: [n, alpha, power, channel] });
      if (n === 8) return recorded.sensitivity8;
      return { ...recorded.sensitivity68, n };
    },
    async curve(mode, alpha, power, ref) {
      this.calls.push({ method: "curve", args: [mode, alpha, power, ref] });
      if (this.failCurve) throw new TypeError("network down");
      return mode === "apriori"
        ? recorded.curveApriori
        : recorded.curveSensitivity;
    },
  };
}

export function asApiClient(fake: FakeClient): ApiClient {
  return fake as unknown as ApiClient;
}

const PAGE = `
  <label><input type="radio" name="mode" value="a_priori" checked></label>
  <label><input type="radio" name="mode" value="sensitivity"></label>
  <label><input type="radio" name="alpha" value="0.01"></label>
  <label><input type="radio" name="alpha" value="0.05" checked></label>
  <label><input type="radio" name="alpha" value="0.1"></label>
  <div id="mdes-field"><input id="mdes-input" type="number" value="0.5"></div>
  <div id="n-field" hidden><input id="n-input" type="number" value="68"></div>
  <input id="power-input" type="number" value="0.8">
  <p id="input-error"></p>
  <p id="result-text"></p>
  <p id="warning-banner" hidden></p>
  <svg id="chart" xmlns="http://www.w3.org/2000/svg"></svg>
  <p id="chart-tooltip" hidden></p>
  <div id="chart-fallback" hidden><button id="chart-retry"></button></div>
  <div id="whatif-panel">
    <input id="whatif-lo" type="number" value="0.3">
    <input id="whatif-hi" type="number" value="0.5">
    <input id="whatif-step" type="number" value="0.05">
    <p id="whatif-notice"></p>
    <table><tbody id="whatif-body"></tbody></table>
  </div>
`;

export function buildPage(): AppElements {
  document.body.innerHTML = PAGE;
  const byId = <T extends HTMLElement>(id: string) =>
    document.getElementById(id) as T;
  return {
    modeRadios: Array.from(
      document.querySelectorAll<HTMLInputElement>('input[name="mode"]'),
    ),
    alphaRadios: Array.from(
      document.querySelectorAll<HTMLInputElement>('input[name="alpha"]'),
    ),
    mdesField: byId("mdes-field"),
    mdesInput: byId<HTMLInputElement>("mdes-input"),
    nField: byId("n-field"),
    nInput: byId<HTMLInputElement>("n-input"),
    powerInput: byId<HTMLInputElement>("power-input"),
    inputError: byId("input-error"),
    resultText: byId("result-text"),
    warningBanner: byId("warning-banner"),
    chartSvg: byId("chart") as unknown as SVGSVGElement,
    chartFallback: byId("chart-fallback"),
    chartRetry: byId<HTMLButtonElement>("chart-retry"),
    tooltip: byId("chart-tooltip"),
    whatifPanel: byId("whatif-panel"),
    whatifLo: byId<HTMLInputElement>("whatif-lo"),
    whatifHi: byId<HTMLInputElement>("whatif-hi"),
    whatifStep: byId<HTMLInputElement>("whatif-step"),
    whatifBody: byId("whatif-body"),
    whatifNotice: byId("whatif-notice"),
  };
}

export function tick(ms = 0): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}
