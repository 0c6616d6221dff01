import { ApiClient } from "./api.js";
import { App, AppElements } from "./app.js";
import { decodeState } from "./state.js";

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function radios(name: string): HTMLInputElement[] {
  return Array.from(
    document.querySelectorAll<HTMLInputElement>(`input[name="${name}"]`),
  );
}

const elements: AppElements = {
  modeRadios: radios("mode"),
  alphaRadios: radios("alpha"),
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

new App(
  decodeState(window.location.search),
  elements,
  new ApiClient(""),
  {
    onStateChange: (query) =>
      window.history.replaceState(null, "", `?${query}`),
  },
);
