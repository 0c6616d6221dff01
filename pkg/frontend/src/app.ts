/**
 * Controller: owns the UiState, drives the three panels (result, chart,
 * what-if) from service responses, and mirrors the state into the URL.
 *
 * Every number shown on screen is taken from a service response; this
 * module only decides *when* to ask and *where* to put the answer.
 */

import { ApiClient, isAbort } from "./api.js";
import { renderChart } from "./chart.js";
import {
  UiState,
  activeInputError,
  encodeState,
  validatePower,
} from "./state.js";
import { AprioriResult, SensitivityResult } from "./types.js";
import { fetchWhatIfRows, whatIfValues } from "./whatif.js";

export const DEBOUNCE_MS = 250;

export function debounce<T extends unknown[]>(
  fn: (...args: T) => void,
  ms: number,
): (...args: T) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: T) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => fn(...args), ms);
  };
}

export interface ResultView {
  text: string;
  warning: string | null;
}

/** The sentence shown is the service's message, verbatim. */
export function resultView(
  result: AprioriResult | SensitivityResult,
): ResultView {
  return {
    text: result.message,
    warning: result.small_sample_flag ? result.warning : null,
  };
}

export interface AppElements {
  modeRadios: HTMLInputElement[];
  alphaRadios: HTMLInputElement[];
  mdesField: HTMLElement;
  mdesInput: HTMLInputElement;
  nField: HTMLElement;
  nInput: HTMLInputElement;
  powerInput: HTMLInputElement;
  inputError: HTMLElement;
  resultText: HTMLElement;
  warningBanner: HTMLElement;
  chartSvg: SVGSVGElement;
  chartFallback: HTMLElement;
  chartRetry: HTMLButtonElement;
  tooltip: HTMLElement;
  whatifPanel: HTMLElement;
  whatifLo: HTMLInputElement;
  whatifHi: HTMLInputElement;
  whatifStep: HTMLInputElement;
  whatifBody: HTMLElement;
  whatifNotice: HTMLElement;
}

export interface AppOptions {
  debounceMs?: number;
  onStateChange?: (query: string) => void;
}

export class App {
  private refreshSoon: () => void;

  constructor(
    private state: UiState,
    private elements: AppElements,
    private client: ApiClient,
    private options: AppOptions = {},
  ) {
    this.refreshSoon = debounce(
      () => void this.refresh(),
      options.debounceMs ?? DEBOUNCE_MS,
    );
    this.bind();
    this.syncControls();
    void this.refresh();
  }

  getState(): UiState {
    return { ...this.state };
  }

  private bind(): void {
    const { elements } = this;
    for (const radio of elements.modeRadios) {
      radio.addEventListener("change", () => {
        if (radio.checked) {
          this.state.mode =
            radio.value === "sensitivity" ? "sensitivity" : "a_priori";
          this.syncControls();
          this.afterChange();
        }
      });
    }
    for (const radio of elements.alphaRadios) {
      radio.addEventListener("change", () => {
        if (radio.checked) {
          this.state.alpha = Number(radio.value) as UiState["alpha"];
          this.afterChange();
        }
      });
    }
    elements.mdesInput.addEventListener("input", () => {
      this.state.mdes = Number(elements.mdesInput.value);
      this.afterChange();
    });
    elements.nInput.addEventListener("input", () => {
      this.state.n = Number(elements.nInput.value);
      this.afterChange();
    });
    elements.powerInput.addEventListener("input", () => {
      const power = Number(elements.powerInput.value);
      if (validatePower(power) === null) {
        this.state.power = power;
        this.afterChange();
      }
    });
    for (const input of [
      elements.whatifLo,
      elements.whatifHi,
      elements.whatifStep,
    ]) {
      input.addEventListener("input", () => this.refreshSoon());
    }
    elements.chartRetry.addEventListener("click", () => void this.refresh());
  }

  /** Mode switch keeps alpha and restores the mode's own input value. */
  private syncControls(): void {
    const { elements, state } = this;
    for (const radio of elements.modeRadios) {
      radio.checked =
        (radio.value === "sensitivity") === (state.mode === "sensitivity");
    }
    for (const radio of elements.alphaRadios) {
      radio.checked = Number(radio.value) === state.alpha;
    }
    elements.mdesInput.value = String(state.mdes);
    elements.nInput.value = String(state.n);
    elements.powerInput.value = String(state.power);
    const aPriori = state.mode === "a_priori";
    elements.mdesField.hidden = !aPriori;
    elements.nField.hidden = aPriori;
    elements.whatifPanel.hidden = !aPriori;
  }

  private afterChange(): void {
    this.options.onStateChange?.(encodeState(this.state));
    const error = activeInputError(this.state);
    this.elements.inputError.textContent = error ?? "";
    if (error === null) this.refreshSoon();
  }

  async refresh(): Promise<void> {
    const error = activeInputError(this.state);
    this.elements.inputError.textContent = error ?? "";
    if (error !== null) return;
    await Promise.all([
      this.refreshResult(),
      this.refreshChart(),
      this.state.mode === "a_priori" ? this.refreshWhatIf() : Promise.resolve(),
    ]);
  }

  private async refreshResult(): Promise<void> {
    const { state, elements } = this;
    try {
      const result =
        state.mode === "a_priori"
          ? await this.client.apriori(state.mdes, state.alpha, state.power)
          : await this.client.sensitivity(state.n, state.alpha, state.power);
      const view = resultView(result);
      elements.resultText.textContent = view.text;
      elements.warningBanner.hidden = view.warning === null;
      elements.warningBanner.textContent = view.warning ?? "";
    } catch (err) {
      if (isAbort(err)) return;
      elements.resultText.textContent =
        "The service could not be reached. Check that it is running.";
      elements.warningBanner.hidden = true;
    }
  }

  private async refreshChart(): Promise<void> {
    const { state, elements } = this;
    try {
      const curve =
        state.mode === "a_priori"
          ? await this.client.curve("apriori", state.alpha, state.power, state.mdes)
          : await this.client.curve("sensitivity", state.alpha, state.power, state.n);
      elements.chartFallback.hidden = true;
      elements.chartSvg.style.display = "";
      renderChart(elements.chartSvg, curve, (point) => {
        if (point === null) {
          elements.tooltip.hidden = true;
          return;
        }
        const labels =
          curve.mode === "a_priori"
            ? (["MDES", "N"] as const)
            : (["N", "MDES"] as const);
        elements.tooltip.hidden = false;
        elements.tooltip.textContent =
          `${labels[0]} ${point[0]}: ${labels[1]} ${point[1]}`;
      });
    } catch (err) {
      if (isAbort(err)) return;
      // degraded mode: keep the page alive, offer a retry
      elements.chartSvg.style.display = "none";
      elements.chartFallback.hidden = false;
      elements.tooltip.hidden = true;
    }
  }

  private async refreshWhatIf(): Promise<void> {
    const { state, elements } = this;
    const plan = whatIfValues(
      Number(elements.whatifLo.value),
      Number(elements.whatifHi.value),
      Number(elements.whatifStep.value),
    );
    elements.whatifNotice.textContent = plan.clamped
      ? "Range clamped to the valid MDES domain (0, 1)."
      : "";
    if (plan.values.length === 0) {
      elements.whatifBody.replaceChildren();
      return;
    }
    try {
      const rows = await fetchWhatIfRows(
        this.client,
        plan.values,
        state.alpha,
        state.power,
      );
      const doc = elements.whatifBody.ownerDocument;
      elements.whatifBody.replaceChildren(
        ...rows.map((row) => {
          const tr = doc.createElement("tr");
          const mdesCell = doc.createElement("td");
          mdesCell.textContent = row.mdes.toFixed(2);
          const nCell = doc.createElement("td");
          nCell.textContent = String(row.n);
          tr.append(mdesCell, nCell);
          return tr;
        }),
      );
    } catch (err) {
      if (isAbort(err)) return;
      elements.whatifBody.replaceChildren();
      elements.whatifNotice.textContent =
        "Could not load the what-if table; adjust the range to retry.";
    }
  }
}
