/**
 * SVG trade-off chart: monotone curve, dashed crosshair through the
 * reference point, hover/keyboard tooltip.  Geometry is pure so it can
 * be tested without a DOM.
 */

import { CURVE_COLOR, REFERENCE_COLOR, TEXT_COLOR } from "./colors.js";
import { CurveResult } from "./types.js";

export interface PlotBox {
  left: number;
  top: number;
  right: number;
  bottom: number;
}

export interface ChartGeometry {
  width: number;
  height: number;
  box: PlotBox;
  xmin: number;
  xmax: number;
  ymin: number;
  ymax: number;
}

export function geometryFor(
  curve: CurveResult,
  width = 640,
  height = 400,
): ChartGeometry {
  const xs = curve.points.map((p) => p[0]).concat([curve.reference[0]]);
  const ys = curve.points.map((p) => p[1]).concat([curve.reference[1]]);
  let xmin = Math.min(...xs);
  let xmax = Math.max(...xs);
  let ymin = Math.min(...ys);
  let ymax = Math.max(...ys);
  if (xmin === xmax) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymin === ymax) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  return {
    width,
    height,
    box: { left: 64, top: 16, right: width - 16, bottom: height - 48 },
    xmin,
    xmax,
    ymin,
    ymax,
  };
}

export function toPx(
  geom: ChartGeometry,
  x: number,
  y: number,
): [number, number] {
  const { box } = geom;
  const px =
    box.left +
    ((x - geom.xmin) / (geom.xmax - geom.xmin)) * (box.right - box.left);
  const py =
    box.bottom -
    ((y - geom.ymin) / (geom.ymax - geom.ymin)) * (box.bottom - box.top);
  return [px, py];
}

export function fromPxX(geom: ChartGeometry, px: number): number {
  const { box } = geom;
  return (
    geom.xmin + ((px - box.left) / (box.right - box.left)) * (geom.xmax - geom.xmin)
  );
}

/** Index of the curve point whose x is closest to `dataX`. */
export function nearestIndex(curve: CurveResult, dataX: number): number {
  let best = 0;
  let bestDistance = Infinity;
  curve.points.forEach(([x], i) => {
    const d = Math.abs(x - dataX);
    if (d < bestDistance) {
      best = i;
      bestDistance = d;
    }
  });
  return best;
}

export function polylinePoints(curve: CurveResult, geom: ChartGeometry): string {
  return curve.points
    .map(([x, y]) => {
      const [px, py] = toPx(geom, x, y);
      return `${px.toFixed(2)},${py.toFixed(2)}`;
    })
    .join(" ");
}

export interface CrosshairLines {
  vertical: { x1: number; y1: number; x2: number; y2: number };
  horizontal: { x1: number; y1: number; x2: number; y2: number };
}

/** Dashed guide lines from each axis to the reference point. */
export function crosshairLines(
  curve: CurveResult,
  geom: ChartGeometry,
): CrosshairLines {
  const [px, py] = toPx(geom, curve.reference[0], curve.reference[1]);
  return {
    vertical: { x1: px, y1: geom.box.bottom, x2: px, y2: py },
    horizontal: { x1: geom.box.left, y1: py, x2: px, y2: py },
  };
}

export function axisLabels(curve: CurveResult): { x: string; y: string } {
  return curve.mode === "a_priori"
    ? { x: "MDES", y: "Sample size N" }
    : { x: "Sample size N", y: "MDES" };
}

function ticks(lo: number, hi: number, count = 5): number[] {
  return Array.from(
    { length: count },
    (_, i) => lo + (i * (hi - lo)) / (count - 1),
  );
}

function fmt(value: number): string {
  return Number.isInteger(value)
    ? String(value)
    : String(Number(value.toPrecision(3)));
}

const SVG_NS = "http://www.w3.org/2000/svg";

function el(
  doc: Document,
  tag: string,
  attrs: Record<string, string>,
  text?: string,
): Element {
  const node = doc.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  if (text !== undefined) node.textContent = text;
  return node;
}

export interface TooltipHandler {
  (point: [number, number] | null): void;
}

/**
 * Render the curve into `svg` (replacing its contents).  Hovering or
 * arrow-key navigation highlights the nearest point and reports it to
 * `onTooltip`; the tooltip text itself shows the service's numbers.
 */
export function renderChart(
  svg: SVGSVGElement,
  curve: CurveResult,
  onTooltip: TooltipHandler,
): void {
  const doc = svg.ownerDocument;
  const geom = geometryFor(curve);
  svg.setAttribute("viewBox", `0 0 ${geom.width} ${geom.height}`);
  svg.replaceChildren();

  const { box } = geom;
  svg.appendChild(
    el(doc, "rect", {
      x: String(box.left),
      y: String(box.top),
      width: String(box.right - box.left),
      height: String(box.bottom - box.top),
      fill: "none",
      stroke: TEXT_COLOR,
    }),
  );

  for (const tx of ticks(geom.xmin, geom.xmax)) {
    const [px] = toPx(geom, tx, geom.ymin);
    svg.appendChild(
      el(doc, "line", {
        x1: px.toFixed(2),
        y1: String(box.bottom),
        x2: px.toFixed(2),
        y2: String(box.bottom + 5),
        stroke: TEXT_COLOR,
      }),
    );
    svg.appendChild(
      el(
        doc,
        "text",
        {
          x: px.toFixed(2),
          y: String(box.bottom + 18),
          "text-anchor": "middle",
          "font-size": "11",
          fill: TEXT_COLOR,
        },
        fmt(tx),
      ),
    );
  }
  for (const ty of ticks(geom.ymin, geom.ymax)) {
    const [, py] = toPx(geom, geom.xmin, ty);
    svg.appendChild(
      el(doc, "line", {
        x1: String(box.left - 5),
        y1: py.toFixed(2),
        x2: String(box.left),
        y2: py.toFixed(2),
        stroke: TEXT_COLOR,
      }),
    );
    svg.appendChild(
      el(
        doc,
        "text",
        {
          x: String(box.left - 8),
          y: (py + 4).toFixed(2),
          "text-anchor": "end",
          "font-size": "11",
          fill: TEXT_COLOR,
        },
        fmt(ty),
      ),
    );
  }

  const labels = axisLabels(curve);
  svg.appendChild(
    el(
      doc,
      "text",
      {
        x: String((box.left + box.right) / 2),
        y: String(geom.height - 10),
        "text-anchor": "middle",
        "font-size": "12",
        fill: TEXT_COLOR,
        class: "axis-x",
      },
      labels.x,
    ),
  );
  svg.appendChild(
    el(
      doc,
      "text",
      {
        x: "16",
        y: String((box.top + box.bottom) / 2),
        "text-anchor": "middle",
        "font-size": "12",
        fill: TEXT_COLOR,
        transform: `rotate(-90 16 ${(box.top + box.bottom) / 2})`,
        class: "axis-y",
      },
      labels.y,
    ),
  );

  const cross = crosshairLines(curve, geom);
  for (const [cls, line] of [
    ["crosshair-v", cross.vertical],
    ["crosshair-h", cross.horizontal],
  ] as const) {
    svg.appendChild(
      el(doc, "line", {
        x1: line.x1.toFixed(2),
        y1: line.y1.toFixed(2),
        x2: line.x2.toFixed(2),
        y2: line.y2.toFixed(2),
        stroke: REFERENCE_COLOR,
        "stroke-width": "1.5",
        "stroke-dasharray": "6 4",
        class: cls,
      }),
    );
  }

  svg.appendChild(
    el(doc, "polyline", {
      points: polylinePoints(curve, geom),
      fill: "none",
      stroke: CURVE_COLOR,
      "stroke-width": "2",
      class: "curve",
    }),
  );

  const [refPx, refPy] = toPx(geom, curve.reference[0], curve.reference[1]);
  svg.appendChild(
    el(doc, "circle", {
      cx: refPx.toFixed(2),
      cy: refPy.toFixed(2),
      r: "4",
      fill: REFERENCE_COLOR,
      class: "reference-dot",
    }),
  );

  const marker = el(doc, "circle", {
    r: "4.5",
    fill: "none",
    stroke: TEXT_COLOR,
    "stroke-width": "1.5",
    visibility: "hidden",
    class: "hover-dot",
  });
  svg.appendChild(marker);

  let hoverIndex: number | null = null;
  const showIndex = (index: number | null) => {
    hoverIndex = index;
    if (index === null) {
      marker.setAttribute("visibility", "hidden");
      onTooltip(null);
      return;
    }
    const [x, y] = curve.points[index];
    const [px, py] = toPx(geom, x, y);
    marker.setAttribute("cx", px.toFixed(2));
    marker.setAttribute("cy", py.toFixed(2));
    marker.setAttribute("visibility", "visible");
    onTooltip([x, y]);
  };

  svg.onmousemove = (event) => {
    const rect = svg.getBoundingClientRect();
    const scale = geom.width / rect.width;
    const px = (event.clientX - rect.left) * scale;
    showIndex(nearestIndex(curve, fromPxX(geom, px)));
  };
  svg.onmouseleave = () => showIndex(null);
  svg.onkeydown = (event) => {
    if (event.key === "ArrowRight" || event.key === "ArrowLeft") {
      const delta = event.key === "ArrowRight" ? 1 : -1;
      const next =
        hoverIndex === null
          ? nearestIndex(curve, curve.reference[0])
          : Math.min(Math.max(hoverIndex + delta, 0), curve.points.length - 1);
      showIndex(next);
      event.preventDefault();
    } else if (event.key === "Escape") {
      showIndex(null);
    }
  };
}
