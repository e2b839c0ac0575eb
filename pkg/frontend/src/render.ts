// Thin SVG/DOM glue over the pure viewmodel scenes. All data values are
// computed upstream; this module only draws and wires click dispatch.

import { outlinePath, project } from "./basemap.js";
import { ramp, scaleBounds } from "./palette.js";
import type { AppEvent } from "./state.js";
import type { HighlightLevel, MetricId, SelectionState, Years } from "./types.js";
import { METRICS, metricLabel } from "./types.js";
import type {
  BarBox,
  CorrelationMark,
  DotMark,
  InfoCard,
  MapSymbol,
} from "./viewmodel.js";

export type Dispatch = (event: AppEvent) => void;

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

function clear(el: Element): void {
  while (el.firstChild) el.removeChild(el.firstChild);
}

export function renderMap(
  container: HTMLElement,
  symbols: MapSymbol[],
  state: SelectionState,
  dispatch: Dispatch,
): void {
  const width = 640;
  const height = 400;
  clear(container);
  const svg = svgEl("svg", {
    viewBox: `0 0 ${width} ${height}`,
    width: "100%",
    "data-panel": "map",
  });
  svg.appendChild(
    svgEl("path", { d: outlinePath(width, height), fill: "#f2f0eb", stroke: "#999" }),
  );
  for (const s of symbols) {
    const [x, y] = project(s.longitude, s.latitude, width, height);
    const circle = svgEl("circle", {
      cx: x,
      cy: y,
      r: Math.max(3, s.radius),
      fill: s.color ?? "none",
      stroke: s.selected ? "#000" : "#555",
      "stroke-width": s.selected ? 2.5 : 0.8,
      "data-community": s.id,
      "data-n": s.n,
      "data-mean": s.mean ?? "",
      cursor: "pointer",
    });
    const tip = s.color === null ? `${s.label}: no data` : `${s.label}: ${s.mean?.toFixed(2)} (n=${s.n})`;
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = tip;
    circle.appendChild(title);
    circle.addEventListener("click", () =>
      dispatch({ type: "map_click", community: s.id }),
    );
    svg.appendChild(circle);
  }
  container.appendChild(svg);
  renderLegend(container, state);
}

function renderLegend(container: HTMLElement, state: SelectionState): void {
  const legend = document.createElement("div");
  legend.className = "legend";
  legend.dataset.colorblind = String(state.colorblind);
  for (const color of ramp(state.colorblind)) {
    const chip = document.createElement("span");
    chip.className = "chip";
    chip.style.background = color;
    legend.appendChild(chip);
  }
  const [lo, hi] = scaleBounds(state.metric);
  const note = document.createElement("span");
  note.textContent = ` ${lo} to ${hi}`;
  legend.appendChild(note);
  container.appendChild(legend);
}

export function renderBars(
  container: HTMLElement,
  bars: BarBox[] | null,
  dispatch: Dispatch,
): void {
  clear(container);
  if (bars === null) {
    container.appendChild(placeholder("click a community on the map"));
    return;
  }
  const maxMean = Math.max(0.001, ...bars.map((b) => b.mean ?? 0));
  for (const bar of bars) {
    const row = document.createElement("div");
    row.className = "bar-row" + (bar.highlighted ? " highlighted" : "");
    row.dataset.level = bar.level;
    row.dataset.mean = bar.mean === null ? "" : String(bar.mean);
    row.style.cursor = "pointer";
    row.addEventListener("click", () =>
      dispatch({ type: "bar_click", level: bar.level as HighlightLevel }),
    );
    const label = document.createElement("span");
    label.className = "bar-label";
    label.textContent = bar.label;
    const fill = document.createElement("span");
    fill.className = "bar-fill";
    if (bar.mean === null) {
      fill.classList.add("no-data");
      fill.textContent = "no data";
    } else {
      fill.style.width = `${((bar.mean / maxMean) * 100).toFixed(1)}%`;
      fill.textContent = bar.display?.toFixed(2) ?? "";
    }
    row.append(label, fill);
    container.appendChild(row);
  }
}

export function renderDotplot(container: HTMLElement, dots: DotMark[]): void {
  clear(container);
  if (dots.length === 0) {
    container.appendChild(placeholder("no data for this selection"));
    return;
  }
  const width = 360;
  const rowH = 14;
  const height = dots.length * rowH + 10;
  const svg = svgEl("svg", { viewBox: `0 0 ${width} ${height}`, width: "100%", "data-panel": "dotplot" });
  const means = dots.map((d) => d.mean ?? 0);
  const lo = Math.min(...means);
  const hi = Math.max(...means);
  const x = (v: number) => 120 + ((v - lo) / Math.max(1e-9, hi - lo)) * (width - 150);
  dots.forEach((dot, i) => {
    const y = i * rowH + rowH;
    const label = svgEl("text", { x: 0, y, "font-size": 10, fill: dot.highlighted ? "#000" : "#888" });
    label.textContent = dot.label;
    svg.appendChild(label);
    svg.appendChild(
      svgEl("circle", {
        cx: x(dot.mean ?? lo),
        cy: y - 3,
        r: dot.highlighted ? 5 : 3,
        fill: dot.highlighted ? "#e6550d" : "#bbb",
        "data-community": dot.id,
        "data-highlighted": String(dot.highlighted),
        "data-mean": dot.mean ?? "",
      }),
    );
  });
  container.appendChild(svg);
}

export function renderCorrelations(
  container: HTMLElement,
  marks: CorrelationMark[],
): void {
  clear(container);
  if (marks.length === 0) {
    container.appendChild(placeholder("no data for this selection"));
    return;
  }
  const width = 360;
  const rowH = 18;
  const height = marks.length * rowH + 10;
  const svg = svgEl("svg", { viewBox: `0 0 ${width} ${height}`, width: "100%", "data-panel": "correlations" });
  const x = (r: number) => 140 + ((r + 1) / 2) * (width - 160);
  svg.appendChild(
    svgEl("line", { x1: x(0), y1: 0, x2: x(0), y2: height, stroke: "#ddd" }),
  );
  marks.forEach((mark, i) => {
    const y = i * rowH + rowH;
    const label = svgEl("text", { x: 0, y, "font-size": 10 });
    label.textContent = metricLabel(mark.metric as MetricId);
    svg.appendChild(label);
    if (mark.reference !== null) {
      svg.appendChild(
        svgEl("circle", { cx: x(mark.reference), cy: y - 4, r: 3, fill: "#bbb", "data-role": "reference" }),
      );
    }
    if (mark.r !== null) {
      svg.appendChild(
        svgEl("circle", { cx: x(mark.r), cy: y - 4, r: 4.5, fill: "#3182bd", "data-role": "selection", "data-r": mark.r }),
      );
    }
  });
  container.appendChild(svg);
}

export function renderInfoCard(container: HTMLElement, card: InfoCard | null): void {
  clear(container);
  if (card === null) return;
  const title = document.createElement("strong");
  title.textContent = card.title;
  const body = document.createElement("div");
  body.textContent = `${regionLabel(card.region)} · ${card.urbanicity} · ${card.n} surveys`;
  container.append(title, body);
}

function regionLabel(slug: string): string {
  return slug.split("_").map((w) => w[0].toUpperCase() + w.slice(1)).join(" ");
}

export function renderSidePanel(
  container: HTMLElement,
  state: SelectionState,
  dispatch: Dispatch,
): void {
  clear(container);

  const metricSelect = document.createElement("select");
  metricSelect.id = "metric-select";
  for (const metric of METRICS) {
    const option = document.createElement("option");
    option.value = metric;
    option.textContent = metricLabel(metric);
    option.selected = metric === state.metric;
    metricSelect.appendChild(option);
  }
  metricSelect.addEventListener("change", () =>
    dispatch({ type: "metric_select", metric: metricSelect.value as MetricId }),
  );

  const yearGroup = document.createElement("div");
  yearGroup.id = "year-select";
  for (const years of ["all", "2008", "2009", "2010"] as Years[]) {
    const button = document.createElement("button");
    button.textContent = years === "all" ? "All years" : years;
    button.dataset.years = years;
    button.className = years === state.years ? "active" : "";
    button.addEventListener("click", () => dispatch({ type: "year_select", years }));
    yearGroup.appendChild(button);
  }

  const toggleLabel = document.createElement("label");
  const toggle = document.createElement("input");
  toggle.type = "checkbox";
  toggle.id = "colorblind-toggle";
  toggle.checked = state.colorblind;
  toggle.addEventListener("change", () => dispatch({ type: "colorblind_toggle" }));
  toggleLabel.append(toggle, document.createTextNode(" colorblind-friendly colors"));

  container.append(metricSelect, yearGroup, toggleLabel);
}

function placeholder(text: string): HTMLElement {
  const div = document.createElement("div");
  div.className = "placeholder";
  div.textContent = text;
  return div;
}
