// Boot: load the registry, then re-render every panel from the single
// SelectionState on each event. Presentation-only changes (colorblind
// toggle) re-render without refetching.

import { ApiClient } from "./api.js";
import { initialState, reduce, type AppEvent } from "./state.js";
import type { CommunityRecord, SelectionState } from "./types.js";
import {
  renderBars,
  renderCorrelations,
  renderDotplot,
  renderInfoCard,
  renderMap,
  renderSidePanel,
} from "./render.js";
import {
  barScene,
  correlationScene,
  dotplotScene,
  infoCard,
  mapScene,
} from "./viewmodel.js";
import type { MapPayload } from "./types.js";

interface Panels {
  side: HTMLElement;
  map: HTMLElement;
  info: HTMLElement;
  bars: HTMLElement;
  dotplot: HTMLElement;
  correlations: HTMLElement;
}

function panel(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing panel #${id}`);
  return el;
}

export async function boot(apiBase: string = ""): Promise<void> {
  const api = new ApiClient(apiBase);
  const panels: Panels = {
    side: panel("side-panel"),
    map: panel("map-panel"),
    info: panel("info-card"),
    bars: panel("bars-panel"),
    dotplot: panel("dotplot-panel"),
    correlations: panel("correlations-panel"),
  };

  const registry: CommunityRecord[] = (await api.communities()).communities;
  const known = new Set(registry.map((c) => c.id));
  let state: SelectionState = initialState;
  let lastMap: MapPayload | null = null;

  const dispatch = (event: AppEvent): void => {
    const next = reduce(state, event, known);
    if (next === state) return;
    const dataChanged =
      event.type !== "colorblind_toggle" || state.metric !== next.metric;
    state = next;
    if (event.type === "colorblind_toggle") {
      // palette-only change: redraw from cached payloads, no refetch
      renderSidePanel(panels.side, state, dispatch);
      if (lastMap) renderMap(panels.map, mapScene(state, lastMap), state, dispatch);
      return;
    }
    void refresh(dataChanged);
  };

  const refresh = async (refetch: boolean): Promise<void> => {
    renderSidePanel(panels.side, state, dispatch);
    if (!refetch) return;
    const focusRecord = registry.find((c) => c.id === state.community) ?? null;
    const focus = focusRecord
      ? { urbanicity: focusRecord.urbanicity, region: focusRecord.region }
      : null;
    const [map, bars, dotplot, correlations] = await Promise.all([
      api.map(state),
      api.bars(state),
      api.dotplot(state),
      api.correlations(state, focus),
    ]);
    if (map) {
      lastMap = map;
      renderMap(panels.map, mapScene(state, map), state, dispatch);
      renderInfoCard(panels.info, infoCard(state, registry, map));
    }
    renderBars(panels.bars, bars ? barScene(state, bars) : null, dispatch);
    if (dotplot) renderDotplot(panels.dotplot, dotplotScene(state, dotplot, registry));
    if (correlations) renderCorrelations(panels.correlations, correlationScene(correlations));
  };

  await refresh(true);
}

declare global {
  interface Window {
    ATTACHE_API_BASE?: string;
  }
}

if (typeof document !== "undefined" && document.getElementById("map-panel")) {
  void boot(window.ATTACHE_API_BASE ?? "");
}
