// Single source of truth: every view renders from this state alone.

import type { HighlightLevel, MetricId, SelectionState, Years } from "./types.js";
import { METRICS } from "./types.js";

export type AppEvent =
  | { type: "map_click"; community: string }
  | { type: "bar_click"; level: HighlightLevel }
  | { type: "metric_select"; metric: MetricId }
  | { type: "year_select"; years: Years }
  | { type: "colorblind_toggle" };

// Boot default: attachment composite, all years, nothing selected. The
// highlight level starts at "all" because a community highlight needs a
// community; the first map click switches it to "community".
export const initialState: SelectionState = {
  metric: "community_attachment",
  years: "all",
  community: null,
  highlightLevel: "all",
  colorblind: false,
};

const YEAR_VALUES: Years[] = ["all", "2008", "2009", "2010"];

export type Logger = (message: string) => void;

export function reduce(
  state: SelectionState,
  event: AppEvent,
  knownCommunities: ReadonlySet<string>,
  warn: Logger = (m) => console.warn(m),
): SelectionState {
  switch (event.type) {
    case "map_click":
      if (!knownCommunities.has(event.community)) {
        warn(`ignoring click on unknown community: ${event.community}`);
        return state;
      }
      return { ...state, community: event.community, highlightLevel: "community" };
    case "bar_click":
      if (event.level === "community" && state.community === null) {
        warn("ignoring community highlight: no community selected");
        return state;
      }
      return { ...state, highlightLevel: event.level };
    case "metric_select":
      if (!METRICS.includes(event.metric)) {
        warn(`ignoring unknown metric: ${event.metric}`);
        return state;
      }
      return { ...state, metric: event.metric };
    case "year_select":
      if (!YEAR_VALUES.includes(event.years)) {
        warn(`ignoring unknown year filter: ${event.years}`);
        return state;
      }
      return { ...state, years: event.years };
    case "colorblind_toggle":
      return { ...state, colorblind: !state.colorblind };
  }
}
