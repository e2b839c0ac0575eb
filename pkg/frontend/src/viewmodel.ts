// Pure scene computation: state + API payloads in, drawable values out.
// No DOM, no hidden view-local state, so identical inputs always yield
// identical scenes (the renderers are thin SVG glue over these).

import { colorFor } from "./palette.js";
import { highlightSet } from "./selection.js";
import type {
  BarsPayload,
  CommunityRecord,
  CorrelationsPayload,
  DotplotPayload,
  MapPayload,
  SelectionState,
} from "./types.js";

export interface MapSymbol {
  id: string;
  label: string;
  latitude: number;
  longitude: number;
  // symbol AREA is proportional to n; radius = sqrt(n) * unit
  radius: number;
  color: string | null; // null -> hollow (no data) with tooltip
  n: number;
  mean: number | null;
  selected: boolean;
}

const MAX_RADIUS = 22;

export function mapScene(
  state: SelectionState,
  payload: MapPayload,
): MapSymbol[] {
  const maxN = Math.max(1, ...payload.entries.map((e) => e.n));
  return payload.entries.map((e) => ({
    id: e.id,
    label: e.display_name,
    latitude: e.latitude,
    longitude: e.longitude,
    radius: Math.sqrt(e.n / maxN) * MAX_RADIUS,
    color: colorFor(e.mean, payload.metric, state.colorblind),
    n: e.n,
    mean: e.mean,
    selected: e.id === state.community,
  }));
}

export interface BarBox {
  label: string;
  level: string;
  mean: number | null;
  display: number | null;
  n: number;
  highlighted: boolean;
}

export function barScene(state: SelectionState, payload: BarsPayload): BarBox[] {
  return payload.bars.map((b) => ({
    label: b.label,
    level: b.level,
    mean: b.mean,
    display: b.mean_display,
    n: b.n,
    highlighted: b.level === state.highlightLevel,
  }));
}

export interface DotMark {
  id: string;
  label: string;
  mean: number | null;
  display: number | null;
  rank: number;
  highlighted: boolean;
}

export function dotplotScene(
  state: SelectionState,
  payload: DotplotPayload,
  registry: CommunityRecord[],
): DotMark[] {
  const lit = highlightSet(state, registry);
  return payload.entries.map((e, i) => ({
    id: e.id,
    label: e.display_name,
    mean: e.mean,
    display: e.mean_display,
    rank: i + 1,
    highlighted: lit.has(e.id),
  }));
}

export interface CorrelationMark {
  metric: string;
  r: number | null;
  reference: number | null;
}

export function correlationScene(payload: CorrelationsPayload): CorrelationMark[] {
  const ref = new Map(payload.reference.map((e) => [e.metric, e.r]));
  return payload.profile.map((e) => ({
    metric: e.metric,
    r: e.r,
    reference: ref.get(e.metric) ?? null,
  }));
}

export interface InfoCard {
  title: string;
  region: string;
  urbanicity: string;
  n: number;
}

export function infoCard(
  state: SelectionState,
  registry: CommunityRecord[],
  map: MapPayload,
): InfoCard | null {
  if (state.community === null) return null;
  const community = registry.find((c) => c.id === state.community);
  const entry = map.entries.find((e) => e.id === state.community);
  if (!community || !entry) return null;
  return {
    title: community.display_name,
    region: community.region,
    urbanicity: community.urbanicity,
    n: entry.n,
  };
}
