// Shared types mirroring the JSON API payloads (docs/schema/*.json).

export const METRICS = [
  "community_attachment",
  "social_offerings",
  "openness",
  "aesthetics",
  "education",
  "basic_services",
  "leadership",
  "economy",
  "safety",
  "social_capital",
  "civic_involvement",
] as const;

export type MetricId = (typeof METRICS)[number];

export const REGIONS = [
  "great_plains",
  "west",
  "deep_south",
  "southeast",
  "rust_belt",
] as const;

export type RegionId = (typeof REGIONS)[number];

export type Years = "all" | "2008" | "2009" | "2010";

export type HighlightLevel = "community" | "urbanicity" | "region" | "all";

export interface SelectionState {
  metric: MetricId;
  years: Years;
  community: string | null;
  highlightLevel: HighlightLevel;
  colorblind: boolean;
}

export interface CommunityRecord {
  id: string;
  display_name: string;
  region: RegionId;
  urbanicity: string;
  latitude: number;
  longitude: number;
  inferred_region: boolean;
}

export interface SummaryFields {
  mean: number | null;
  mean_display: number | null;
  n: number;
  n_missing: number;
}

export interface MapEntry {
  id: string;
  display_name: string;
  latitude: number;
  longitude: number;
  n: number;
  mean: number | null;
  mean_display: number | null;
  n_metric: number;
  n_missing: number;
}

export interface MapPayload {
  metric: MetricId;
  years: Years;
  entries: MapEntry[];
}

export interface BarEntry extends SummaryFields {
  label: string;
  level: HighlightLevel;
}

export interface BarsPayload {
  community: string;
  metric: MetricId;
  years: Years;
  bars: BarEntry[];
}

export interface DotplotEntry extends SummaryFields {
  id: string;
  display_name: string;
  region: RegionId;
  urbanicity: string;
}

export interface DotplotPayload {
  metric: MetricId;
  years: Years;
  entries: DotplotEntry[];
  omitted: string[];
}

export interface CorrelationEntry {
  metric: MetricId;
  r: number | null;
  r_display: number | null;
  n_pairs: number;
}

export interface CorrelationsPayload {
  level: string;
  id: string | null;
  years: Years;
  profile: CorrelationEntry[];
  reference: CorrelationEntry[];
}

export interface CommunitiesPayload {
  communities: CommunityRecord[];
}

export function metricLabel(metric: MetricId): string {
  return metric
    .split("_")
    .map((w) => w[0].toUpperCase() + w.slice(1))
    .join(" ");
}
