// 5-step sequential ramps anchored at each metric's scale bounds.
// Default runs red (low) to green (high); the colorblind-friendly
// alternative swaps the green end for blue.

import type { MetricId } from "./types.js";

export const RED_GREEN = ["#d73027", "#fc8d59", "#fee08b", "#91cf60", "#1a9850"];
export const RED_BLUE = ["#ca0020", "#f4a582", "#f7f7f7", "#92c5de", "#0571b0"];

export function ramp(colorblind: boolean): string[] {
  return colorblind ? RED_BLUE : RED_GREEN;
}

export function scaleBounds(metric: MetricId): [number, number] {
  return metric === "community_attachment" ? [1, 5] : [1, 3];
}

export function colorFor(
  value: number | null,
  metric: MetricId,
  colorblind: boolean,
): string | null {
  if (value === null) return null;
  const [lo, hi] = scaleBounds(metric);
  const steps = ramp(colorblind);
  const t = (value - lo) / (hi - lo);
  const idx = Math.min(steps.length - 1, Math.max(0, Math.floor(t * steps.length)));
  return steps[idx];
}
