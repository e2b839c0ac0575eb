// Reducer replay of the canonical exploration walkthrough: select Saint
// Paul on the map, read its attachment bars, check its correlation
// profile, switch the metric to education, then widen the highlight to
// the region via a bar click. Every step asserts the full state object.

import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { initialState, reduce, type AppEvent } from "../src/state.js";
import { highlightSet } from "../src/selection.js";
import type { CommunitiesPayload, SelectionState } from "../src/types.js";

const fixture = <T>(name: string): T =>
  JSON.parse(readFileSync(new URL(`./fixtures/${name}`, import.meta.url), "utf8"));

const registry = fixture<CommunitiesPayload>("communities.json").communities;
const known = new Set(registry.map((c) => c.id));

function replay(events: AppEvent[], warn?: (m: string) => void): SelectionState[] {
  const states = [initialState];
  for (const event of events) {
    states.push(reduce(states[states.length - 1], event, known, warn ?? (() => {})));
  }
  return states;
}

describe("walkthrough replay", () => {
  it("produces the documented state sequence", () => {
    const states = replay([
      { type: "map_click", community: "st-paul-mn" },
      { type: "metric_select", metric: "education" },
      { type: "bar_click", level: "region" },
    ]);

    expect(states[0]).toEqual({
      metric: "community_attachment",
      years: "all",
      community: null,
      highlightLevel: "all",
      colorblind: false,
    });
    // Map click selects the community and narrows the highlight to it;
    // the attachment bars and correlation panel render from this state
    // without further events.
    expect(states[1]).toEqual({
      ...states[0],
      community: "st-paul-mn",
      highlightLevel: "community",
    });
    // Metric switch keeps the selection and highlight.
    expect(states[2]).toEqual({ ...states[1], metric: "education" });
    // Bar click widens the highlight level only.
    expect(states[3]).toEqual({ ...states[2], highlightLevel: "region" });
  });

  it("expands the documented highlight sets at each step", () => {
    const states = replay([
      { type: "map_click", community: "st-paul-mn" },
      { type: "metric_select", metric: "education" },
      { type: "bar_click", level: "region" },
    ]);
    const focus = registry.find((c) => c.id === "st-paul-mn")!;

    expect(highlightSet(states[0], registry)).toEqual(known);
    expect(highlightSet(states[1], registry)).toEqual(new Set(["st-paul-mn"]));
    expect(highlightSet(states[2], registry)).toEqual(new Set(["st-paul-mn"]));
    expect(highlightSet(states[3], registry)).toEqual(
      new Set(registry.filter((c) => c.region === focus.region).map((c) => c.id)),
    );
  });
});

describe("reducer guards", () => {
  it("ignores clicks on unknown communities with a warning", () => {
    const warnings: string[] = [];
    const next = reduce(
      initialState,
      { type: "map_click", community: "atlantis" },
      known,
      (m) => warnings.push(m),
    );
    expect(next).toEqual(initialState);
    expect(warnings).toHaveLength(1);
  });

  it("ignores a community-level bar click before any community is chosen", () => {
    const warnings: string[] = [];
    const next = reduce(
      initialState,
      { type: "bar_click", level: "community" },
      known,
      (m) => warnings.push(m),
    );
    expect(next).toEqual(initialState);
    expect(warnings).toHaveLength(1);
  });

  it("colorblind toggle flips only the flag", () => {
    const once = reduce(initialState, { type: "colorblind_toggle" }, known);
    expect(once).toEqual({ ...initialState, colorblind: true });
    const twice = reduce(once, { type: "colorblind_toggle" }, known);
    expect(twice).toEqual(initialState);
  });

  it("never mutates the previous state", () => {
    const before = JSON.stringify(initialState);
    reduce(initialState, { type: "map_click", community: "st-paul-mn" }, known);
    expect(JSON.stringify(initialState)).toBe(before);
  });
});
