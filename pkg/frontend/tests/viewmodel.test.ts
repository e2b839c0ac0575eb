// View purity: scene functions are pure over (state, payload), so a
// fixed state plus fixed API fixtures must yield byte-identical scenes
// on every call, and the colorblind toggle may change colors only.

import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { RED_BLUE, RED_GREEN } from "../src/palette.js";
import { initialState } from "../src/state.js";
import type {
  BarsPayload,
  CommunitiesPayload,
  CorrelationsPayload,
  DotplotPayload,
  MapPayload,
  SelectionState,
} from "../src/types.js";
import {
  barScene,
  correlationScene,
  dotplotScene,
  infoCard,
  mapScene,
} from "../src/viewmodel.js";

const fixture = <T>(name: string): T =>
  JSON.parse(readFileSync(new URL(`./fixtures/${name}`, import.meta.url), "utf8"));

const registry = fixture<CommunitiesPayload>("communities.json").communities;
const mapPayload = fixture<MapPayload>("map.json");
const barsPayload = fixture<BarsPayload>("bars.json");
const dotplotPayload = fixture<DotplotPayload>("dotplot.json");
const correlationsPayload = fixture<CorrelationsPayload>("correlations.json");

const state: SelectionState = {
  ...initialState,
  community: "st-paul-mn",
  highlightLevel: "community",
};

describe("scene purity", () => {
  it("map scene is identical across repeated calls", () => {
    const a = mapScene(state, mapPayload);
    const b = mapScene(state, mapPayload);
    expect(JSON.stringify(a)).toBe(JSON.stringify(b));
    expect(a).toEqual(b);
  });

  it("bar, dotplot, correlation, and info-card scenes are identical", () => {
    expect(barScene(state, barsPayload)).toEqual(barScene(state, barsPayload));
    expect(dotplotScene(state, dotplotPayload, registry)).toEqual(
      dotplotScene(state, dotplotPayload, registry),
    );
    expect(correlationScene(correlationsPayload)).toEqual(
      correlationScene(correlationsPayload),
    );
    expect(infoCard(state, registry, mapPayload)).toEqual(
      infoCard(state, registry, mapPayload),
    );
  });

  it("scene computation does not mutate its inputs", () => {
    const before = JSON.stringify(mapPayload);
    mapScene(state, mapPayload);
    mapScene({ ...state, colorblind: true }, mapPayload);
    expect(JSON.stringify(mapPayload)).toBe(before);
  });

  it("map symbols carry the payload's values and one selection ring", () => {
    const scene = mapScene(state, mapPayload);
    expect(scene).toHaveLength(mapPayload.entries.length);
    for (let i = 0; i < scene.length; i++) {
      expect(scene[i].n).toBe(mapPayload.entries[i].n);
      expect(scene[i].mean).toBe(mapPayload.entries[i].mean);
    }
    expect(scene.filter((s) => s.selected).map((s) => s.id)).toEqual(["st-paul-mn"]);
  });

  it("dotplot highlights exactly the highlight set", () => {
    const scene = dotplotScene(state, dotplotPayload, registry);
    const lit = scene.filter((d) => d.highlighted).map((d) => d.id);
    expect(lit).toEqual(["st-paul-mn"]);
  });
});

describe("colorblind toggle", () => {
  it("changes only colors, never data", () => {
    const normal = mapScene(state, mapPayload);
    const cb = mapScene({ ...state, colorblind: true }, mapPayload);

    expect(cb).toHaveLength(normal.length);
    for (let i = 0; i < normal.length; i++) {
      const { color: colorA, ...dataA } = normal[i];
      const { color: colorB, ...dataB } = cb[i];
      expect(dataA).toEqual(dataB);
      if (colorA === null) {
        expect(colorB).toBeNull();
      } else {
        expect(RED_GREEN).toContain(colorA);
        expect(RED_BLUE).toContain(colorB);
      }
    }
  });

  it("leaves every other scene unchanged", () => {
    const cbState = { ...state, colorblind: true };
    expect(barScene(cbState, barsPayload)).toEqual(barScene(state, barsPayload));
    expect(dotplotScene(cbState, dotplotPayload, registry)).toEqual(
      dotplotScene(state, dotplotPayload, registry),
    );
    expect(correlationScene(correlationsPayload)).toEqual(
      correlationScene(correlationsPayload),
    );
  });
});
