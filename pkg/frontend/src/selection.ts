// Client-side expansion of the highlight level into a community-id set,
// computed from the registry payload so the dot plot can highlight
// without another round trip.

import type { CommunityRecord, SelectionState } from "./types.js";

export function highlightSet(
  state: SelectionState,
  registry: CommunityRecord[],
): Set<string> {
  const all = new Set(registry.map((c) => c.id));
  if (state.highlightLevel === "all" || state.community === null) {
    return state.highlightLevel === "all" ? all : new Set();
  }
  const focus = registry.find((c) => c.id === state.community);
  if (!focus) return new Set();
  switch (state.highlightLevel) {
    case "community":
      return new Set([focus.id]);
    case "urbanicity":
      return new Set(
        registry.filter((c) => c.urbanicity === focus.urbanicity).map((c) => c.id),
      );
    case "region":
      return new Set(
        registry.filter((c) => c.region === focus.region).map((c) => c.id),
      );
  }
}
