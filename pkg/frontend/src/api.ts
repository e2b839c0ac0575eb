// Typed fetch wrapper with a stale-response guard: each logical view
// tracks a sequence number, and responses that arrive after a newer
// request was issued are dropped so they can never overwrite fresher
// data.

import type {
  BarsPayload,
  CommunitiesPayload,
  CorrelationsPayload,
  DotplotPayload,
  MapPayload,
  SelectionState,
} from "./types.js";

export class ApiClient {
  private seq: Record<string, number> = {};

  constructor(private baseUrl: string = "") {}

  private async get<T>(path: string): Promise<T> {
    const res = await fetch(this.baseUrl + path);
    if (!res.ok) {
      const body = await res.json().catch(() => ({}));
      throw new Error(`${res.status} ${body.code ?? ""}: ${body.message ?? path}`);
    }
    return res.json() as Promise<T>;
  }

  // Returns null when a newer request for the same channel superseded
  // this one while it was in flight.
  async latest<T>(channel: string, path: string): Promise<T | null> {
    const ticket = (this.seq[channel] ?? 0) + 1;
    this.seq[channel] = ticket;
    const payload = await this.get<T>(path);
    return this.seq[channel] === ticket ? payload : null;
  }

  communities(): Promise<CommunitiesPayload> {
    return this.get("/api/communities");
  }

  map(state: SelectionState): Promise<MapPayload | null> {
    return this.latest("map", `/api/map?metric=${state.metric}&years=${state.years}`);
  }

  bars(state: SelectionState): Promise<BarsPayload | null> {
    if (state.community === null) return Promise.resolve(null);
    return this.latest(
      "bars",
      `/api/bars?community=${state.community}&metric=${state.metric}&years=${state.years}`,
    );
  }

  dotplot(state: SelectionState): Promise<DotplotPayload | null> {
    return this.latest(
      "dotplot",
      `/api/dotplot?metric=${state.metric}&years=${state.years}`,
    );
  }

  // focus carries the selected community's urbanicity label and region
  // slug (from the registry payload) for the group-level scopes.
  correlations(
    state: SelectionState,
    focus: { urbanicity: string; region: string } | null,
  ): Promise<CorrelationsPayload | null> {
    let scope = "level=all";
    if (state.community !== null && state.highlightLevel !== "all" && focus) {
      if (state.highlightLevel === "community") {
        scope = `level=community&id=${state.community}`;
      } else {
        const key =
          state.highlightLevel === "urbanicity" ? focus.urbanicity : focus.region;
        scope = `level=${state.highlightLevel}&id=${encodeURIComponent(key)}`;
      }
    }
    return this.latest(
      "correlations",
      `/api/correlations?${scope}&years=${state.years}`,
    );
  }
}
