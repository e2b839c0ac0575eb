// Bundled coarse outline of the lower 48 (lon, lat pairs) plus the
// linear projection used for the map panel. No tile service, no geo
// library: the outline is only a backdrop for the 26 community dots.

export const US_OUTLINE: Array<[number, number]> = [
  [-124.7, 48.4], [-123.0, 48.9], [-95.2, 49.0], [-89.5, 48.0],
  [-84.5, 46.5], [-82.5, 45.3], [-82.1, 43.6], [-83.0, 42.0],
  [-79.0, 42.9], [-76.8, 43.6], [-75.0, 44.8], [-71.5, 45.0],
  [-69.2, 47.4], [-66.9, 44.8], [-70.8, 42.7], [-70.0, 41.5],
  [-74.0, 40.5], [-75.5, 38.5], [-76.0, 37.0], [-75.5, 35.2],
  [-78.0, 33.8], [-81.0, 31.5], [-81.5, 30.5], [-80.0, 26.8],
  [-80.5, 25.2], [-81.8, 24.6], [-82.7, 27.5], [-84.0, 30.1],
  [-85.5, 29.8], [-89.0, 29.2], [-91.0, 29.2], [-94.0, 29.5],
  [-97.2, 26.0], [-99.2, 26.5], [-101.5, 29.8], [-103.2, 28.9],
  [-104.5, 29.6], [-106.5, 31.8], [-108.2, 31.8], [-111.0, 31.3],
  [-114.8, 32.5], [-117.1, 32.5], [-118.4, 33.7], [-120.6, 34.6],
  [-122.0, 36.8], [-123.9, 39.5], [-124.4, 43.0],
];

export const MAP_BOUNDS = {
  lonMin: -126,
  lonMax: -66,
  latMin: 24,
  latMax: 50,
};

export function project(
  lon: number,
  lat: number,
  width: number,
  height: number,
): [number, number] {
  const { lonMin, lonMax, latMin, latMax } = MAP_BOUNDS;
  const x = ((lon - lonMin) / (lonMax - lonMin)) * width;
  const y = ((latMax - lat) / (latMax - latMin)) * height;
  return [x, y];
}

export function outlinePath(width: number, height: number): string {
  return (
    US_OUTLINE.map(([lon, lat], i) => {
      const [x, y] = project(lon, lat, width, height);
      return `${i === 0 ? "M" : "L"}${x.toFixed(1)},${y.toFixed(1)}`;
    }).join("") + "Z"
  );
}
