/** Minimal hand-rolled SVG rendering for the three figure kinds. */

import { ActionHistArrays, ConfigBarsArrays, EvolutionArrays } from "./figures";

const WIDTH = 860;
const HEIGHT = 480;
const MARGIN = { top: 30, right: 30, bottom: 60, left: 90 };
const PALETTE = ["#4269d0", "#efb118", "#ff725c", "#6cc5b0", "#3ca951", "#9498a0"];

const plotW = WIDTH - MARGIN.left - MARGIN.right;
const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function document(body: string[], title: string): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif">`,
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
    `<text x="${WIDTH / 2}" y="20" text-anchor="middle" font-size="15">${esc(title)}</text>`,
    ...body,
    `</svg>`,
    "",
  ].join("\n");
}

function niceTicks(max: number, count = 5): number[] {
  if (max <= 0) return [0];
  const step = max / count;
  const mag = Math.pow(10, Math.floor(Math.log10(step)));
  const norm = step / mag;
  const nice = norm >= 5 ? 10 : norm >= 2 ? 5 : norm >= 1 ? 2 : 1;
  const tick = nice * mag;
  const ticks: number[] = [];
  for (let v = 0; v <= max + 1e-12; v += tick) ticks.push(v);
  return ticks;
}

function yAxis(max: number, label: string, format: (v: number) => string): string[] {
  const parts: string[] = [];
  for (const v of niceTicks(max)) {
    const y = MARGIN.top + plotH - (v / max) * plotH;
    parts.push(
      `<line x1="${MARGIN.left}" y1="${y}" x2="${WIDTH - MARGIN.right}" y2="${y}" stroke="#ddd"/>`,
      `<text x="${MARGIN.left - 8}" y="${y + 4}" text-anchor="end" font-size="11">${format(v)}</text>`,
    );
  }
  parts.push(
    `<text x="18" y="${MARGIN.top + plotH / 2}" font-size="12" text-anchor="middle" transform="rotate(-90 18 ${MARGIN.top + plotH / 2})">${esc(label)}</text>`,
  );
  return parts;
}

const mbps = (v: number) => `${(v / 1e6).toFixed(0)}`;

export function renderEvolution(data: EvolutionArrays): string {
  const n = data.iterations.length;
  const maxY = Math.max(...data.p75, ...data.mean) * 1.05;
  const minX = data.iterations[0];
  const maxX = data.iterations[n - 1];
  const x = (t: number) => MARGIN.left + ((t - minX) / Math.max(1, maxX - minX)) * plotW;
  const y = (v: number) => MARGIN.top + plotH - (v / maxY) * plotH;

  const band: string[] = [];
  for (let i = 0; i < n; i++) band.push(`${x(data.iterations[i])},${y(data.p25[i])}`);
  for (let i = n - 1; i >= 0; i--) band.push(`${x(data.iterations[i])},${y(data.p75[i])}`);
  const line = data.iterations.map((t, i) => `${x(t)},${y(data.mean[i])}`).join(" ");

  const body = [
    ...yAxis(maxY, "min throughput (Mbps)", mbps),
    `<polygon points="${band.join(" ")}" fill="${PALETTE[0]}" opacity="0.25"/>`,
    `<polyline points="${line}" fill="none" stroke="${PALETTE[0]}" stroke-width="1.5"/>`,
    `<line x1="${MARGIN.left}" y1="${MARGIN.top + plotH}" x2="${WIDTH - MARGIN.right}" y2="${MARGIN.top + plotH}" stroke="#333"/>`,
  ];
  for (const t of niceTicks(maxX)) {
    if (t < minX) continue;
    body.push(
      `<text x="${x(t)}" y="${MARGIN.top + plotH + 18}" text-anchor="middle" font-size="11">${t}</text>`,
    );
  }
  body.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${HEIGHT - 12}" text-anchor="middle" font-size="12">iteration</text>`,
  );
  return document(body, "Minimum throughput across seeds (mean, interquartile band)");
}

function groupedBars(
  groups: string[],
  seriesNames: string[],
  values: number[][],
  maxY: number,
  yLabel: string,
  format: (v: number) => string,
  title: string,
): string {
  const body = [...yAxis(maxY, yLabel, format)];
  const groupW = plotW / groups.length;
  const barW = (groupW * 0.8) / seriesNames.length;
  for (let g = 0; g < groups.length; g++) {
    const gx = MARGIN.left + g * groupW;
    for (let s = 0; s < seriesNames.length; s++) {
      const v = values[s][g];
      const h = (v / maxY) * plotH;
      const bx = gx + groupW * 0.1 + s * barW;
      body.push(
        `<rect x="${bx}" y="${MARGIN.top + plotH - h}" width="${barW * 0.92}" height="${h}" fill="${PALETTE[s % PALETTE.length]}"/>`,
      );
    }
    body.push(
      `<text x="${gx + groupW / 2}" y="${MARGIN.top + plotH + 18}" text-anchor="middle" font-size="12">${esc(groups[g])}</text>`,
    );
  }
  for (let s = 0; s < seriesNames.length; s++) {
    const lx = MARGIN.left + 10 + s * 150;
    body.push(
      `<rect x="${lx}" y="${HEIGHT - 22}" width="12" height="12" fill="${PALETTE[s % PALETTE.length]}"/>`,
      `<text x="${lx + 17}" y="${HEIGHT - 12}" font-size="11">${esc(seriesNames[s])}</text>`,
    );
  }
  body.push(
    `<line x1="${MARGIN.left}" y1="${MARGIN.top + plotH}" x2="${WIDTH - MARGIN.right}" y2="${MARGIN.top + plotH}" stroke="#333"/>`,
  );
  return document(body, title);
}

export function renderActionHist(data: ActionHistArrays): string {
  // one series per action, grouped by WLAN
  const values = data.actions.map((_, a) => data.wlans.map((_, w) => data.frequencies[w][a]));
  return groupedBars(
    data.wlans,
    data.actions.map((a) => `action ${a}`),
    values,
    1.0,
    "selection frequency",
    (v) => v.toFixed(2),
    `Action selection over the final ${data.window} iterations`,
  );
}

export function renderConfigBars(data: ConfigBarsArrays): string {
  const maxY = Math.max(...data.values.flat()) * 1.05;
  return groupedBars(
    data.wlans,
    data.series,
    data.values,
    maxY,
    "throughput (Mbps)",
    mbps,
    "Per-WLAN throughput by configuration",
  );
}
