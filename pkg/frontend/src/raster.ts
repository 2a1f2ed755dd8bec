/**
 * Region raster figure: one panel per method, with the confidence-region
 * boundary at each level traced directly from the 0/1 membership grid by
 * marching over cell edges.  No convexity is assumed anywhere; the regions
 * in the split-sample panels genuinely are not convex.
 */
import { FigureJob, Row, SchemaError, loadCsv, num } from "./csv.js";
import { PALETTE, Svg, linearScale } from "./svg.js";
import { writeImage } from "./write.js";

const PANEL = 240;
const MARGIN = { left: 56, right: 16, top: 36, bottom: 48 };
const GAP = 18;

type Segment = [[number, number], [number, number]];

interface Grid {
  t1: number[];
  t2: number[];
  member: Uint8Array; // indexed i * t2.length + j
}

function buildGrid(rows: Row[]): Grid {
  const t1 = [...new Set(rows.map((row) => num(row, "theta1")))].sort((a, b) => a - b);
  const t2 = [...new Set(rows.map((row) => num(row, "theta2")))].sort((a, b) => a - b);
  const index1 = new Map(t1.map((v, i) => [v, i]));
  const index2 = new Map(t2.map((v, j) => [v, j]));
  const member = new Uint8Array(t1.length * t2.length);
  for (const row of rows) {
    const i = index1.get(num(row, "theta1"))!;
    const j = index2.get(num(row, "theta2"))!;
    member[i * t2.length + j] = num(row, "member") ? 1 : 0;
  }
  if (rows.length !== t1.length * t2.length) {
    throw new SchemaError(
      `raster grid is ragged: ${rows.length} rows for a ${t1.length}x${t2.length} grid`,
    );
  }
  return { t1, t2, member };
}

/** March over cell edges: a segment joins the midpoints of every pair of
 * cell edges whose endpoints disagree about membership. */
function contourSegments(grid: Grid): Segment[] {
  const { t1, t2, member } = grid;
  const n2 = t2.length;
  const segments: Segment[] = [];
  const at = (i: number, j: number) => member[i * n2 + j];
  for (let i = 0; i < t1.length - 1; i++) {
    for (let j = 0; j < n2 - 1; j++) {
      const a = at(i, j);
      const b = at(i + 1, j);
      const c = at(i + 1, j + 1);
      const d = at(i, j + 1);
      if (a === b && b === c && c === d) continue;
      const xm = 0.5 * (t1[i] + t1[i + 1]);
      const ym = 0.5 * (t2[j] + t2[j + 1]);
      const crossed: Array<[number, number]> = [];
      if (a !== b) crossed.push([xm, t2[j]]); // south
      if (b !== c) crossed.push([t1[i + 1], ym]); // east
      if (d !== c) crossed.push([xm, t2[j + 1]]); // north
      if (a !== d) crossed.push([t1[i], ym]); // west
      if (crossed.length === 2) {
        segments.push([crossed[0], crossed[1]]);
      } else if (crossed.length === 4) {
        // saddle: resolve with the diagonal pairing
        segments.push([crossed[3], crossed[0]]);
        segments.push([crossed[1], crossed[2]]);
      }
    }
  }
  return segments;
}

export function renderRaster(job: FigureJob): void {
  const rows = loadCsv("raster", job.input);
  const methods: string[] = [];
  const levels: number[] = [];
  const byCell = new Map<string, Row[]>();
  for (const row of rows) {
    if (!methods.includes(row.method)) methods.push(row.method);
    const level = num(row, "level");
    if (!levels.includes(level)) levels.push(level);
    const key = `${row.method}|${level}`;
    if (!byCell.has(key)) byCell.set(key, []);
    byCell.get(key)!.push(row);
  }
  levels.sort((a, b) => b - a); // widest region drawn first

  const all1 = rows.map((row) => num(row, "theta1"));
  const all2 = rows.map((row) => num(row, "theta2"));
  const lo1 = Math.min(...all1), hi1 = Math.max(...all1);
  const lo2 = Math.min(...all2), hi2 = Math.max(...all2);

  const width = MARGIN.left + methods.length * PANEL + (methods.length - 1) * GAP + MARGIN.right;
  const height = MARGIN.top + PANEL + MARGIN.bottom;
  const svg = new Svg(width, height);

  methods.forEach((method, k) => {
    const left = MARGIN.left + k * (PANEL + GAP);
    const x = linearScale([lo1, hi1], [left, left + PANEL]);
    const y = linearScale([lo2, hi2], [MARGIN.top + PANEL, MARGIN.top]);
    if (k === 0) {
      svg.axes(x, y, "theta1", "theta2");
    } else {
      svg.line(left, MARGIN.top + PANEL, left + PANEL, MARGIN.top + PANEL, "#333");
      svg.line(left, MARGIN.top + PANEL, left, MARGIN.top, "#333");
      svg.text(left + PANEL / 2, MARGIN.top + PANEL + 32, "theta1", 12, "middle");
    }
    svg.text(left + PANEL / 2, MARGIN.top - 10, method, 13, "middle", ' class="panel-title"');

    levels.forEach((level, levelIndex) => {
      const rowsForCell = byCell.get(`${method}|${level}`);
      if (rowsForCell === undefined) {
        throw new SchemaError(`missing raster block for method=${method} level=${level}`);
      }
      const grid = buildGrid(rowsForCell);
      const color = PALETTE[levelIndex % PALETTE.length];
      const pieces = contourSegments(grid).map(
        ([[x1, y1], [x2, y2]]) =>
          `M${x(x1).toFixed(2)} ${y(y1).toFixed(2)}L${x(x2).toFixed(2)} ${y(y2).toFixed(2)}`,
      );
      if (pieces.length > 0) {
        svg.raw(`<g class="contour" data-method="${method}" data-level="${level}">`);
        svg.path(pieces.join(""), color);
        svg.raw("</g>");
      }
      if (k === 0) {
        const ly = MARGIN.top + 14 * levelIndex;
        svg.line(8, ly, 26, ly, color, 2);
        svg.text(30, ly + 4, `${Math.round(level * 100)}%`, 10);
      }
    });
  });

  writeImage(job.output, svg.render());
}
