/**
 * Coverage figure: one line per method across dimension, error bars at
 * plus/minus two Monte Carlo standard errors, and a horizontal reference
 * at the nominal level 1 - alpha.
 */
import { FigureJob, Row, loadCsv, num } from "./csv.js";
import { PALETTE, Svg, linearScale } from "./svg.js";
import { writeImage } from "./write.js";

const WIDTH = 640;
const HEIGHT = 420;
const MARGIN = { left: 64, right: 150, top: 24, bottom: 48 };

export function renderCoverage(job: FigureJob): void {
  const rows = loadCsv("coverage", job.input);
  const methods: string[] = [];
  const byMethod = new Map<string, Row[]>();
  for (const row of rows) {
    const m = row.method;
    if (!byMethod.has(m)) {
      byMethod.set(m, []);
      methods.push(m);
    }
    byMethod.get(m)!.push(row);
  }

  const dims = rows.map((row) => num(row, "d"));
  const level = 1.0 - num(rows[0], "alpha");
  const lows = rows.map((row) => num(row, "coverage") - 2 * num(row, "mc_se"));
  const yMin = Math.min(0.4, ...lows);

  const x = linearScale([Math.min(...dims), Math.max(...dims)], [MARGIN.left, WIDTH - MARGIN.right]);
  const y = linearScale([yMin, 1.0], [HEIGHT - MARGIN.bottom, MARGIN.top]);

  const svg = new Svg(WIDTH, HEIGHT);
  svg.axes(x, y, "dimension d", "empirical coverage");

  // nominal level reference
  svg.line(x.range[0], y(level), x.range[1], y(level), "#888", 1, "5,4");
  svg.text(x.range[1] + 4, y(level) + 3, `1-alpha`, 10);

  methods.forEach((method, k) => {
    const color = PALETTE[k % PALETTE.length];
    const series = byMethod
      .get(method)!
      .slice()
      .sort((a, b) => num(a, "d") - num(b, "d"));
    const points: Array<[number, number]> = [];
    for (const row of series) {
      const px = x(num(row, "d"));
      const cov = num(row, "coverage");
      const se = num(row, "mc_se");
      points.push([px, y(cov)]);
      svg.line(px, y(cov - 2 * se), px, y(cov + 2 * se), color, 1);
      svg.circle(px, y(cov), 3, color, ` data-value="${row.coverage}"`);
    }
    svg.polyline(points, color);
    const ly = MARGIN.top + 16 * k;
    svg.line(WIDTH - MARGIN.right + 12, ly, WIDTH - MARGIN.right + 34, ly, color, 2);
    svg.text(WIDTH - MARGIN.right + 40, ly + 4, method, 11, "start", ' class="legend-entry"');
  });

  writeImage(job.output, svg.render());
}
