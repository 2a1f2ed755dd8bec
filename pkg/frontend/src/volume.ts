/**
 * Volume figure: the mean semi-axis ratio across dimension as a single
 * curve with error bars, plus the factor-of-two reference line.
 */
import { FigureJob, loadCsv, num } from "./csv.js";
import { PALETTE, Svg, linearScale } from "./svg.js";
import { writeImage } from "./write.js";

const WIDTH = 560;
const HEIGHT = 400;
const MARGIN = { left: 64, right: 36, top: 24, bottom: 48 };

export function renderVolume(job: FigureJob): void {
  const rows = loadCsv("volume", job.input).slice().sort((a, b) => num(a, "d") - num(b, "d"));
  const dims = rows.map((row) => num(row, "d"));
  const means = rows.map((row) => num(row, "ratio_mean"));
  const ses = rows.map((row) => num(row, "ratio_se"));

  const yLo = Math.min(0.0, ...means.map((m, i) => m - 2 * ses[i]));
  const yHi = Math.max(2.2, ...means.map((m, i) => m + 2 * ses[i]));
  const x = linearScale([Math.min(...dims), Math.max(...dims)], [MARGIN.left, WIDTH - MARGIN.right]);
  const y = linearScale([yLo, yHi], [HEIGHT - MARGIN.bottom, MARGIN.top]);

  const svg = new Svg(WIDTH, HEIGHT);
  svg.axes(x, y, "dimension d", "mean semi-axis ratio");
  svg.line(x.range[0], y(2.0), x.range[1], y(2.0), "#888", 1, "5,4");
  svg.text(x.range[0] + 4, y(2.0) - 5, "factor 2", 10);

  const color = PALETTE[0];
  const points: Array<[number, number]> = [];
  rows.forEach((row, i) => {
    const px = x(dims[i]);
    points.push([px, y(means[i])]);
    svg.line(px, y(means[i] - 2 * ses[i]), px, y(means[i] + 2 * ses[i]), color, 1);
    svg.circle(px, y(means[i]), 3, color, ` data-value="${row.ratio_mean}"`);
  });
  svg.polyline(points, color);

  writeImage(job.output, svg.render());
}
