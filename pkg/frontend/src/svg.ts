/** Minimal SVG scene builder: linear scales, axes, and shape helpers. */

export interface Scale {
  (value: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  scale.domain = domain;
  scale.range = range;
  return scale;
}

export function ticks(lo: number, hi: number, count = 5): number[] {
  const span = hi - lo || 1;
  const rawStep = span / count;
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => span / s <= count) ?? mag * 10;
  const start = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let v = start; v <= hi + 1e-12; v += step) out.push(Number(v.toFixed(12)));
  return out;
}

const fmt = (x: number) => (Math.abs(x) >= 1000 ? x.toFixed(0) : x.toPrecision(3)).replace(/\.?0+$/, "");

export class Svg {
  private parts: string[] = [];

  constructor(readonly width: number, readonly height: number) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
        `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
      `<rect width="${width}" height="${height}" fill="white"/>`,
    );
  }

  raw(fragment: string): void {
    this.parts.push(fragment);
  }

  line(x1: number, y1: number, x2: number, y2: number, stroke: string, width = 1, dash = ""): void {
    const dashAttr = dash ? ` stroke-dasharray="${dash}"` : "";
    this.parts.push(
      `<line x1="${r(x1)}" y1="${r(y1)}" x2="${r(x2)}" y2="${r(y2)}" stroke="${stroke}" stroke-width="${width}"${dashAttr}/>`,
    );
  }

  circle(cx: number, cy: number, radius: number, fill: string, extra = ""): void {
    this.parts.push(`<circle cx="${r(cx)}" cy="${r(cy)}" r="${radius}" fill="${fill}"${extra}/>`);
  }

  polyline(points: Array<[number, number]>, stroke: string, width = 1.5): void {
    const text = points.map(([x, y]) => `${r(x)},${r(y)}`).join(" ");
    this.parts.push(`<polyline points="${text}" fill="none" stroke="${stroke}" stroke-width="${width}"/>`);
  }

  path(d: string, stroke: string, width = 1.2): void {
    this.parts.push(`<path d="${d}" fill="none" stroke="${stroke}" stroke-width="${width}"/>`);
  }

  text(x: number, y: number, content: string, size = 11, anchor = "start", extra = ""): void {
    this.parts.push(
      `<text x="${r(x)}" y="${r(y)}" font-size="${size}" text-anchor="${anchor}"${extra}>${escapeXml(content)}</text>`,
    );
  }

  axes(xScale: Scale, yScale: Scale, xLabel: string, yLabel: string): void {
    const [x0, x1] = xScale.range;
    const [y0, y1] = yScale.range; // y0 is the bottom (larger pixel value)
    this.line(x0, y0, x1, y0, "#333");
    this.line(x0, y0, x0, y1, "#333");
    for (const t of ticks(xScale.domain[0], xScale.domain[1])) {
      const px = xScale(t);
      this.line(px, y0, px, y0 + 4, "#333");
      this.text(px, y0 + 16, fmt(t), 10, "middle");
    }
    for (const t of ticks(yScale.domain[0], yScale.domain[1])) {
      const py = yScale(t);
      this.line(x0 - 4, py, x0, py, "#333");
      this.text(x0 - 7, py + 3, fmt(t), 10, "end");
    }
    this.text((x0 + x1) / 2, y0 + 32, xLabel, 12, "middle");
    this.text(x0 - 38, (y0 + y1) / 2, yLabel, 12, "middle", ` transform="rotate(-90 ${r(x0 - 38)} ${r((y0 + y1) / 2)})"`);
  }

  render(): string {
    return this.parts.join("\n") + "\n</svg>\n";
  }
}

function r(x: number): string {
  return Number.isInteger(x) ? String(x) : x.toFixed(2);
}

function escapeXml(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];
