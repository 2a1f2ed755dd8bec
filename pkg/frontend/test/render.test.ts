import { mkdtempSync, readFileSync, statSync, writeFileSync } from "fs";
import { tmpdir } from "os";
import { join } from "path";
import { beforeAll, describe, expect, it } from "vitest";

import { main } from "../src/cli.js";
import { SchemaError, loadCsv } from "../src/csv.js";
import { renderCoverage } from "../src/coverage.js";
import { renderRaster } from "../src/raster.js";
import { renderVolume } from "../src/volume.js";

const DATA = join(__dirname, "..", "testdata");
let outDir: string;

beforeAll(() => {
  outDir = mkdtempSync(join(tmpdir(), "splitcs-figs-"));
});

function renderedSvg(path: string): string {
  expect(statSync(path).size).toBeGreaterThan(0);
  const svg = readFileSync(path, "utf-8");
  expect(svg.startsWith("<svg")).toBe(true);
  return svg;
}

describe("coverage figure", () => {
  it("renders a nonempty image with one legend entry per method", () => {
    const out = join(outDir, "coverage.svg");
    renderCoverage({ kind: "coverage", input: join(DATA, "coverage.csv"), output: out });
    const svg = renderedSvg(out);
    const legends = svg.match(/class="legend-entry"/g) ?? [];
    expect(legends.length).toBe(3);
    for (const method of ["ss", "ss+u", "wald"]) {
      expect(svg).toContain(`>${method}<`);
    }
    // nominal-level reference line present
    expect(svg).toContain("1-alpha");
  });

  it("plots the coverage column verbatim", () => {
    const raw = readFileSync(join(DATA, "coverage.csv"), "utf-8");
    const lines = raw.trim().split("\n");
    const cells = lines[1].split(",");
    cells[7] = "0.8123456789"; // sentinel inside [0,1]
    lines[1] = cells.join(",");
    const input = join(outDir, "sentinel.csv");
    writeFileSync(input, lines.join("\n") + "\n");
    const out = join(outDir, "sentinel.svg");
    renderCoverage({ kind: "coverage", input, output: out });
    expect(renderedSvg(out)).toContain('data-value="0.8123456789"');
  });

  it("rejects a header-only file", () => {
    const input = join(outDir, "header-only.csv");
    writeFileSync(input, "method,d,N,n,alpha,replications,failures,coverage,mc_se\n");
    expect(() => loadCsv("coverage", input)).toThrow(SchemaError);
  });

  it("rejects the wrong schema", () => {
    expect(() =>
      renderCoverage({ kind: "coverage", input: join(DATA, "volume.csv"), output: join(outDir, "x.svg") }),
    ).toThrow(/does not match the coverage schema/);
  });
});

describe("volume figure", () => {
  it("renders with the factor-2 reference", () => {
    const out = join(outDir, "volume.svg");
    renderVolume({ kind: "volume", input: join(DATA, "volume.csv"), output: out });
    const svg = renderedSvg(out);
    expect(svg).toContain("factor 2");
    expect(svg.match(/data-value=/g)?.length).toBe(3);
  });

  it("rejects the wrong schema", () => {
    expect(() =>
      renderVolume({ kind: "volume", input: join(DATA, "qwidth.csv"), output: join(outDir, "x.svg") }),
    ).toThrow(SchemaError);
  });
});

describe("raster figure", () => {
  it("renders one panel per method with nested level contours", () => {
    const out = join(outDir, "raster.svg");
    renderRaster({ kind: "raster", input: join(DATA, "raster.csv"), output: out });
    const svg = renderedSvg(out);
    expect(svg.match(/class="panel-title"/g)?.length).toBe(3);
    const contours = svg.match(/class="contour"/g) ?? [];
    expect(contours.length).toBe(9); // 3 methods x 3 levels
    for (const method of ["asymptotic", "ss", "ss+u"]) {
      expect(svg).toContain(`data-method="${method}"`);
    }
  });

  it("rejects the wrong schema", () => {
    expect(() =>
      renderRaster({ kind: "raster", input: join(DATA, "coverage.csv"), output: join(outDir, "x.svg") }),
    ).toThrow(/does not match the raster schema/);
  });
});

describe("cli", () => {
  it("returns 0 on success", () => {
    const code = main(["coverage", join(DATA, "coverage.csv"), join(outDir, "cli.svg")]);
    expect(code).toBe(0);
    renderedSvg(join(outDir, "cli.svg"));
  });

  it("returns 1 on schema mismatch", () => {
    expect(main(["volume", join(DATA, "coverage.csv"), join(outDir, "bad.svg")])).toBe(1);
  });

  it("returns 1 on a missing input file", () => {
    expect(main(["raster", join(outDir, "nope.csv"), join(outDir, "bad2.svg")])).toBe(1);
  });

  it("returns 2 on bad usage", () => {
    expect(main(["sideways", "a.csv", "b.svg"])).toBe(2);
    expect(main(["coverage"])).toBe(2);
  });
});
