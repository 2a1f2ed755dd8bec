/**
 * Figure renderer entry point:
 *
 *   node dist/cli.js <coverage|volume|raster> <input.csv> <output.svg>
 *
 * Exit 0 on success, 1 on schema mismatch or I/O failure, 2 on bad usage.
 */
import { FigureJob, FigureKind, SCHEMAS, SchemaError } from "./csv.js";
import { renderCoverage } from "./coverage.js";
import { renderRaster } from "./raster.js";
import { renderVolume } from "./volume.js";

const RENDERERS: Record<FigureKind, (job: FigureJob) => void> = {
  coverage: renderCoverage,
  volume: renderVolume,
  raster: renderRaster,
};

export function main(argv: string[]): number {
  const [kind, input, output] = argv;
  if (!kind || !input || !output || !(kind in RENDERERS)) {
    console.error(
      `usage: render <${Object.keys(SCHEMAS).join("|")}> <input.csv> <output.svg>`,
    );
    return 2;
  }
  const job: FigureJob = { kind: kind as FigureKind, input, output };
  try {
    RENDERERS[job.kind](job);
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`render ${kind}: ${err.message}`);
      return 1;
    }
    console.error(`render ${kind}: ${(err as Error).message}`);
    return 1;
  }
  console.log(`${kind}: wrote ${output} from ${input}`);
  return 0;
}

const isDirectRun = process.argv[1]?.endsWith("cli.js");
if (isDirectRun) {
  process.exit(main(process.argv.slice(2)));
}
