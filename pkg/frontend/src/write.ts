import { mkdirSync, writeFileSync } from "fs";
import { dirname } from "path";

export function writeImage(path: string, svg: string): void {
  mkdirSync(dirname(path), { recursive: true });
  writeFileSync(path, svg, "utf-8");
}
