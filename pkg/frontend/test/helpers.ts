import { readFileSync, readdirSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { loadPyodide } from "pyodide";

import { DirectEngineClient } from "../src/engine/client.js";
import { PocketforgeCore } from "../src/engine/core.js";

export const FRONTEND_ROOT = join(dirname(fileURLToPath(import.meta.url)), "..");
export const REPO_ROOT = join(FRONTEND_ROOT, "..");

let corePromise: Promise<PocketforgeCore> | undefined;

/** One engine core (pyodide boot is slow) shared across a test file. */
export function sharedCore(): Promise<PocketforgeCore> {
  if (!corePromise) {
    const assetsDir = join(FRONTEND_ROOT, "assets");
    const wheel = readdirSync(assetsDir).find((f) => f.endsWith(".whl"));
    if (!wheel) {
      throw new Error("engine wheel missing; run `npm run wheel`");
    }
    const wheelBytes = new Uint8Array(readFileSync(join(assetsDir, wheel)));
    corePromise = PocketforgeCore.create({ loadPyodide, wheelBytes });
  }
  return corePromise;
}

export async function freshEngine(): Promise<DirectEngineClient> {
  const engine = new DirectEngineClient(await sharedCore());
  await engine.historyReset();
  await engine.bookmarksLoad("[]");
  return engine;
}
