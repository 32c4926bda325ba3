/**
 * Message protocol between the UI and the engine core.
 *
 * The engine is the Python package compiled to WebAssembly; it runs in
 * a web worker in the browser and in-process under node for tests. The
 * UI never re-implements engine rules, it only sends these messages.
 */

export type Origin = "typed" | "generated" | "restored";

export interface BookmarkEntry {
  label: string;
  text: string;
  createdAt: number;
}

export interface HistoryFlags {
  undoEnabled: boolean;
  redoEnabled: boolean;
}

export interface HistoryStep extends HistoryFlags {
  state: { text: string; origin: Origin } | null;
}

export interface GenerateResult {
  html: string;
  seed: string; // decimal string; 64-bit seeds overflow JS numbers
}

export interface MeasureResult {
  bytes: number;
  messages: string[];
}

export interface ValidateResult {
  parsed: boolean;
  diagnostics: string[];
}

/** Typed surface the UI programs against. */
export interface EngineClient {
  generate(seed?: string): Promise<GenerateResult>;
  measure(text: string): Promise<MeasureResult>;
  validate(text: string): Promise<ValidateResult>;
  encodePermalink(text: string): Promise<string>;
  decodePermalink(encoded: string): Promise<{ text?: string; error?: string }>;
  exportHtml(text: string): Promise<Uint8Array>;
  historyReset(): Promise<void>;
  historyCommit(text: string, origin: Origin, nowMs: number): Promise<HistoryFlags>;
  historyUndo(): Promise<HistoryStep>;
  historyRedo(): Promise<HistoryStep>;
  bookmarkAdd(label: string, text: string, nowMs?: number): Promise<{ bookmarks?: BookmarkEntry[]; error?: string }>;
  bookmarkList(): Promise<BookmarkEntry[]>;
  bookmarksDump(): Promise<string>;
  bookmarksLoad(json: string): Promise<BookmarkEntry[]>;
}

export interface EngineRequest {
  id: number;
  op: string;
  args: unknown;
}

export type EngineResponse =
  | { id: number; ok: true; result: unknown }
  | { id: number; ok: false; error: string };
