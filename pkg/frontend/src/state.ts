/**
 * UI state and the action dispatcher.
 *
 * dispatch() is a pure transition given the engine's responses: the
 * same action log against the same engine reproduces the same final
 * state. Side effects (file download, permalink publication, bookmark
 * persistence) go through the injected effects object so tests can
 * observe them.
 */

import type { BookmarkEntry, EngineClient, Origin } from "./protocol.js";

export interface UiState {
  editorText: string;
  previewHtml: string;
  feedbackMessage: string;
  undoEnabled: boolean;
  redoEnabled: boolean;
  bookmarks: BookmarkEntry[];
  notice: string | null;
}

export type UiAction =
  | { kind: "page_loaded"; seed?: string }
  | { kind: "editor_changed"; text: string }
  | { kind: "random_pressed"; seed?: string }
  | { kind: "undo_pressed" }
  | { kind: "redo_pressed" }
  | { kind: "bookmark_pressed"; label: string }
  | { kind: "save_pressed" }
  | { kind: "share_pressed" }
  | { kind: "permalink_opened"; encoded: string };

export interface UiEffects {
  download(filename: string, bytes: Uint8Array): void;
  publishPermalink(encoded: string): void;
  persistBookmarks(json: string): void;
}

export interface DispatchContext {
  engine: EngineClient;
  effects: UiEffects;
  now(): number;
}

export const NOOP_EFFECTS: UiEffects = {
  download: () => undefined,
  publishPermalink: () => undefined,
  persistBookmarks: () => undefined,
};

export function initialState(): UiState {
  return {
    editorText: "",
    previewHtml: "",
    feedbackMessage: "",
    undoEnabled: false,
    redoEnabled: false,
    bookmarks: [],
    notice: null,
  };
}

/** Preview and feedback always derive from the editor text. */
async function panels(engine: EngineClient, text: string) {
  const measured = await engine.measure(text);
  const validated = await engine.validate(text);
  const lines = [`${measured.bytes} bytes`, ...measured.messages];
  for (const note of validated.diagnostics) {
    lines.push(`note: ${note}`);
  }
  return { editorText: text, previewHtml: text, feedbackMessage: lines.join("\n") };
}

async function commitAndRefresh(
  state: UiState,
  ctx: DispatchContext,
  text: string,
  origin: Origin,
): Promise<UiState> {
  const flags = await ctx.engine.historyCommit(text, origin, ctx.now());
  return {
    ...state,
    ...(await panels(ctx.engine, text)),
    undoEnabled: flags.undoEnabled,
    redoEnabled: flags.redoEnabled,
    notice: null,
  };
}

async function freshGeneration(
  state: UiState,
  ctx: DispatchContext,
  seed: string | undefined,
  origin: Origin,
): Promise<UiState> {
  const generated = await ctx.engine.generate(seed);
  return commitAndRefresh(state, ctx, generated.html, origin);
}

export async function dispatch(state: UiState, action: UiAction, ctx: DispatchContext): Promise<UiState> {
  switch (action.kind) {
    case "page_loaded": {
      await ctx.engine.historyReset();
      const next = await freshGeneration(state, ctx, action.seed, "generated");
      return { ...next, bookmarks: await ctx.engine.bookmarkList() };
    }

    case "editor_changed":
      return commitAndRefresh(state, ctx, action.text, "typed");

    case "random_pressed":
      return freshGeneration(state, ctx, action.seed, "generated");

    case "undo_pressed":
    case "redo_pressed": {
      const step =
        action.kind === "undo_pressed"
          ? await ctx.engine.historyUndo()
          : await ctx.engine.historyRedo();
      if (step.state === null) {
        return { ...state, undoEnabled: step.undoEnabled, redoEnabled: step.redoEnabled };
      }
      return {
        ...state,
        ...(await panels(ctx.engine, step.state.text)),
        undoEnabled: step.undoEnabled,
        redoEnabled: step.redoEnabled,
      };
    }

    case "bookmark_pressed": {
      const result = await ctx.engine.bookmarkAdd(action.label, state.editorText, ctx.now());
      if (result.error !== undefined) {
        return { ...state, notice: `could not bookmark: ${result.error}` };
      }
      ctx.effects.persistBookmarks(await ctx.engine.bookmarksDump());
      return { ...state, bookmarks: result.bookmarks ?? [], notice: null };
    }

    case "save_pressed": {
      const bytes = await ctx.engine.exportHtml(state.editorText);
      ctx.effects.download("artifact.html", bytes);
      return state;
    }

    case "share_pressed": {
      const encoded = await ctx.engine.encodePermalink(state.editorText);
      ctx.effects.publishPermalink(encoded);
      return { ...state, notice: "permalink copied; the page travels in the URL" };
    }

    case "permalink_opened": {
      const bookmarks = await ctx.engine.bookmarkList();
      const decoded = await ctx.engine.decodePermalink(action.encoded);
      if (decoded.error !== undefined || decoded.text === undefined) {
        const next = await freshGeneration(state, ctx, undefined, "generated");
        return { ...next, bookmarks, notice: "that permalink would not open; made you a fresh page instead" };
      }
      const next = await commitAndRefresh(state, ctx, decoded.text, "restored");
      return { ...next, bookmarks };
    }
  }
}
