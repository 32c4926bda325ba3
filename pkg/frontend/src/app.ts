/**
 * DOM shell: three panels (editing, preview, feedback), the control
 * row, and the glue between browser events and dispatched actions.
 *
 * Actions are processed strictly one at a time through a queue, and
 * editor keystrokes are debounced before dispatch so feedback stays
 * near real-time without per-keystroke churn.
 */

import type { EngineClient } from "./protocol.js";
import {
  dispatch,
  initialState,
  type DispatchContext,
  type UiAction,
  type UiEffects,
  type UiState,
} from "./state.js";

/** Must stay at or below the promised feedback latency of 250 ms. */
export const EDITOR_DEBOUNCE_MS = 150;

export const BOOKMARKS_STORAGE_KEY = "pocketforge.bookmarks";

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
  timers: { setTimeout: typeof setTimeout; clearTimeout: typeof clearTimeout } = globalThis,
): (...args: A) => void {
  let handle: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (handle !== undefined) {
      timers.clearTimeout(handle);
    }
    handle = timers.setTimeout(() => fn(...args), waitMs);
  };
}

export interface PanelRefs {
  editor: HTMLTextAreaElement;
  preview: HTMLIFrameElement;
  feedback: HTMLElement;
  randomButton: HTMLButtonElement;
  undoButton: HTMLButtonElement;
  redoButton: HTMLButtonElement;
  bookmarkButton: HTMLButtonElement;
  saveButton: HTMLButtonElement;
  shareButton: HTMLButtonElement;
  bookmarkList: HTMLElement;
  notice: HTMLElement;
}

export function findPanels(doc: Document): PanelRefs {
  const get = <T extends Element>(id: string): T => {
    const node = doc.getElementById(id);
    if (!node) {
      throw new Error(`missing #${id}`);
    }
    return node as unknown as T;
  };
  return {
    editor: get<HTMLTextAreaElement>("editor"),
    preview: get<HTMLIFrameElement>("preview"),
    feedback: get<HTMLElement>("feedback"),
    randomButton: get<HTMLButtonElement>("random"),
    undoButton: get<HTMLButtonElement>("undo"),
    redoButton: get<HTMLButtonElement>("redo"),
    bookmarkButton: get<HTMLButtonElement>("bookmark"),
    saveButton: get<HTMLButtonElement>("save"),
    shareButton: get<HTMLButtonElement>("share"),
    bookmarkList: get<HTMLElement>("bookmarks"),
    notice: get<HTMLElement>("notice"),
  };
}

/** Reflect the state into the panels; scripts stay disabled in the preview. */
export function render(state: UiState, panels: PanelRefs, doc: Document): void {
  if (panels.editor.value !== state.editorText) {
    panels.editor.value = state.editorText;
  }
  if (panels.preview.getAttribute("srcdoc") !== state.previewHtml) {
    panels.preview.setAttribute("srcdoc", state.previewHtml);
  }
  panels.feedback.textContent = state.feedbackMessage;
  panels.undoButton.disabled = !state.undoEnabled;
  panels.redoButton.disabled = !state.redoEnabled;
  panels.bookmarkList.replaceChildren(
    ...state.bookmarks.map((bookmark) => {
      const item = doc.createElement("li");
      item.textContent = bookmark.label;
      item.title = new Date(bookmark.createdAt).toISOString();
      return item;
    }),
  );
  panels.notice.textContent = state.notice ?? "";
  panels.notice.hidden = state.notice === null;
}

export interface AppOptions {
  effects?: Partial<UiEffects>;
  now?: () => number;
  promptLabel?: () => string | null;
}

export interface App {
  submit(action: UiAction): Promise<UiState>;
  state(): UiState;
  panels: PanelRefs;
}

function browserEffects(doc: Document, win: Window): UiEffects {
  return {
    download(filename, bytes) {
      const buffer = new Uint8Array(bytes).buffer as ArrayBuffer;
      const url = URL.createObjectURL(new Blob([buffer], { type: "text/html" }));
      const anchor = doc.createElement("a");
      anchor.href = url;
      anchor.download = filename;
      anchor.click();
      URL.revokeObjectURL(url);
    },
    publishPermalink(encoded) {
      win.location.hash = encoded;
      const url = win.location.href;
      void win.navigator.clipboard?.writeText(url).catch(() => undefined);
    },
    persistBookmarks(json) {
      try {
        win.localStorage.setItem(BOOKMARKS_STORAGE_KEY, json);
      } catch {
        // Storage may be unavailable (private mode); bookmarks stay in-session.
      }
    },
  };
}

export function createApp(doc: Document, engine: EngineClient, options: AppOptions = {}): App {
  const win = doc.defaultView as Window & typeof globalThis;
  const panels = findPanels(doc);
  const effects: UiEffects = { ...browserEffects(doc, win), ...options.effects };
  const ctx: DispatchContext = { engine, effects, now: options.now ?? (() => Date.now()) };

  let state = initialState();
  let queue: Promise<unknown> = Promise.resolve();
  let publishedHash = "";

  // One action at a time: each submission waits for the previous one.
  const submit = (action: UiAction): Promise<UiState> => {
    const step = queue.then(async () => {
      state = await dispatch(state, action, ctx);
      render(state, panels, doc);
      return state;
    });
    queue = step.catch(() => undefined);
    return step;
  };

  const debouncedEdit = debounce((text: string) => {
    void submit({ kind: "editor_changed", text });
  }, EDITOR_DEBOUNCE_MS);

  panels.editor.addEventListener("input", () => debouncedEdit(panels.editor.value));
  panels.randomButton.addEventListener("click", () => void submit({ kind: "random_pressed" }));
  panels.undoButton.addEventListener("click", () => void submit({ kind: "undo_pressed" }));
  panels.redoButton.addEventListener("click", () => void submit({ kind: "redo_pressed" }));
  panels.saveButton.addEventListener("click", () => void submit({ kind: "save_pressed" }));
  panels.shareButton.addEventListener("click", () => {
    publishedHash = "";
    void submit({ kind: "share_pressed" }).then(() => {
      publishedHash = win.location.hash.replace(/^#/, "");
    });
  });
  panels.bookmarkButton.addEventListener("click", () => {
    const ask = options.promptLabel ?? (() => win.prompt("Bookmark label?", "my page"));
    const label = ask();
    if (label !== null) {
      void submit({ kind: "bookmark_pressed", label });
    }
  });
  win.addEventListener("hashchange", () => {
    const encoded = win.location.hash.replace(/^#/, "");
    if (encoded && encoded !== publishedHash) {
      void submit({ kind: "permalink_opened", encoded });
    }
  });

  // Boot: restore persisted bookmarks, then open the permalink from the
  // URL fragment, or generate a fresh page (never a blank canvas).
  const storedBookmarks = (() => {
    try {
      return win.localStorage.getItem(BOOKMARKS_STORAGE_KEY);
    } catch {
      return null;
    }
  })();
  queue = queue.then(async () => {
    if (storedBookmarks) {
      await engine.bookmarksLoad(storedBookmarks);
    }
  });
  const openedHash = win.location.hash.replace(/^#/, "");
  if (openedHash) {
    void submit({ kind: "permalink_opened", encoded: openedHash });
  } else {
    void submit({ kind: "page_loaded" });
  }

  return { submit, state: () => state, panels };
}
