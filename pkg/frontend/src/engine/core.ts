/**
 * Engine core: boots the Python package inside Pyodide and answers
 * protocol messages. The same class runs inside the browser worker and
 * directly under node (tests), so every rule is exercised against the
 * real engine, not a lookalike.
 */

// Marshalling layer only: all behavior lives in the Python package.
const BRIDGE_SOURCE = `
import base64
import json
import secrets

from pocketforge import (
    EditorState,
    HistoryStack,
    InMemoryBookmarkStore,
    PermalinkDecodeError,
    compare,
    decode_permalink,
    default_reference_pages,
    default_tileset,
    encode_permalink,
    export_html,
    generate,
    measure_size,
    parse_html,
    render_feedback,
    serialize,
    validate_document,
)

_history = HistoryStack()
_bookmarks = InMemoryBookmarkStore()


def _flags():
    return {"undoEnabled": _history.can_undo, "redoEnabled": _history.can_redo}


def _bookmark_entries():
    return [
        {"label": b.label, "text": b.text, "createdAt": b.created_at}
        for b in _bookmarks.list()
    ]


def _bookmarks_file_schema():
    # Same schema the native file store writes, in insertion order.
    return [
        {"label": b.label, "text": b.text, "created_at": b.created_at}
        for b in reversed(_bookmarks.list())
    ]


def handle(op, args_json):
    global _history, _bookmarks
    args = json.loads(args_json)

    if op == "generate":
        seed = int(args["seed"]) if args.get("seed") is not None else secrets.randbits(64)
        html = serialize(generate(default_tileset(), seed))
        return json.dumps({"html": html, "seed": str(seed)})

    if op == "measure":
        report = measure_size(args["text"])
        messages = [render_feedback(compare(report, ref)) for ref in default_reference_pages()]
        return json.dumps({"bytes": report.bytes, "messages": messages})

    if op == "validate":
        result = parse_html(args["text"])
        if not result.ok:
            return json.dumps({"parsed": False, "diagnostics": []})
        notes = [d.message for d in validate_document(result.document)]
        return json.dumps({"parsed": True, "diagnostics": notes})

    if op == "encodePermalink":
        encoded = encode_permalink(EditorState(args["text"])).encoded
        return json.dumps({"encoded": encoded})

    if op == "decodePermalink":
        try:
            state = decode_permalink(args["encoded"])
        except PermalinkDecodeError as err:
            return json.dumps({"error": str(err)})
        return json.dumps({"text": state.source_text})

    if op == "exportHtml":
        payload = export_html(EditorState(args["text"]))
        return json.dumps({"base64": base64.b64encode(payload).decode("ascii")})

    if op == "historyReset":
        _history = HistoryStack()
        return json.dumps(_flags())

    if op == "historyCommit":
        state = EditorState(args["text"], args["origin"])
        _history = _history.commit(state, int(args["nowMs"]))
        return json.dumps(_flags())

    if op in ("historyUndo", "historyRedo"):
        _history, state = _history.undo() if op == "historyUndo" else _history.redo()
        step = None if state is None else {"text": state.source_text, "origin": state.origin}
        return json.dumps({"state": step, **_flags()})

    if op == "bookmarkAdd":
        now_ms = int(args["nowMs"]) if args.get("nowMs") is not None else None
        try:
            _bookmarks.add(args["label"], EditorState(args["text"], "restored"), now_ms=now_ms)
        except ValueError as err:
            return json.dumps({"error": str(err)})
        return json.dumps({"bookmarks": _bookmark_entries()})

    if op == "bookmarkList":
        return json.dumps({"bookmarks": _bookmark_entries()})

    if op == "bookmarksDump":
        return json.dumps({"json": json.dumps(_bookmarks_file_schema())})

    if op == "bookmarksLoad":
        try:
            entries = json.loads(args["json"])
            fresh = InMemoryBookmarkStore()
            for entry in entries:
                fresh.add(entry["label"], EditorState(entry["text"], "restored"),
                          now_ms=int(entry["created_at"]))
        except (ValueError, KeyError, TypeError) as err:
            return json.dumps({"error": str(err)})
        _bookmarks = fresh
        return json.dumps({"bookmarks": _bookmark_entries()})

    raise ValueError(f"unknown op {op!r}")
`;

interface PyodideLike {
  FS: { writeFile(path: string, data: Uint8Array): void };
  runPython(code: string): unknown;
  globals: { get(name: string): (op: string, args: string) => string };
}

export interface CoreOptions {
  loadPyodide: (options?: { indexURL?: string }) => Promise<unknown>;
  wheelBytes: Uint8Array;
  indexURL?: string;
}

export class PocketforgeCore {
  private constructor(private readonly bridge: (op: string, args: string) => string) {}

  static async create(options: CoreOptions): Promise<PocketforgeCore> {
    const pyodide = (await options.loadPyodide(
      options.indexURL ? { indexURL: options.indexURL } : undefined,
    )) as PyodideLike;
    pyodide.FS.writeFile("/tmp/pocketforge.whl", options.wheelBytes);
    pyodide.runPython(`
import site, zipfile
with zipfile.ZipFile("/tmp/pocketforge.whl") as wheel:
    wheel.extractall(site.getsitepackages()[0])
`);
    pyodide.runPython(BRIDGE_SOURCE);
    return new PocketforgeCore(pyodide.globals.get("handle"));
  }

  /** Boot inside the browser worker from assets copied next to the bundle. */
  static async inBrowser(baseUrl: string): Promise<PocketforgeCore> {
    const pyodideModule = await import(/* webpackIgnore: true */ `${baseUrl}pyodide/pyodide.mjs`);
    const wheelResponse = await fetch(`${baseUrl}assets/pocketforge-0.1.0-py3-none-any.whl`);
    if (!wheelResponse.ok) {
      throw new Error(`engine wheel missing (${wheelResponse.status})`);
    }
    return PocketforgeCore.create({
      loadPyodide: pyodideModule.loadPyodide,
      wheelBytes: new Uint8Array(await wheelResponse.arrayBuffer()),
      indexURL: `${baseUrl}pyodide/`,
    });
  }

  async handle(op: string, args: unknown): Promise<unknown> {
    const result = this.bridge(op, JSON.stringify(args ?? {}));
    return JSON.parse(result);
  }
}
