/**
 * EngineClient implementations: one speaking to the worker over
 * postMessage (browser), one wrapping the core in-process (node tests).
 */

import type {
  BookmarkEntry,
  EngineClient,
  EngineRequest,
  EngineResponse,
  GenerateResult,
  HistoryFlags,
  HistoryStep,
  MeasureResult,
  Origin,
  ValidateResult,
} from "../protocol.js";
import type { PocketforgeCore } from "./core.js";

function base64ToBytes(base64: string): Uint8Array {
  const binary = atob(base64);
  const bytes = new Uint8Array(binary.length);
  for (let i = 0; i < binary.length; i += 1) {
    bytes[i] = binary.charCodeAt(i);
  }
  return bytes;
}

/** Shared op-to-method mapping over any request transport. */
abstract class BaseEngineClient implements EngineClient {
  protected abstract request(op: string, args?: unknown): Promise<unknown>;

  async generate(seed?: string): Promise<GenerateResult> {
    return (await this.request("generate", seed === undefined ? {} : { seed })) as GenerateResult;
  }

  async measure(text: string): Promise<MeasureResult> {
    return (await this.request("measure", { text })) as MeasureResult;
  }

  async validate(text: string): Promise<ValidateResult> {
    return (await this.request("validate", { text })) as ValidateResult;
  }

  async encodePermalink(text: string): Promise<string> {
    const result = (await this.request("encodePermalink", { text })) as { encoded: string };
    return result.encoded;
  }

  async decodePermalink(encoded: string): Promise<{ text?: string; error?: string }> {
    return (await this.request("decodePermalink", { encoded })) as { text?: string; error?: string };
  }

  async exportHtml(text: string): Promise<Uint8Array> {
    const result = (await this.request("exportHtml", { text })) as { base64: string };
    return base64ToBytes(result.base64);
  }

  async historyReset(): Promise<void> {
    await this.request("historyReset");
  }

  async historyCommit(text: string, origin: Origin, nowMs: number): Promise<HistoryFlags> {
    return (await this.request("historyCommit", { text, origin, nowMs })) as HistoryFlags;
  }

  async historyUndo(): Promise<HistoryStep> {
    return (await this.request("historyUndo")) as HistoryStep;
  }

  async historyRedo(): Promise<HistoryStep> {
    return (await this.request("historyRedo")) as HistoryStep;
  }

  async bookmarkAdd(
    label: string,
    text: string,
    nowMs?: number,
  ): Promise<{ bookmarks?: BookmarkEntry[]; error?: string }> {
    return (await this.request("bookmarkAdd", { label, text, nowMs })) as {
      bookmarks?: BookmarkEntry[];
      error?: string;
    };
  }

  async bookmarkList(): Promise<BookmarkEntry[]> {
    const result = (await this.request("bookmarkList")) as { bookmarks: BookmarkEntry[] };
    return result.bookmarks;
  }

  async bookmarksDump(): Promise<string> {
    const result = (await this.request("bookmarksDump")) as { json: string };
    return result.json;
  }

  async bookmarksLoad(json: string): Promise<BookmarkEntry[]> {
    const result = (await this.request("bookmarksLoad", { json })) as {
      bookmarks?: BookmarkEntry[];
      error?: string;
    };
    return result.bookmarks ?? [];
  }
}

/** In-process client for node tests and non-worker embeddings. */
export class DirectEngineClient extends BaseEngineClient {
  constructor(private readonly core: PocketforgeCore) {
    super();
  }

  protected request(op: string, args?: unknown): Promise<unknown> {
    return this.core.handle(op, args ?? {});
  }
}

interface WorkerLike {
  postMessage(message: unknown): void;
  addEventListener(type: "message", handler: (event: MessageEvent) => void): void;
}

/** postMessage client used by the real UI. */
export class WorkerEngineClient extends BaseEngineClient {
  private nextId = 1;
  private readonly pending = new Map<number, { resolve: (v: unknown) => void; reject: (e: Error) => void }>();

  constructor(private readonly worker: WorkerLike) {
    super();
    worker.addEventListener("message", (event) => {
      const response = event.data as EngineResponse;
      const waiter = this.pending.get(response.id);
      if (!waiter) {
        return;
      }
      this.pending.delete(response.id);
      if (response.ok) {
        waiter.resolve(response.result);
      } else {
        waiter.reject(new Error(response.error));
      }
    });
  }

  protected request(op: string, args?: unknown): Promise<unknown> {
    const id = this.nextId;
    this.nextId += 1;
    const message: EngineRequest = { id, op, args: args ?? {} };
    return new Promise((resolve, reject) => {
      this.pending.set(id, { resolve, reject });
      this.worker.postMessage(message);
    });
  }
}
