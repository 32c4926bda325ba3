/**
 * Web worker entry: boots the engine core once, then answers protocol
 * requests. Runs off the main thread so generation and compression
 * never block typing.
 */

import type { EngineRequest, EngineResponse } from "../protocol.js";
import { PocketforgeCore } from "./core.js";

const scope = self as unknown as {
  postMessage(message: EngineResponse): void;
  addEventListener(type: "message", handler: (event: MessageEvent) => void): void;
  location: { href: string };
};

// Assets live next to the bundle: <base>/pyodide/ and <base>/assets/.
const baseUrl = new URL("..", scope.location.href).href;
const corePromise = PocketforgeCore.inBrowser(baseUrl);

scope.addEventListener("message", (event) => {
  const request = event.data as EngineRequest;
  void (async () => {
    try {
      const core = await corePromise;
      const result = await core.handle(request.op, request.args);
      scope.postMessage({ id: request.id, ok: true, result });
    } catch (err) {
      scope.postMessage({ id: request.id, ok: false, error: String(err) });
    }
  })();
});
