import { createApp } from "./app.js";
import { WorkerEngineClient } from "./engine/client.js";

const worker = new Worker(new URL("./engine/worker.js", import.meta.url), { type: "module" });
const engine = new WorkerEngineClient(worker);
const app = createApp(document, engine);

// Clear the boot note once the opening generation has landed.
const bootStatus = document.getElementById("boot-status");
const watch = setInterval(() => {
  if (app.state().editorText !== "") {
    bootStatus?.remove();
    clearInterval(watch);
  }
}, 200);
