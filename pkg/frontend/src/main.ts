/**
 * Browser bootstrap: wires the store to the DOM.  All markup comes from the
 * pure renderers; this layer only routes events and downloads exports.
 */

import { HttpApi } from "./api.js";
import { emitAssessmentCsv } from "./csv.js";
import { renderGrid, renderMeasurePicker, renderNotice, renderRanking } from "./render.js";
import { WorkbenchStore } from "./state.js";
import type { MeasureId } from "./types.js";

const DEFAULT_API = "http://127.0.0.1:8000";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function download(name: string, text: string, type: string): void {
  const blob = new Blob([text], { type });
  const url = URL.createObjectURL(blob);
  const link = document.createElement("a");
  link.href = url;
  link.download = name;
  link.click();
  URL.revokeObjectURL(url);
}

export function boot(): void {
  const apiBaseInput = el<HTMLInputElement>("api-base");
  apiBaseInput.value = DEFAULT_API;
  let store = new WorkbenchStore(new HttpApi(apiBaseInput.value));

  const gridHost = el<HTMLDivElement>("grid");
  const rankingHost = el<HTMLDivElement>("ranking");
  const noticeHost = el<HTMLDivElement>("notice");
  const measureHost = el<HTMLDivElement>("measure-host");

  const redraw = () => {
    const state = store.getState();
    gridHost.innerHTML = renderGrid(state);
    rankingHost.innerHTML = renderRanking(state);
    noticeHost.innerHTML = renderNotice(state);
    measureHost.innerHTML = renderMeasurePicker(state.measure);
    document.body.classList.toggle("busy", state.busy);
  };

  const attach = () => {
    store.subscribe(redraw);
    redraw();
  };
  attach();

  apiBaseInput.addEventListener("change", () => {
    store = new WorkbenchStore(new HttpApi(apiBaseInput.value || DEFAULT_API));
    attach();
  });

  el<HTMLInputElement>("file").addEventListener("change", async (event) => {
    const input = event.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    const text = await file.text();
    const format = file.name.toLowerCase().endsWith(".json") ? "json" : "csv";
    try {
      await store.loadAssessment(text, format);
    } catch {
      // notice already set by the store; keep the picker usable
    }
    input.value = "";
  });

  gridHost.addEventListener("change", (event) => {
    const target = event.target as HTMLElement;
    if (target instanceof HTMLInputElement && target.dataset.toggle) {
      void store.toggleAttribute(target.dataset.toggle);
    } else if (
      target instanceof HTMLInputElement &&
      target.dataset.alt &&
      target.dataset.attr
    ) {
      void store.editGrade(target.dataset.alt, target.dataset.attr, target.value);
    }
  });

  measureHost.addEventListener("change", (event) => {
    const select = event.target as HTMLSelectElement;
    void store.setMeasure(select.value as MeasureId);
  });

  el<HTMLButtonElement>("export-csv").addEventListener("click", () => {
    download("assessment.csv", emitAssessmentCsv(store.exportDocument()), "text/csv");
  });
  el<HTMLButtonElement>("export-json").addEventListener("click", () => {
    download(
      "assessment.json",
      JSON.stringify(store.exportDocument(), null, 2) + "\n",
      "application/json",
    );
  });
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", boot);
}
