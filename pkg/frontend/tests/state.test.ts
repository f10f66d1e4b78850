import { beforeEach, describe, expect, it } from "vitest";

import { emitAssessmentCsv } from "../src/csv.js";
import { WorkbenchStore, cellKey } from "../src/state.js";
import {
  FakeApi,
  documentFixture,
  editPsi1E4,
  eliminateE5,
  fixtureText,
  rankG1,
  rankG2,
} from "./helpers.js";

describe("WorkbenchStore", () => {
  let api: FakeApi;
  let store: WorkbenchStore;

  beforeEach(() => {
    api = new FakeApi();
    store = new WorkbenchStore(api);
  });

  const load = () => store.loadAssessment(fixtureText("assessment.csv"), "csv");

  it("loads an assessment into a 5x10 grid with the ranking headed by ψ5", async () => {
    await load();
    const state = store.getState();
    expect(state.sessionId).toBe("session-under-test");
    expect(state.doc?.alternatives).toHaveLength(5);
    expect(state.doc?.attributes).toHaveLength(10);
    expect(state.doc?.grades.every((row) => row.length === 10)).toBe(true);
    expect(state.table?.rows[0].alternative).toBe("ψ5");
    expect(state.table).toEqual(rankG1());
  });

  it("loads the JSON document format too", async () => {
    await store.loadAssessment(JSON.stringify(documentFixture()), "json");
    expect(store.getState().doc?.alternatives).toHaveLength(5);
  });

  it("reports malformed files without creating a session", async () => {
    await expect(
      store.loadAssessment("id,e1\na,0.1\n", "csv"),
    ).rejects.toThrowError(/row 1, column 1/);
    expect(store.getState().sessionId).toBeNull();
    expect(store.getState().notice).toMatch(/row 1, column 1/);
    expect(api.calls).toHaveLength(0);
  });

  it("blocks out-of-range grades client-side", async () => {
    await load();
    const before = api.calls.length;
    await store.editGrade("ψ1", "ε4", "1.2");
    const state = store.getState();
    expect(state.cellErrors[cellKey("ψ1", "ε4")]).toMatch(/at most 1/);
    expect(api.calls.length).toBe(before); // nothing sent
  });

  it("blocks over-precise grades client-side", async () => {
    await load();
    const before = api.calls.length;
    await store.editGrade("ψ1", "ε4", "0.12345");
    expect(Object.keys(store.getState().cellErrors)).toHaveLength(1);
    expect(api.calls.length).toBe(before);
  });

  it("applies a valid edit, updates the grid mirror and shows rank deltas", async () => {
    await load();
    await store.editGrade("ψ1", "ε4", "0.9");
    const state = store.getState();
    const sent = api.callsOf("whatif");
    expect(sent).toHaveLength(1);
    expect(sent[0].body).toEqual({
      edits: [{ alternative: "ψ1", attribute: "ε4", grade: "0.9" }],
      dry_run: false,
      measure: "g1",
    });
    expect(state.table).toEqual(editPsi1E4().after);
    expect(state.doc?.grades[0][3]).toBe("0.9");
    // the captured response has ψ1 climbing one place, ψ4 dropping one
    expect(state.deltas["ψ1"]).toBe(1);
    expect(state.deltas["ψ4"]).toBe(-1);
    expect(state.cellErrors).toEqual({});
  });

  it("renders order from the precomputed service response after an edit", async () => {
    await load();
    await store.editGrade("ψ1", "ε4", "0.9");
    const order = store.getState().table?.rows.map((row) => row.alternative);
    expect(order).toEqual(
      editPsi1E4().after.rows.map((row) => row.alternative),
    );
  });

  it("toggling a criterion off shows the service's restricted ranking", async () => {
    await load();
    await store.toggleAttribute("ε5");
    const state = store.getState();
    expect(state.disabled.has("ε5")).toBe(true);
    const sent = api.callsOf("whatif");
    expect(sent[0].body).toEqual({
      eliminate: ["ε5"],
      dry_run: true,
      measure: "g1",
    });
    expect(state.table).toEqual(eliminateE5().after);
  });

  it("toggling off then on returns to the original ranking", async () => {
    await load();
    await store.toggleAttribute("ε5");
    await store.toggleAttribute("ε5");
    const state = store.getState();
    expect(state.disabled.size).toBe(0);
    expect(state.table).toEqual(rankG1());
    // re-enable goes through a plain rank call, not an empty elimination
    expect(api.callsOf("rank").length).toBeGreaterThanOrEqual(2);
  });

  it("refuses to disable the last enabled criterion", async () => {
    await load();
    const attrs = store.getState().doc!.attributes.map((a) => a.id);
    for (const attribute of attrs.slice(0, 9)) {
      await store.toggleAttribute(attribute);
    }
    expect(store.getState().disabled.size).toBe(9);
    const before = api.calls.length;
    await store.toggleAttribute(attrs[9]);
    const state = store.getState();
    expect(state.disabled.size).toBe(9); // unchanged
    expect(state.notice).toMatch(/at least one criterion/);
    expect(api.calls.length).toBe(before); // blocked before any request
  });

  it("switching the measure refetches through the service", async () => {
    await load();
    await store.setMeasure("g2");
    const state = store.getState();
    expect(state.measure).toBe("g2");
    expect(state.table).toEqual(rankG2());
    const rankCalls = api.callsOf("rank");
    expect(rankCalls[rankCalls.length - 1].measure).toBe("g2");
  });

  it("export reproduces the loaded document exactly", async () => {
    const text = fixtureText("assessment.csv");
    await store.loadAssessment(text, "csv");
    expect(emitAssessmentCsv(store.exportDocument())).toBe(text);
  });

  it("export reflects applied edits", async () => {
    await load();
    await store.editGrade("ψ1", "ε4", "0.9");
    const doc = store.exportDocument();
    expect(doc.grades[0][3]).toBe("0.9");
  });
});
