/**
 * Workbench state machine.  Holds the editable document mirror, the
 * enabled-attribute set and the last server responses; every ranking shown
 * to the user is taken verbatim from a service reply.
 *
 * Action semantics:
 *  - grade edits are applied patches: they mutate the session (and its
 *    recorded history) and update the local document mirror;
 *  - attribute toggles are dry-run elimination previews layered on each
 *    request, so the session base is untouched and re-enabling a criterion
 *    restores the previous ranking exactly.
 */

import type { Api } from "./api.js";
import { parseAssessmentCsv } from "./csv.js";
import { checkGrade } from "./grades.js";
import type {
  AssessmentDocument,
  DecisionTableWire,
  GradeEdit,
  MeasureId,
} from "./types.js";

export interface WorkbenchState {
  sessionId: string | null;
  doc: AssessmentDocument | null;
  disabled: ReadonlySet<string>;
  measure: MeasureId;
  table: DecisionTableWire | null;
  /** rank movement per alternative vs the previously displayed table (+ = up) */
  deltas: Record<string, number>;
  cellErrors: Record<string, string>;
  notice: string | null;
  busy: boolean;
}

export function cellKey(alternative: string, attribute: string): string {
  return `${alternative}\u0000${attribute}`;
}

function rankDeltas(
  previous: DecisionTableWire | null,
  next: DecisionTableWire,
): Record<string, number> {
  const deltas: Record<string, number> = {};
  const before = new Map(
    (previous?.rows ?? []).map((row) => [row.alternative, row.rank]),
  );
  for (const row of next.rows) {
    const old = before.get(row.alternative);
    deltas[row.alternative] = old === undefined ? 0 : old - row.rank;
  }
  return deltas;
}

function parseDocument(text: string, format: "csv" | "json"): AssessmentDocument {
  if (format === "csv") {
    return parseAssessmentCsv(text);
  }
  const payload = JSON.parse(text);
  return {
    alternatives: payload.alternatives,
    attributes: payload.attributes.map((entry: string | { id: string; label?: string }) =>
      typeof entry === "string" ? { id: entry } : entry,
    ),
    grades: payload.grades.map((row: unknown[]) => row.map(String)),
    metadata: payload.metadata ?? {},
  };
}

export class WorkbenchStore {
  private state: WorkbenchState = {
    sessionId: null,
    doc: null,
    disabled: new Set(),
    measure: "g1",
    table: null,
    deltas: {},
    cellErrors: {},
    notice: null,
    busy: false,
  };

  private listeners: Array<(state: WorkbenchState) => void> = [];

  constructor(private readonly api: Api) {}

  getState(): WorkbenchState {
    return this.state;
  }

  subscribe(listener: (state: WorkbenchState) => void): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private set(partial: Partial<WorkbenchState>): void {
    this.state = { ...this.state, ...partial };
    for (const listener of this.listeners) listener(this.state);
  }

  /** Parse a file's text, create a session and show the initial ranking. */
  async loadAssessment(text: string, format: "csv" | "json"): Promise<void> {
    this.set({ busy: true, notice: null });
    try {
      const doc = parseDocument(text, format);
      const sessionId = await this.api.createSession(doc);
      const table = await this.api.rank(sessionId, this.state.measure);
      this.set({
        sessionId,
        doc,
        disabled: new Set(),
        table,
        deltas: rankDeltas(null, table),
        cellErrors: {},
        busy: false,
      });
    } catch (error) {
      this.set({ busy: false, notice: describe(error) });
      throw error;
    }
  }

  /** Validate locally; if in range, apply the edit through the service. */
  async editGrade(alternative: string, attribute: string, value: string): Promise<void> {
    const key = cellKey(alternative, attribute);
    const verdict = checkGrade(value);
    if (!verdict.ok) {
      this.set({
        cellErrors: { ...this.state.cellErrors, [key]: verdict.message ?? "invalid" },
      });
      return; // blocked client-side, no request
    }
    const { [key]: _cleared, ...remaining } = this.state.cellErrors;
    if (!this.state.sessionId || !this.state.doc) {
      this.set({ cellErrors: remaining, notice: "load an assessment first" });
      return;
    }
    this.set({ busy: true, cellErrors: remaining, notice: null });
    const edit: GradeEdit = { alternative, attribute, grade: value.trim() };
    try {
      const response = await this.api.whatif(this.state.sessionId, {
        edits: [edit],
        dry_run: false,
        measure: this.state.measure,
      });
      const doc = this.withEditedCell(edit);
      const table = await this.currentView(response.after);
      this.set({
        doc,
        table,
        deltas: rankDeltas(this.state.table, table),
        busy: false,
      });
    } catch (error) {
      this.set({ busy: false, notice: describe(error) });
    }
  }

  /** Flip a criterion; disabling the last enabled one is blocked. */
  async toggleAttribute(attribute: string): Promise<void> {
    if (!this.state.sessionId || !this.state.doc) return;
    const disabled = new Set(this.state.disabled);
    if (disabled.has(attribute)) {
      disabled.delete(attribute);
    } else {
      if (disabled.size + 1 >= this.state.doc.attributes.length) {
        this.set({ notice: "at least one criterion must stay enabled" });
        return;
      }
      disabled.add(attribute);
    }
    this.set({ busy: true, notice: null });
    try {
      const table = await this.fetchView(disabled);
      this.set({
        disabled,
        table,
        deltas: rankDeltas(this.state.table, table),
        busy: false,
      });
    } catch (error) {
      this.set({ busy: false, notice: describe(error) });
    }
  }

  async setMeasure(measure: MeasureId): Promise<void> {
    if (!this.state.sessionId) {
      this.set({ measure });
      return;
    }
    this.set({ busy: true, measure, notice: null });
    try {
      const table = await this.fetchView(this.state.disabled);
      this.set({ table, deltas: rankDeltas(this.state.table, table), busy: false });
    } catch (error) {
      this.set({ busy: false, notice: describe(error) });
    }
  }

  /** Current document mirror (edits applied, all attributes), for export. */
  exportDocument(): AssessmentDocument {
    if (!this.state.doc) throw new Error("nothing loaded");
    return this.state.doc;
  }

  private withEditedCell(edit: GradeEdit): AssessmentDocument {
    const doc = this.state.doc!;
    const i = doc.alternatives.indexOf(edit.alternative);
    const j = doc.attributes.findIndex((a) => a.id === edit.attribute);
    const grades = doc.grades.map((row, r) =>
      r === i ? row.map((cell, c) => (c === j ? edit.grade : cell)) : row,
    );
    return { ...doc, grades };
  }

  /** Ranking for the session state viewed through the current toggle set. */
  private async fetchView(disabled: ReadonlySet<string>): Promise<DecisionTableWire> {
    const sessionId = this.state.sessionId!;
    if (disabled.size === 0) {
      return this.api.rank(sessionId, this.state.measure);
    }
    const response = await this.api.whatif(sessionId, {
      eliminate: [...disabled],
      dry_run: true,
      measure: this.state.measure,
    });
    return response.after;
  }

  /** After an applied edit: overlay the toggle preview if any is active. */
  private async currentView(applied: DecisionTableWire): Promise<DecisionTableWire> {
    if (this.state.disabled.size === 0) {
      return applied;
    }
    return this.fetchView(this.state.disabled);
  }
}

function describe(error: unknown): string {
  if (error instanceof Error) return error.message;
  return String(error);
}
