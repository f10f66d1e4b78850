import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { Api } from "../src/api.js";
import type {
  AssessmentDocument,
  DecisionTableWire,
  MeasureId,
  WhatIfRequest,
  WhatIfResponse,
} from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));

export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf-8")) as T;
}

export function fixtureText(name: string): string {
  return readFileSync(join(here, "fixtures", name), "utf-8");
}

export const rankG1 = () => fixture<DecisionTableWire>("rank_g1.json");
export const rankG2 = () => fixture<DecisionTableWire>("rank_g2.json");
export const eliminateE5 = () => fixture<WhatIfResponse>("whatif_eliminate_e5.json");
export const editPsi1E4 = () => fixture<WhatIfResponse>("whatif_edit_psi1_e4.json");
export const documentFixture = () => fixture<AssessmentDocument>("document.json");

export interface RecordedCall {
  kind: "createSession" | "rank" | "whatif";
  measure?: MeasureId;
  body?: WhatIfRequest;
}

/**
 * Scripted stand-in for the HTTP client, answering from responses captured
 * against the real service.
 */
export class FakeApi implements Api {
  calls: RecordedCall[] = [];
  /** table served once a grade edit has been applied */
  editedTable: DecisionTableWire | null = null;

  async createSession(_doc: AssessmentDocument): Promise<string> {
    this.calls.push({ kind: "createSession" });
    return "session-under-test";
  }

  async rank(_sessionId: string, measure: MeasureId): Promise<DecisionTableWire> {
    this.calls.push({ kind: "rank", measure });
    if (measure === "g2") return rankG2();
    return this.editedTable ?? rankG1();
  }

  async whatif(_sessionId: string, body: WhatIfRequest): Promise<WhatIfResponse> {
    this.calls.push({ kind: "whatif", body });
    if (body.edits && body.edits.length > 0) {
      const response = editPsi1E4();
      this.editedTable = response.after;
      return response;
    }
    return eliminateE5();
  }

  callsOf(kind: RecordedCall["kind"]): RecordedCall[] {
    return this.calls.filter((call) => call.kind === kind);
  }
}
