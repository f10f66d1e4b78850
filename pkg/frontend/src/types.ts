/**
 * Wire types mirroring the fsprank HTTP API JSON shapes.
 */

export type MeasureId = "g1" | "g2" | "g3";

export interface AttributeEntry {
  id: string;
  label?: string;
}

export interface AssessmentDocument {
  alternatives: string[];
  attributes: AttributeEntry[];
  grades: string[][];
  metadata: Record<string, string>;
}

export interface DecisionRowWire {
  rank: number;
  alternative: string;
  tie_group: number;
  gamma1: string;
  gamma1_decimal: string;
  gamma2: number;
  gamma3: string;
  gamma3_decimal: string;
}

export interface DecisionTableWire {
  measure: "G1" | "G2" | "G3";
  source_digest: string;
  rows: DecisionRowWire[];
}

export interface GradeEdit {
  alternative: string;
  attribute: string;
  grade: string;
}

export interface WhatIfRequest {
  edits?: GradeEdit[];
  eliminate?: string[];
  dry_run?: boolean;
  measure?: MeasureId;
}

export interface WhatIfResponse {
  applied: boolean;
  measure: "G1" | "G2" | "G3";
  before: DecisionTableWire;
  after: DecisionTableWire;
  rank_deltas: Record<string, number>;
}

export interface ApiError {
  error: { code: string; message: string };
}
