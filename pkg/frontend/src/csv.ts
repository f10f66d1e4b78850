/**
 * Assessment CSV reader/writer matching the service dialect: first header
 * cell empty, attribute ids across the header, one alternative per row,
 * comma separated, LF line endings.
 */

import type { AssessmentDocument } from "./types.js";

export class CsvError extends Error {
  constructor(
    readonly row: number,
    readonly column: number,
    message: string,
  ) {
    super(`row ${row}, column ${column}: ${message}`);
  }
}

function splitLine(line: string): string[] {
  const cells: string[] = [];
  let current = "";
  let quoted = false;
  for (let i = 0; i < line.length; i++) {
    const ch = line[i];
    if (quoted) {
      if (ch === '"' && line[i + 1] === '"') {
        current += '"';
        i++;
      } else if (ch === '"') {
        quoted = false;
      } else {
        current += ch;
      }
    } else if (ch === '"') {
      quoted = true;
    } else if (ch === ",") {
      cells.push(current);
      current = "";
    } else {
      current += ch;
    }
  }
  cells.push(current);
  return cells;
}

export function parseAssessmentCsv(text: string): AssessmentDocument {
  const lines = text
    .split(/\r?\n/)
    .filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new CsvError(1, 1, "empty document");
  }
  const header = splitLine(lines[0]);
  if (header[0].trim() !== "") {
    throw new CsvError(1, 1, "expected an empty corner cell");
  }
  const attributes = header.slice(1).map((cell, k) => {
    const id = cell.trim();
    if (id === "") throw new CsvError(1, k + 2, "missing attribute id");
    return { id };
  });
  const alternatives: string[] = [];
  const grades: string[][] = [];
  lines.slice(1).forEach((line, index) => {
    const row = splitLine(line);
    const rowNumber = index + 2;
    if (row.length !== header.length) {
      throw new CsvError(
        rowNumber,
        Math.min(row.length + 1, header.length),
        `expected ${header.length - 1} grades, got ${row.length - 1}`,
      );
    }
    const alternative = row[0].trim();
    if (alternative === "") throw new CsvError(rowNumber, 1, "missing alternative id");
    row.slice(1).forEach((cell, c) => {
      if (cell.trim() === "") throw new CsvError(rowNumber, c + 2, "missing cell");
    });
    alternatives.push(alternative);
    grades.push(row.slice(1).map((cell) => cell.trim()));
  });
  return { alternatives, attributes, grades, metadata: {} };
}

function quote(cell: string): string {
  return /[",\n]/.test(cell) ? `"${cell.replace(/"/g, '""')}"` : cell;
}

export function emitAssessmentCsv(doc: AssessmentDocument): string {
  const lines = [["", ...doc.attributes.map((a) => a.id)].map(quote).join(",")];
  doc.alternatives.forEach((alternative, i) => {
    lines.push([alternative, ...doc.grades[i]].map(quote).join(","));
  });
  return lines.join("\n") + "\n";
}
