import { describe, expect, it } from "vitest";

import { CsvError, emitAssessmentCsv, parseAssessmentCsv } from "../src/csv.js";
import { fixtureText } from "./helpers.js";

describe("parseAssessmentCsv", () => {
  it("reads the bundled assessment", () => {
    const doc = parseAssessmentCsv(fixtureText("assessment.csv"));
    expect(doc.alternatives).toHaveLength(5);
    expect(doc.attributes).toHaveLength(10);
    expect(doc.alternatives[0]).toBe("ψ1");
    expect(doc.attributes[0].id).toBe("ε1");
    expect(doc.grades[0][0]).toBe("0.7");
    expect(doc.grades[4][9]).toBe("0.4");
  });

  it("round-trips through emit", () => {
    const text = fixtureText("assessment.csv");
    const doc = parseAssessmentCsv(text);
    expect(emitAssessmentCsv(doc)).toBe(text);
    expect(parseAssessmentCsv(emitAssessmentCsv(doc))).toEqual(doc);
  });

  it("names the position of a missing cell", () => {
    expect(() => parseAssessmentCsv(",e1,e2\na,0.1\n")).toThrowError(
      /row 2, column 3/,
    );
  });

  it("requires the empty corner cell", () => {
    try {
      parseAssessmentCsv("id,e1\na,0.1\n");
      expect.unreachable();
    } catch (error) {
      expect(error).toBeInstanceOf(CsvError);
      expect((error as CsvError).row).toBe(1);
      expect((error as CsvError).column).toBe(1);
    }
  });

  it("rejects blank ids and blank cells", () => {
    expect(() => parseAssessmentCsv(",e1\n,0.1\n")).toThrowError(/row 2, column 1/);
    expect(() => parseAssessmentCsv(",e1,e2\na,0.1,\n")).toThrowError(
      /row 2, column 3/,
    );
  });

  it("handles quoted cells", () => {
    const doc = parseAssessmentCsv('," e,1 "\n"alt ""x""",0.5\n');
    expect(doc.attributes[0].id).toBe("e,1");
    expect(doc.alternatives[0]).toBe('alt "x"');
  });
});
