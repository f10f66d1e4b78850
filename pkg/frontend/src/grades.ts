/**
 * Client-side grade validation, mirroring the service's fixed-point rules:
 * plain decimal text, at most 4 fractional digits, value within [0, 1].
 * Used only to block bad input before it leaves the browser; the server
 * revalidates everything.
 */

const GRADE_PATTERN = /^\d+(\.\d{1,4})?$/;

export interface GradeCheck {
  ok: boolean;
  message?: string;
}

export function checkGrade(text: string): GradeCheck {
  const trimmed = text.trim();
  if (trimmed === "") {
    return { ok: false, message: "grade required" };
  }
  if (trimmed.startsWith("-")) {
    return { ok: false, message: "grade must be at least 0" };
  }
  if (!GRADE_PATTERN.test(trimmed)) {
    return { ok: false, message: "plain decimal with up to 4 digits after the point" };
  }
  const [whole, frac = ""] = trimmed.split(".");
  const units = parseInt(whole, 10) * 10000 + parseInt(frac.padEnd(4, "0") || "0", 10);
  if (units > 10000) {
    return { ok: false, message: "grade must be at most 1" };
  }
  return { ok: true };
}
