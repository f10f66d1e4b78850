/**
 * Thin fetch client for the fsprank service.  The workbench never computes
 * measure values itself; everything it displays comes through this client.
 */

import type {
  AssessmentDocument,
  DecisionTableWire,
  MeasureId,
  WhatIfRequest,
  WhatIfResponse,
} from "./types.js";

export interface Api {
  createSession(doc: AssessmentDocument): Promise<string>;
  rank(sessionId: string, measure: MeasureId): Promise<DecisionTableWire>;
  whatif(sessionId: string, body: WhatIfRequest): Promise<WhatIfResponse>;
}

export class HttpApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function parseFailure(response: Response): Promise<never> {
  let code = "HTTP_ERROR";
  let message = `${response.status} ${response.statusText}`;
  try {
    const payload = await response.json();
    if (payload?.error?.code) {
      code = payload.error.code;
      message = payload.error.message ?? message;
    }
  } catch {
    // non-JSON failure body; keep the status text
  }
  throw new HttpApiError(response.status, code, message);
}

export class HttpApi implements Api {
  constructor(readonly baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  async createSession(doc: AssessmentDocument): Promise<string> {
    const response = await fetch(this.url("/sessions"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(doc),
    });
    if (response.status !== 201) return parseFailure(response);
    const payload = await response.json();
    return payload.session_id as string;
  }

  async rank(sessionId: string, measure: MeasureId): Promise<DecisionTableWire> {
    const response = await fetch(
      this.url(`/sessions/${sessionId}/rank?measure=${measure}`),
    );
    if (!response.ok) return parseFailure(response);
    return (await response.json()) as DecisionTableWire;
  }

  async whatif(sessionId: string, body: WhatIfRequest): Promise<WhatIfResponse> {
    const response = await fetch(this.url(`/sessions/${sessionId}/whatif`), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) return parseFailure(response);
    return (await response.json()) as WhatIfResponse;
  }
}
