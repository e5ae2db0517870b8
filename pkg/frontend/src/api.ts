// Typed client for the resolution engine's JSON-over-HTTP interface.
// Every piece of mathematics happens server-side; this module only moves
// documents back and forth.

export interface DiagramDoc {
  schema_version: string;
  mu: number[];
  n: number;
  dominant: number[];
  runs: number[];
  atypicality: number;
  odd_run_count: number;
  isolated: number[];
  left_isolated: number[];
  ascii: string;
}

export type MoveKind = "Move1" | "Move2" | "Move3";

export interface MoveDoc {
  kind: MoveKind;
  j: number;
  k?: number;
}

export interface FunctionDoc {
  source: number[];
  target: number[];
  pairing: number[];
  trace: MoveDoc[];
  trace_start: number[] | null;
  relative_length: number;
  crossing_count: number;
  degree: number | null;
}

export interface SummandDoc {
  lambda: number[];
  multiplicity: number;
  functions?: FunctionDoc[];
}

export interface TermDoc {
  degree: number;
  summands: SummandDoc[];
}

export interface ResolutionDoc {
  schema_version: string;
  mu: number[];
  max_degree: number;
  terms: TermDoc[];
}

export interface FunctionsDoc {
  schema_version: string;
  mu: number[];
  max_degree: number;
  lambda?: number[];
  functions: FunctionDoc[];
}

export interface SeriesDoc {
  schema_version: string;
  runs: number[];
  truncation: number;
  coeffs: number[];
  z_complexity: number;
  complexity: number;
  rank_variety_dim: number;
  support_variety_dim: number;
  growth_exponent: number;
}

export interface PlanDoc {
  schema_version: string;
  mu: number[];
  case: "typical" | "split" | "carry";
  i: number | null;
  j: number | null;
  nu: number[] | null;
  mu_prime: number[] | null;
  options: [number, number][];
  resolution?: ResolutionDoc;
}

export interface ApplicableMovesDoc {
  schema_version: string;
  function: FunctionDoc;
  moves: MoveDoc[];
}

export interface AppliedMoveDoc {
  schema_version: string;
  function: FunctionDoc;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

async function request<T>(url: string, body?: unknown): Promise<T> {
  const resp = await fetch(url, body === undefined
    ? { method: "GET" }
    : {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      });
  let doc: unknown;
  try {
    doc = await resp.json();
  } catch {
    throw new ApiError(resp.status, `response from ${url} is not JSON`);
  }
  if (!resp.ok) {
    const message =
      doc && typeof doc === "object" && "error" in doc
        ? String((doc as { error: unknown }).error)
        : `request to ${url} failed with ${resp.status}`;
    throw new ApiError(resp.status, message);
  }
  return doc as T;
}

export class Client {
  constructor(readonly base: string = "") {}

  health(): Promise<{ schema_version: string; status: string }> {
    return request(`${this.base}/health`);
  }

  parseText(text: string): Promise<DiagramDoc> {
    return request(`${this.base}/api/diagram/parse`, { text });
  }

  parseDots(mu: number[]): Promise<DiagramDoc> {
    return request(`${this.base}/api/diagram/parse`, { mu });
  }

  resolve(mu: number[], maxDegree: number, withFunctions = false): Promise<ResolutionDoc> {
    return request(`${this.base}/api/resolve`, { mu, maxDegree, withFunctions });
  }

  functions(mu: number[], lambda?: number[], maxDegree?: number): Promise<FunctionsDoc> {
    const body: Record<string, unknown> = { mu };
    if (lambda !== undefined) body["lambda"] = lambda;
    if (maxDegree !== undefined) body["maxDegree"] = maxDegree;
    return request(`${this.base}/api/functions`, body);
  }

  applicableMoves(f: FunctionDoc): Promise<ApplicableMovesDoc> {
    return request(`${this.base}/api/moves/applicable`, { function: f });
  }

  applyMove(f: FunctionDoc, move: MoveDoc): Promise<AppliedMoveDoc> {
    return request(`${this.base}/api/moves/apply`, { function: f, move });
  }

  series(runs: number[], maxDegree: number): Promise<SeriesDoc> {
    return request(`${this.base}/api/series`, { runs, maxDegree });
  }

  stepPlan(mu: number[]): Promise<PlanDoc> {
    return request(`${this.base}/api/step/plan`, { mu });
  }

  stepCustom(mu: number[], i: number, j: number, maxDegree?: number): Promise<PlanDoc> {
    const body: Record<string, unknown> = { mu, i, j };
    if (maxDegree !== undefined) body["maxDegree"] = maxDegree;
    return request(`${this.base}/api/step/custom`, body);
  }
}
