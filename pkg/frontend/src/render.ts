// Pure presentation helpers: every number shown comes from a server
// document, these only turn documents into strings and cell lists.

import type { DiagramDoc, FunctionDoc, PlanDoc, ResolutionDoc, TermDoc } from "./api";

export const EMPTY_DIAGRAM_ERROR = "enter at least one dot position";

export function formatDots(dots: number[]): string {
  return `[${dots.join(",")}]`;
}

// Editor readout, e.g. "runs (2), atyp 1, o 0".
export function diagramReadout(doc: DiagramDoc): string {
  return `runs (${doc.runs.join(",")}), atyp ${doc.atypicality}, o ${doc.odd_run_count}`;
}

// Workbench readout, e.g. "ℓ=2, L=0, d=1"; degree is "-" while a
// hand-edited function has odd displacement.
export function functionReadout(f: FunctionDoc): string {
  const d = f.degree === null ? "-" : String(f.degree);
  return `ℓ=${f.relative_length}, L=${f.crossing_count}, d=${d}`;
}

export function arrowList(f: FunctionDoc): string[] {
  return f.source.map((a, t) => `${a} -> ${f.pairing[t]}`);
}

export interface DotCell {
  pos: number;
  filled: boolean;
}

// Cells for the click-to-toggle row, padded one free slot on each side.
export function dotCells(dots: number[], margin = 2): DotCell[] {
  const lo = (dots.length ? Math.min(...dots) : 0) - margin;
  const hi = (dots.length ? Math.max(...dots) : 4) + margin;
  const cells: DotCell[] = [];
  for (let p = lo; p <= hi; p++) {
    cells.push({ pos: p, filled: dots.includes(p) });
  }
  return cells;
}

// Toggling is a set operation on the pending dot list; the result is always
// sent to the server for parsing, so validity stays server-confirmed.
export function toggleDot(dots: number[], pos: number): number[] {
  const next = dots.includes(pos) ? dots.filter((p) => p !== pos) : [...dots, pos];
  return next.sort((a, b) => a - b);
}

export function describePlan(plan: PlanDoc): string {
  if (plan.case === "typical") {
    return "typical — resolution complete at degree 0";
  }
  const head = `${plan.case} at (i=${plan.i}, j=${plan.j})`;
  const nu = plan.nu === null ? "?" : formatDots(plan.nu);
  if (plan.case === "split") {
    const prime = plan.mu_prime === null ? "?" : formatDots(plan.mu_prime);
    return `${head}: nu ${nu}, mu' ${prime}`;
  }
  return `${head}: nu ${nu}`;
}

export function termLine(term: TermDoc): string {
  const parts = term.summands.map((s) => {
    const text = formatDots(s.lambda);
    return s.multiplicity === 1 ? text : `${text}^${s.multiplicity}`;
  });
  return `d${term.degree}: ${parts.join(", ")}`;
}

function termKey(term: TermDoc): string {
  return term.summands
    .map((s) => `${formatDots(s.lambda)}^${s.multiplicity}`)
    .sort()
    .join("|");
}

// Compare-paths panel: per-degree summand multisets must agree.
export function resolutionsAgree(a: ResolutionDoc, b: ResolutionDoc): boolean {
  if (a.terms.length !== b.terms.length) {
    return false;
  }
  return a.terms.every((term, d) => termKey(term) === termKey(b.terms[d]));
}
