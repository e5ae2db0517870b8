import { describe, expect, it } from "vitest";

import type { DiagramDoc, FunctionDoc, PlanDoc, ResolutionDoc } from "../src/api";
import {
  describePlan,
  diagramReadout,
  dotCells,
  EMPTY_DIAGRAM_ERROR,
  formatDots,
  functionReadout,
  resolutionsAgree,
  termLine,
  toggleDot,
} from "../src/render";

const DIAGRAM: DiagramDoc = {
  schema_version: "1",
  mu: [-4, 2, 4, 5],
  n: 4,
  dominant: [2, 2, 1, -4],
  runs: [2, 1, 1],
  atypicality: 1,
  odd_run_count: 2,
  isolated: [-4, 2],
  left_isolated: [-4, 2, 4],
  ascii: "",
};

function fn(partial: Partial<FunctionDoc>): FunctionDoc {
  return {
    source: [0, 1],
    target: [0, 1],
    pairing: [0, 1],
    trace: [],
    trace_start: [0, 1],
    relative_length: 0,
    crossing_count: 0,
    degree: 0,
    ...partial,
  };
}

describe("readouts", () => {
  it("diagram readout lists runs, atypicality and odd-run count", () => {
    expect(diagramReadout(DIAGRAM)).toBe("runs (2,1,1), atyp 1, o 2");
  });

  it("function readout shows displacement, crossings and degree", () => {
    expect(functionReadout(fn({ relative_length: 2, degree: 1 }))).toBe("ℓ=2, L=0, d=1");
  });

  it("function readout shows a dash while the degree is undefined", () => {
    expect(functionReadout(fn({ relative_length: 1, degree: null }))).toBe("ℓ=1, L=0, d=-");
  });

  it("formats dot lists without spaces", () => {
    expect(formatDots([-4, 2, 4, 5])).toBe("[-4,2,4,5]");
  });

  it("exposes the empty-diagram message", () => {
    expect(EMPTY_DIAGRAM_ERROR).toBe("enter at least one dot position");
  });
});

describe("dot row", () => {
  it("pads the occupied span by the margin on both sides", () => {
    const cells = dotCells([0, 2], 2);
    expect(cells[0].pos).toBe(-2);
    expect(cells[cells.length - 1].pos).toBe(4);
    expect(cells.filter((c) => c.filled).map((c) => c.pos)).toEqual([0, 2]);
  });

  it("toggle adds a dot in sorted position", () => {
    expect(toggleDot([0, 2], 1)).toEqual([0, 1, 2]);
  });

  it("toggle removes an existing dot", () => {
    expect(toggleDot([0, 1, 2], 1)).toEqual([0, 2]);
  });
});

describe("plans", () => {
  const base: PlanDoc = {
    schema_version: "1",
    mu: [0, 2, 4],
    case: "typical",
    i: null,
    j: null,
    nu: null,
    mu_prime: null,
    options: [],
  };

  it("typical plans report completion", () => {
    expect(describePlan(base)).toBe("typical — resolution complete at degree 0");
  });

  it("split plans report both children", () => {
    const plan: PlanDoc = {
      ...base,
      case: "split",
      i: 0,
      j: 0,
      nu: [-1, 1, 4, 5],
      mu_prime: [-1, 2, 4, 5],
      options: [[0, 0]],
    };
    expect(describePlan(plan)).toBe("split at (i=0, j=0): nu [-1,1,4,5], mu' [-1,2,4,5]");
  });

  it("carry plans report the single child", () => {
    const plan: PlanDoc = {
      ...base,
      case: "carry",
      i: 1,
      j: 2,
      nu: [0, 1],
      mu_prime: null,
      options: [[1, 2]],
    };
    expect(describePlan(plan)).toBe("carry at (i=1, j=2): nu [0,1]");
  });
});

describe("resolution display", () => {
  const res = (summands: [number[], number][][]): ResolutionDoc => ({
    schema_version: "1",
    mu: [0, 1],
    max_degree: summands.length - 1,
    terms: summands.map((layer, degree) => ({
      degree,
      summands: layer.map(([lambda, multiplicity]) => ({ lambda, multiplicity })),
    })),
  });

  it("renders one line per degree with multiplicities", () => {
    const doc = res([[[[0, 1], 1]], [[[-1, 1], 2]]]);
    expect(termLine(doc.terms[0])).toBe("d0: [0,1]");
    expect(termLine(doc.terms[1])).toBe("d1: [-1,1]^2");
  });

  it("agreement ignores summand order", () => {
    const a = res([[[[0, 1], 1], [[-1, 2], 1]]]);
    const b = res([[[[-1, 2], 1], [[0, 1], 1]]]);
    expect(resolutionsAgree(a, b)).toBe(true);
  });

  it("agreement notices a multiplicity mismatch", () => {
    const a = res([[[[0, 1], 1]]]);
    const b = res([[[[0, 1], 2]]]);
    expect(resolutionsAgree(a, b)).toBe(false);
  });

  it("agreement notices a missing degree", () => {
    const a = res([[[[0, 1], 1]], [[[-1, 1], 1]]]);
    const b = res([[[[0, 1], 1]]]);
    expect(resolutionsAgree(a, b)).toBe(false);
  });
});
