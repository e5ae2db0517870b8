// Algorithm stepper logic: show the default step plan for a diagram, let
// the user pick an alternate valid site, and compare the resolutions two
// different site choices lead to.  All plans and resolutions come from the
// server.

import { Client, PlanDoc, ResolutionDoc } from "./api";
import { resolutionsAgree } from "./render";
import { HistoryStore } from "./state";

export interface StepperState {
  mu: number[];
  plan: PlanDoc | null;
}

export interface PathComparison {
  first: ResolutionDoc;
  second: ResolutionDoc;
  agree: boolean;
}

export class Stepper {
  readonly history: HistoryStore<StepperState>;

  constructor(private readonly client: Client, initial: number[] = [0, 1]) {
    this.history = new HistoryStore<StepperState>({ mu: initial, plan: null });
  }

  get state(): StepperState {
    return this.history.current;
  }

  async plan(mu: number[]): Promise<PlanDoc> {
    const plan = await this.client.stepPlan(mu);
    this.history.apply({ mu: plan.mu, plan });
    return plan;
  }

  async choose(i: number, j: number, maxDegree?: number): Promise<PlanDoc> {
    const plan = await this.client.stepCustom(this.state.mu, i, j, maxDegree);
    this.history.apply({ mu: plan.mu, plan });
    return plan;
  }

  // Compare-paths panel: run the resolution from two different root sites
  // and report whether the per-degree summands agree (they must).
  async comparePaths(
    a: [number, number],
    b: [number, number],
    maxDegree: number,
  ): Promise<PathComparison> {
    const mu = this.state.mu;
    const first = await this.client.stepCustom(mu, a[0], a[1], maxDegree);
    const second = await this.client.stepCustom(mu, b[0], b[1], maxDegree);
    if (first.resolution === undefined || second.resolution === undefined) {
      throw new Error("server did not include the continued resolutions");
    }
    return {
      first: first.resolution,
      second: second.resolution,
      agree: resolutionsAgree(first.resolution, second.resolution),
    };
  }

  undo(): boolean {
    return this.history.undo();
  }

  redo(): boolean {
    return this.history.redo();
  }
}
