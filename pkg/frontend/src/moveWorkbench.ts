// Move workbench logic: hold one function, ask the server which rewrites
// apply (those become the highlighted sites), apply one, or replay a whole
// recorded trace step by step.  The function object is only ever replaced
// by server responses.

import { Client, FunctionDoc, MoveDoc } from "./api";
import { HistoryStore } from "./state";

export function identityDoc(dots: number[]): FunctionDoc {
  return {
    source: [...dots],
    target: [...dots],
    pairing: [...dots],
    trace: [],
    trace_start: [...dots],
    relative_length: 0,
    crossing_count: 0,
    degree: 0,
  };
}

export class MoveWorkbench {
  readonly history: HistoryStore<FunctionDoc | null>;

  constructor(private readonly client: Client) {
    this.history = new HistoryStore<FunctionDoc | null>(null);
  }

  get current(): FunctionDoc | null {
    return this.history.current;
  }

  // Start from the identity on a diagram; the server echoes it back through
  // the parse endpoint first so even the seed state is server-confirmed.
  async loadIdentity(dots: number[]): Promise<FunctionDoc> {
    const parsed = await this.client.parseDots(dots);
    const f = identityDoc(parsed.mu);
    this.history.apply(f);
    return f;
  }

  async highlights(): Promise<MoveDoc[]> {
    const f = this.current;
    if (f === null) {
      return [];
    }
    return (await this.client.applicableMoves(f)).moves;
  }

  async apply(move: MoveDoc): Promise<FunctionDoc> {
    const f = this.current;
    if (f === null) {
      throw new Error("no function loaded");
    }
    const out = (await this.client.applyMove(f, move)).function;
    this.history.apply(out);
    return out;
  }

  // Replay a recorded function from its trace start, one server-applied
  // move at a time; returns every intermediate state including the seed.
  async replay(f: FunctionDoc): Promise<FunctionDoc[]> {
    if (f.trace_start === null) {
      throw new Error("function has no replayable trace");
    }
    let current = identityDoc(f.trace_start);
    this.history.apply(current);
    const states = [current];
    for (const move of f.trace) {
      current = (await this.client.applyMove(current, move)).function;
      this.history.apply(current);
      states.push(current);
    }
    return states;
  }

  undo(): boolean {
    return this.history.undo();
  }

  redo(): boolean {
    return this.history.redo();
  }
}
