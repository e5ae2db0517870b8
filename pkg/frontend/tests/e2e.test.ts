// End-to-end: spawns the engine's HTTP service and drives the three panel
// controllers against it, the same way main.ts does in the browser.

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiError, Client } from "../src/api";
import { DiagramEditor } from "../src/diagramEditor";
import { MoveWorkbench } from "../src/moveWorkbench";
import {
  describePlan,
  diagramReadout,
  EMPTY_DIAGRAM_ERROR,
  functionReadout,
} from "../src/render";
import { canonicalJson } from "../src/state";
import { Stepper } from "../src/stepper";

const PORT = 8900 + (process.pid % 100);
const BASE = `http://127.0.0.1:${PORT}`;
const client = new Client(BASE);
let server: ChildProcess;

beforeAll(async () => {
  server = spawn("python3", ["-m", "kacres.cli", "serve", "--port", String(PORT)], {
    stdio: "ignore",
  });
  for (let attempt = 0; attempt < 200; attempt++) {
    try {
      const doc = await client.health();
      if (doc.status === "ok") return;
    } catch {
      // still starting up
    }
    await new Promise((resolve) => setTimeout(resolve, 100));
  }
  throw new Error(`service on ${BASE} never became healthy`);
}, 30000);

afterAll(() => {
  server.kill();
});

describe("diagram editor", () => {
  it("parses typed text and shows the server's invariants", async () => {
    const editor = new DiagramEditor(client);
    await editor.setText("[-4,2,4,5]");
    expect(editor.error).toBeNull();
    expect(editor.state.mu).toEqual([-4, 2, 4, 5]);
    expect(diagramReadout(editor.state.doc!)).toBe("runs (2,1,1), atyp 1, o 2");
  });

  it("rejects empty input inline without contacting the server", async () => {
    // A client pointed at a dead port would throw on any request, so
    // finishing without an exception proves nothing was sent.
    const dead = new DiagramEditor(new Client("http://127.0.0.1:9"));
    await dead.setText("");
    expect(dead.error).toBe(EMPTY_DIAGRAM_ERROR);
    await dead.setText("[]");
    expect(dead.error).toBe(EMPTY_DIAGRAM_ERROR);
  });

  it("surfaces a server parse rejection inline and keeps the old state", async () => {
    const editor = new DiagramEditor(client);
    await editor.setText("[0,2]");
    await editor.setText("[2,2]");
    expect(editor.error).not.toBeNull();
    expect(editor.state.mu).toEqual([0, 2]);
  });

  it("toggling round-trips through the server and undo restores bytes", async () => {
    const editor = new DiagramEditor(client);
    await editor.setText("[0,2]");
    const before = editor.history.serialized;
    await editor.toggle(1);
    expect(editor.state.mu).toEqual([0, 1, 2]);
    const after = editor.history.serialized;
    expect(editor.undo()).toBe(true);
    expect(editor.history.serialized).toBe(before);
    expect(editor.redo()).toBe(true);
    expect(editor.history.serialized).toBe(after);
  });
});

describe("move workbench", () => {
  it("highlights the single move available on the smallest pair", async () => {
    const bench = new MoveWorkbench(client);
    await bench.loadIdentity([0, 1]);
    const moves = await bench.highlights();
    expect(moves).toHaveLength(1);
    expect(moves[0].kind).toBe("Move3");
    expect(moves[0].j).toBe(1);
  });

  it("applying the move updates the readout, undo restores the identity", async () => {
    const bench = new MoveWorkbench(client);
    await bench.loadIdentity([0, 1]);
    const identity = bench.history.serialized;
    const [move] = await bench.highlights();
    await bench.apply(move);
    expect(functionReadout(bench.current!)).toBe("ℓ=2, L=0, d=1");
    expect(bench.undo()).toBe(true);
    expect(bench.history.serialized).toBe(identity);
    expect(functionReadout(bench.current!)).toBe("ℓ=0, L=0, d=0");
    expect(bench.redo()).toBe(true);
    expect(functionReadout(bench.current!)).toBe("ℓ=2, L=0, d=1");
  });

  it("replays a listed function move by move from its recorded start", async () => {
    const listing = await client.functions([3, 4, 5, 7, 8], [0, 1, 3, 5, 6]);
    expect(listing.functions).toHaveLength(2);
    const f4 = listing.functions.find((f) => f.degree === 4);
    expect(f4).toBeDefined();
    expect(functionReadout(f4!)).toBe("ℓ=12, L=2, d=4");

    const bench = new MoveWorkbench(client);
    const states = await bench.replay(f4!);
    expect(states).toHaveLength(f4!.trace.length + 1);
    expect(states[0].degree).toBe(0);
    // Rebuilding a function only raises the degree at its Move3 steps.
    for (let k = 0; k < f4!.trace.length; k++) {
      const bump = f4!.trace[k].kind === "Move3" ? 1 : 0;
      expect(states[k + 1].degree).toBe(states[k].degree! + bump);
    }
    expect(canonicalJson(states[states.length - 1])).toBe(canonicalJson(f4));
  });
});

describe("resolution stepper", () => {
  it("reports typical diagrams as already complete", async () => {
    const stepper = new Stepper(client);
    const plan = await stepper.plan([0, 2, 4]);
    expect(describePlan(plan)).toBe("typical — resolution complete at degree 0");
    expect(plan.options).toEqual([]);
  });

  it("two starting sites lead to the same resolution", async () => {
    const stepper = new Stepper(client);
    const plan = await stepper.plan([0, 1, 4, 5]);
    expect(plan.options).toEqual([
      [0, 0],
      [4, 4],
    ]);
    const result = await stepper.comparePaths([0, 0], [4, 4], 3);
    expect(result.agree).toBe(true);
    expect(result.first.terms).toHaveLength(4);
  });

  it("choosing a site not offered by the plan is a 422", async () => {
    await expect(client.stepCustom([0, 1], 3, 3)).rejects.toMatchObject({
      status: 422,
    });
    try {
      await client.stepCustom([0, 1], 3, 3);
    } catch (err) {
      expect(err).toBeInstanceOf(ApiError);
      expect((err as ApiError).message).toContain("(3, 3)");
    }
  });

  it("undo walks back through planned steps byte for byte", async () => {
    const stepper = new Stepper(client);
    await stepper.plan([0, 1, 4, 5]);
    const planned = stepper.history.serialized;
    await stepper.choose(4, 4);
    expect(stepper.history.serialized).not.toBe(planned);
    expect(stepper.undo()).toBe(true);
    expect(stepper.history.serialized).toBe(planned);
  });
});
