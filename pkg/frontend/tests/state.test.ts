import { describe, expect, it } from "vitest";

import { canonicalJson, HistoryStore } from "../src/state";

describe("canonicalJson", () => {
  it("is independent of key insertion order", () => {
    const a = { mu: [0, 1], doc: { runs: [2], atypicality: 1 } };
    const b = { doc: { atypicality: 1, runs: [2] }, mu: [0, 1] };
    expect(canonicalJson(a)).toBe(canonicalJson(b));
  });

  it("sorts keys in nested arrays of objects", () => {
    const a = { terms: [{ degree: 0, summands: [] }] };
    const b = { terms: [{ summands: [], degree: 0 }] };
    expect(canonicalJson(a)).toBe(canonicalJson(b));
  });

  it("keeps arrays in order", () => {
    expect(canonicalJson([3, 1, 2])).toBe("[3,1,2]");
  });

  it("passes primitives through", () => {
    expect(canonicalJson(null)).toBe("null");
    expect(canonicalJson(7)).toBe("7");
  });
});

describe("HistoryStore", () => {
  it("starts with nothing to undo or redo", () => {
    const store = new HistoryStore({ mu: [0, 1] });
    expect(store.canUndo).toBe(false);
    expect(store.canRedo).toBe(false);
    expect(store.undo()).toBe(false);
    expect(store.redo()).toBe(false);
  });

  it("undo restores the previous snapshot byte for byte", () => {
    const store = new HistoryStore<{ mu: number[] }>({ mu: [0, 1] });
    const before = store.serialized;
    store.apply({ mu: [0, 1, 3] });
    expect(store.serialized).not.toBe(before);
    expect(store.undo()).toBe(true);
    expect(store.serialized).toBe(before);
  });

  it("redo restores the undone snapshot byte for byte", () => {
    const store = new HistoryStore<{ mu: number[] }>({ mu: [0, 1] });
    store.apply({ mu: [0, 1, 3] });
    const after = store.serialized;
    store.undo();
    expect(store.redo()).toBe(true);
    expect(store.serialized).toBe(after);
    expect(store.current.mu).toEqual([0, 1, 3]);
  });

  it("applying an equivalent state with different key order is a no-op", () => {
    const store = new HistoryStore<Record<string, unknown>>({ a: 1, b: 2 });
    store.apply({ b: 2, a: 1 });
    expect(store.canUndo).toBe(false);
  });

  it("a new apply clears the redo stack", () => {
    const store = new HistoryStore<{ mu: number[] }>({ mu: [0] });
    store.apply({ mu: [0, 1] });
    store.undo();
    store.apply({ mu: [0, 2] });
    expect(store.canRedo).toBe(false);
    expect(store.current.mu).toEqual([0, 2]);
  });

  it("supports a long undo chain back to the start", () => {
    const store = new HistoryStore<{ k: number }>({ k: 0 });
    const snapshots = [store.serialized];
    for (let k = 1; k <= 5; k++) {
      store.apply({ k });
      snapshots.push(store.serialized);
    }
    for (let k = 4; k >= 0; k--) {
      expect(store.undo()).toBe(true);
      expect(store.serialized).toBe(snapshots[k]);
    }
    expect(store.canUndo).toBe(false);
    for (let k = 1; k <= 5; k++) {
      expect(store.redo()).toBe(true);
      expect(store.serialized).toBe(snapshots[k]);
    }
  });
});
