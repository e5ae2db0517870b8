// Undo/redo over canonically serialized snapshots.
//
// Snapshots are stored as strings produced by `canonicalJson`, so undoing
// and redoing restores byte-identical state no matter what key order the
// objects were built in.

export function canonicalJson(value: unknown): string {
  return JSON.stringify(sortKeys(value));
}

function sortKeys(value: unknown): unknown {
  if (Array.isArray(value)) {
    return value.map(sortKeys);
  }
  if (value !== null && typeof value === "object") {
    const out: Record<string, unknown> = {};
    for (const key of Object.keys(value as Record<string, unknown>).sort()) {
      out[key] = sortKeys((value as Record<string, unknown>)[key]);
    }
    return out;
  }
  return value;
}

export class HistoryStore<T> {
  private past: string[] = [];
  private future: string[] = [];
  private present: string;

  constructor(initial: T) {
    this.present = canonicalJson(initial);
  }

  get current(): T {
    return JSON.parse(this.present) as T;
  }

  get serialized(): string {
    return this.present;
  }

  get canUndo(): boolean {
    return this.past.length > 0;
  }

  get canRedo(): boolean {
    return this.future.length > 0;
  }

  apply(next: T): void {
    const serialized = canonicalJson(next);
    if (serialized === this.present) {
      return;
    }
    this.past.push(this.present);
    this.present = serialized;
    this.future = [];
  }

  undo(): boolean {
    const previous = this.past.pop();
    if (previous === undefined) {
      return false;
    }
    this.future.push(this.present);
    this.present = previous;
    return true;
  }

  redo(): boolean {
    const next = this.future.pop();
    if (next === undefined) {
      return false;
    }
    this.past.push(this.present);
    this.present = next;
    return true;
  }
}
