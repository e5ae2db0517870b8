// Diagram editor logic: a dot list edited by clicks or text entry, with
// every change parsed (and thereby validated) by the server before it is
// committed to the undo history.

import { ApiError, Client, DiagramDoc } from "./api";
import { EMPTY_DIAGRAM_ERROR, toggleDot } from "./render";
import { HistoryStore } from "./state";

export interface EditorState {
  mu: number[];
  doc: DiagramDoc | null;
}

export class DiagramEditor {
  readonly history: HistoryStore<EditorState>;
  error: string | null = null;

  constructor(private readonly client: Client, initial: number[] = [0, 1]) {
    this.history = new HistoryStore<EditorState>({ mu: initial, doc: null });
  }

  get state(): EditorState {
    return this.history.current;
  }

  async load(): Promise<DiagramDoc> {
    const doc = await this.client.parseDots(this.state.mu);
    this.history.apply({ mu: doc.mu, doc });
    this.error = null;
    return doc;
  }

  async setText(text: string): Promise<DiagramDoc | null> {
    if (text.trim() === "" || text.trim() === "[]") {
      this.error = EMPTY_DIAGRAM_ERROR;
      return null;
    }
    try {
      const doc = await this.client.parseText(text);
      this.history.apply({ mu: doc.mu, doc });
      this.error = null;
      return doc;
    } catch (err) {
      if (err instanceof ApiError) {
        this.error = err.message;
        return null;
      }
      throw err;
    }
  }

  async toggle(pos: number): Promise<DiagramDoc | null> {
    const next = toggleDot(this.state.mu, pos);
    if (next.length === 0) {
      this.error = EMPTY_DIAGRAM_ERROR;
      return null;
    }
    const doc = await this.client.parseDots(next);
    this.history.apply({ mu: doc.mu, doc });
    this.error = null;
    return doc;
  }

  undo(): boolean {
    return this.history.undo();
  }

  redo(): boolean {
    return this.history.redo();
  }
}
