// DOM glue for the explorer's three panels.  All mathematics is requested
// from the engine service; this file only wires events to the logic
// modules and repaints.

import { ApiError, Client, FunctionDoc } from "./api";
import { DiagramEditor } from "./diagramEditor";
import { MoveWorkbench } from "./moveWorkbench";
import {
  arrowList,
  describePlan,
  diagramReadout,
  dotCells,
  formatDots,
  functionReadout,
  termLine,
} from "./render";
import { Stepper } from "./stepper";

const client = new Client("");
const editor = new DiagramEditor(client);
const workbench = new MoveWorkbench(client);
const stepper = new Stepper(client);

const $ = <T extends HTMLElement>(selector: string): T => {
  const el = document.querySelector(selector);
  if (!el) throw new Error(`missing element ${selector}`);
  return el as T;
};

const editorText = $<HTMLInputElement>("#editor-text");
const editorRow = $<HTMLDivElement>("#editor-row");
const editorReadout = $<HTMLDivElement>("#editor-readout");
const editorError = $<HTMLDivElement>("#editor-error");
const editorAscii = $<HTMLPreElement>("#editor-ascii");

const benchFunction = $<HTMLPreElement>("#bench-function");
const benchReadout = $<HTMLDivElement>("#bench-readout");
const benchMoves = $<HTMLDivElement>("#bench-moves");
const benchTargets = $<HTMLDivElement>("#bench-targets");

const stepPlanBox = $<HTMLDivElement>("#step-plan");
const stepOptions = $<HTMLDivElement>("#step-options");
const compareVerdict = $<HTMLDivElement>("#compare-verdict");

function showError(err: unknown, box: HTMLElement): void {
  box.textContent = err instanceof ApiError ? `server: ${err.message}` : String(err);
}

// ---------------------------------------------------------------------------
// editor panel

function paintEditor(): void {
  const state = editor.state;
  editorError.textContent = editor.error ?? "";
  editorText.value = formatDots(state.mu);
  editorRow.replaceChildren(
    ...dotCells(state.mu).map((cell) => {
      const button = document.createElement("button");
      button.textContent = cell.filled ? "●" : "·";
      button.title = String(cell.pos);
      button.className = cell.filled ? "dot filled" : "dot";
      button.addEventListener("click", () => {
        editor.toggle(cell.pos).then(paintEditor).catch((e) => showError(e, editorError));
      });
      return button;
    }),
  );
  if (state.doc) {
    editorReadout.textContent = diagramReadout(state.doc);
    editorAscii.textContent = state.doc.ascii;
  }
}

editorText.addEventListener("change", () => {
  editor.setText(editorText.value).then(paintEditor).catch((e) => showError(e, editorError));
});
$("#editor-undo").addEventListener("click", () => {
  editor.undo();
  paintEditor();
});
$("#editor-redo").addEventListener("click", () => {
  editor.redo();
  paintEditor();
});

// ---------------------------------------------------------------------------
// workbench panel

async function paintBench(): Promise<void> {
  const f = workbench.current;
  if (f === null) {
    benchFunction.textContent = "(no function loaded)";
    benchReadout.textContent = "";
    benchMoves.replaceChildren();
    return;
  }
  benchFunction.textContent =
    `source ${formatDots(f.source)}\ntarget ${formatDots(f.target)}\n` +
    arrowList(f).join("\n");
  benchReadout.textContent = functionReadout(f);
  const moves = await workbench.highlights();
  benchMoves.replaceChildren(
    ...moves.map((move) => {
      const button = document.createElement("button");
      button.textContent =
        move.kind + " @ " + move.j + (move.k === undefined ? "" : `,${move.k}`);
      button.addEventListener("click", () => {
        workbench.apply(move).then(paintBench).catch((e) => showError(e, benchReadout));
      });
      return button;
    }),
  );
}

$("#bench-load").addEventListener("click", () => {
  workbench
    .loadIdentity(editor.state.mu)
    .then(paintBench)
    .catch((e) => showError(e, benchReadout));
});
$("#bench-undo").addEventListener("click", () => {
  workbench.undo();
  void paintBench();
});
$("#bench-redo").addEventListener("click", () => {
  workbench.redo();
  void paintBench();
});

$("#bench-list").addEventListener("click", async () => {
  try {
    const depth = Number(($("#bench-depth") as HTMLInputElement).value || "4");
    const listing = await client.functions(editor.state.mu, undefined, depth);
    benchTargets.replaceChildren(
      ...listing.functions.map((f: FunctionDoc) => {
        const button = document.createElement("button");
        button.textContent = `${formatDots(f.target)} (${functionReadout(f)})`;
        button.addEventListener("click", () => {
          workbench.replay(f).then(paintBench).catch((e) => showError(e, benchReadout));
        });
        return button;
      }),
    );
  } catch (e) {
    showError(e, benchReadout);
  }
});

// ---------------------------------------------------------------------------
// stepper panel

function paintOptions(options: [number, number][]): void {
  stepOptions.replaceChildren(
    ...options.map(([i, j]) => {
      const button = document.createElement("button");
      button.textContent = `step at (i=${i}, j=${j})`;
      button.addEventListener("click", () => {
        stepper
          .choose(i, j)
          .then((plan) => {
            stepPlanBox.textContent = describePlan(plan);
          })
          .catch((e) => showError(e, stepPlanBox));
      });
      return button;
    }),
  );
}

$("#step-load").addEventListener("click", async () => {
  try {
    const plan = await stepper.plan(editor.state.mu);
    stepPlanBox.textContent = describePlan(plan);
    paintOptions(plan.options);
  } catch (e) {
    showError(e, stepPlanBox);
  }
});

$("#compare-run").addEventListener("click", async () => {
  try {
    const options = stepper.state.plan?.options ?? [];
    if (options.length < 2) {
      compareVerdict.textContent = "need at least two sites to compare";
      return;
    }
    const depth = Number(($("#compare-depth") as HTMLInputElement).value || "3");
    const result = await stepper.comparePaths(options[0], options[1], depth);
    const lines = result.first.terms.map(termLine).join("\n");
    compareVerdict.textContent =
      (result.agree ? "paths agree" : "PATHS DIFFER") + "\n" + lines;
  } catch (e) {
    showError(e, compareVerdict);
  }
});

// ---------------------------------------------------------------------------

editor.load().then(paintEditor).catch((e) => showError(e, editorError));
