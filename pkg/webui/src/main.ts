import { DEFAULT_BASE_URL, HttpProcessorClient } from "./client.js";
import { EditorController, type Snapshot } from "./controller.js";
import { EXAMPLES } from "./examples.js";
import { diagnosticLabel, outputText } from "./format.js";

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const editor = byId<HTMLTextAreaElement>("editor");
const isarPane = byId<HTMLPreElement>("isar");
const proofMeta = byId<HTMLDivElement>("proof-meta");
const diagnosticsList = byId<HTMLUListElement>("diagnostics");
const placeholder = byId<HTMLDivElement>("placeholder");
const banner = byId<HTMLDivElement>("banner");
const status = byId<HTMLSpanElement>("status");
const copyButton = byId<HTMLButtonElement>("copy");
const copyNote = byId<HTMLSpanElement>("copy-note");
const helpPanel = byId<HTMLElement>("help");
const helpToggle = byId<HTMLAnchorElement>("help-toggle");
const exampleList = byId<HTMLDivElement>("example-list");

const params = new URLSearchParams(window.location.search);
const client = new HttpProcessorClient(params.get("backend") ?? DEFAULT_BASE_URL);

function render(snapshot: Snapshot): void {
  if (editor.value !== snapshot.source) {
    editor.value = snapshot.source;
  }

  status.textContent = `${snapshot.cursor.line}:${snapshot.cursor.col}`;
  banner.hidden = !snapshot.backendDown;
  placeholder.hidden = snapshot.pane !== "placeholder";
  copyButton.disabled = !snapshot.copyEnabled;

  const output = snapshot.pane === "output" ? outputText(snapshot.proofs) : "";
  if (isarPane.textContent !== output) {
    isarPane.textContent = output;
  }

  proofMeta.replaceChildren(
    ...snapshot.proofs.map((proof) => {
      const head = document.createElement("div");
      head.className = "proof-head";
      head.textContent = proof.conventional;
      return head;
    }),
  );

  diagnosticsList.replaceChildren(
    ...snapshot.diagnostics.map((d) => {
      const item = document.createElement("li");
      const link = document.createElement("button");
      link.type = "button";
      link.className = `diagnostic ${d.severity}`;
      link.textContent = diagnosticLabel(d);
      link.addEventListener("click", () => {
        const offset = controller.jumpTo(d);
        editor.focus();
        editor.setSelectionRange(offset, offset);
      });
      item.append(link);
      if (d.expected || d.actual) {
        const detail = document.createElement("pre");
        detail.className = "diagnostic-detail";
        detail.textContent = [
          d.expected ? `expected: ${d.expected}` : "",
          d.actual ? `actual:   ${d.actual}` : "",
        ]
          .filter(Boolean)
          .join("\n");
        item.append(detail);
      }
      return item;
    }),
  );
}

const controller = new EditorController({ client, onRender: render });

editor.addEventListener("input", () => {
  controller.edit(editor.value, editor.selectionStart);
});
for (const event of ["keyup", "click", "select"]) {
  editor.addEventListener(event, () => {
    controller.setCursorOffset(editor.selectionStart);
  });
}

copyButton.addEventListener("click", async () => {
  const payload = controller.copyText();
  if (payload === null) return;
  try {
    await navigator.clipboard.writeText(payload);
    copyNote.textContent = "Copied.";
  } catch {
    copyNote.textContent = "Clipboard unavailable.";
  }
  setTimeout(() => {
    copyNote.textContent = "";
  }, 1500);
});

helpToggle.addEventListener("click", (event) => {
  event.preventDefault();
  helpPanel.hidden = !helpPanel.hidden;
});

exampleList.replaceChildren(
  ...EXAMPLES.map((example) => {
    const card = document.createElement("div");
    card.className = "example";
    const title = document.createElement("h3");
    title.textContent = example.title;
    const blurb = document.createElement("p");
    blurb.textContent = example.blurb;
    const load = document.createElement("button");
    load.type = "button";
    load.textContent = "Load into editor";
    load.addEventListener("click", () => {
      const loaded = controller.loadExample(example.text, () =>
        window.confirm("Replace the current script with this example?"),
      );
      if (loaded) {
        helpPanel.hidden = true;
        editor.focus();
      }
    });
    card.append(title, blurb, load);
    return card;
  }),
);

controller.edit("", 0);
