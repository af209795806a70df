import type { ProcessorClient } from "./client.js";
import type { DiagnosticRecord, ProcessResponse, ProofRecord } from "./schema.js";
import { hasErrors, offsetAt, outputText, positionAt, type Position } from "./format.js";

export type PaneKind = "placeholder" | "output";

export interface Snapshot {
  source: string;
  cursor: Position;
  pane: PaneKind;
  proofs: ProofRecord[];
  diagnostics: DiagnosticRecord[];
  copyEnabled: boolean;
  backendDown: boolean;
  pending: boolean;
}

export interface ControllerOptions {
  client: ProcessorClient;
  onRender: (snapshot: Snapshot) => void;
  debounceMs?: number;
}

/**
 * Editor state machine, free of DOM so the timing behavior is testable.
 *
 * Requests carry monotone ids; a response is applied only when its id is
 * newer than everything applied before, and issuing a request aborts the
 * previous one, so at most one is in flight. Nothing in here ever mutates
 * the source except an explicit edit or a confirmed example load.
 */
export class EditorController {
  private readonly client: ProcessorClient;
  private readonly onRender: (snapshot: Snapshot) => void;
  private readonly debounceMs: number;

  private source = "";
  private cursorOffset = 0;
  private proofs: ProofRecord[] = [];
  private diagnostics: DiagnosticRecord[] = [];
  private showPlaceholder = true;
  private backendDown = false;
  private pending = false;

  private timer: ReturnType<typeof setTimeout> | null = null;
  private inflight: AbortController | null = null;
  private nextId = 0;
  private appliedId = 0;

  constructor(options: ControllerOptions) {
    this.client = options.client;
    this.onRender = options.onRender;
    this.debounceMs = options.debounceMs ?? 300;
  }

  snapshot(): Snapshot {
    return {
      source: this.source,
      cursor: positionAt(this.source, this.cursorOffset),
      pane: this.showPlaceholder ? "placeholder" : "output",
      proofs: this.proofs,
      diagnostics: this.diagnostics,
      copyEnabled: this.proofs.length > 0 && !hasErrors(this.diagnostics),
      backendDown: this.backendDown,
      pending: this.pending,
    };
  }

  /** A keystroke: retext, restart the debounce window. */
  edit(source: string, cursorOffset: number): void {
    this.source = source;
    this.cursorOffset = cursorOffset;
    this.cancelTimer();
    if (source.trim() === "") {
      // Empty document: drop whatever is running so a late response
      // cannot repopulate the pane, and show the placeholder.
      this.neutralizeInflight();
      this.showPlaceholder = true;
      this.proofs = [];
      this.diagnostics = [];
      this.render();
      return;
    }
    this.timer = setTimeout(() => this.issue(), this.debounceMs);
    this.render();
  }

  setCursorOffset(offset: number): void {
    this.cursorOffset = offset;
    this.render();
  }

  /**
   * Replace the pane with an example. Existing non-blank text must be
   * confirmed away; returns whether the load happened. Examples skip the
   * debounce window since there is nothing more to type.
   */
  loadExample(text: string, confirmReplace: () => boolean): boolean {
    if (this.source.trim() !== "" && this.source !== text && !confirmReplace()) {
      return false;
    }
    this.source = text;
    this.cursorOffset = 0;
    this.cancelTimer();
    this.issue();
    this.render();
    return true;
  }

  /** Move the cursor to a diagnostic's start; returns the offset to focus. */
  jumpTo(d: DiagnosticRecord): number {
    const offset = offsetAt(this.source, d.start_line, d.start_col);
    this.cursorOffset = offset;
    this.render();
    return offset;
  }

  /** The clipboard payload, or null while copying is not allowed. */
  copyText(): string | null {
    const snap = this.snapshot();
    return snap.copyEnabled ? outputText(this.proofs) : null;
  }

  private issue(): void {
    this.cancelTimer();
    this.neutralizeInflight();
    const id = ++this.nextId;
    const controller = new AbortController();
    this.inflight = controller;
    this.pending = true;
    this.render();
    this.client.process(this.source, controller.signal).then(
      (response) => this.applyResponse(id, response),
      (error) => this.applyFailure(id, error),
    );
  }

  private applyResponse(id: number, response: ProcessResponse): void {
    if (id <= this.appliedId) return;
    this.appliedId = id;
    if (id === this.nextId) {
      this.inflight = null;
      this.pending = false;
    }
    this.proofs = response.proofs;
    this.diagnostics = response.diagnostics;
    this.showPlaceholder = false;
    this.backendDown = false;
    this.render();
  }

  private applyFailure(id: number, error: unknown): void {
    if (error instanceof DOMException && error.name === "AbortError") return;
    if (id <= this.appliedId) return;
    this.appliedId = id;
    if (id === this.nextId) {
      this.inflight = null;
      this.pending = false;
    }
    // The pane keeps its last good content; only the banner changes.
    this.backendDown = true;
    this.render();
  }

  private cancelTimer(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
  }

  private neutralizeInflight(): void {
    if (this.inflight !== null) {
      this.inflight.abort();
      this.inflight = null;
    }
    // Anything already on the wire is older than whatever comes next.
    this.appliedId = this.nextId;
    this.pending = false;
  }

  private render(): void {
    this.onRender(this.snapshot());
  }
}
