import type { DiagnosticRecord, ProofRecord } from "./schema.js";

/** 1-based line/column, the convention used by spans and the status bar. */
export interface Position {
  line: number;
  col: number;
}

export function positionAt(text: string, offset: number): Position {
  const clamped = Math.max(0, Math.min(offset, text.length));
  let line = 1;
  let lineStart = 0;
  for (let i = 0; i < clamped; i++) {
    if (text.charCodeAt(i) === 10) {
      line++;
      lineStart = i + 1;
    }
  }
  return { line, col: clamped - lineStart + 1 };
}

/** Inverse of positionAt; out-of-range positions clamp to the nearest offset. */
export function offsetAt(text: string, line: number, col: number): number {
  let current = 1;
  let lineStart = 0;
  while (current < line) {
    const next = text.indexOf("\n", lineStart);
    if (next < 0) break;
    lineStart = next + 1;
    current++;
  }
  let lineEnd = text.indexOf("\n", lineStart);
  if (lineEnd < 0) lineEnd = text.length;
  const width = lineEnd - lineStart;
  return lineStart + Math.max(0, Math.min(col - 1, width));
}

/**
 * The exact text shown in the output pane and written to the clipboard;
 * keeping a single definition is what makes the copy byte-exact.
 */
export function outputText(proofs: ProofRecord[]): string {
  return proofs.map((p) => p.isar).join("\n");
}

export function hasErrors(diagnostics: DiagnosticRecord[]): boolean {
  return diagnostics.some((d) => d.severity === "error");
}

export function diagnosticLabel(d: DiagnosticRecord): string {
  return `${d.severity}[${d.category}] line ${d.start_line}:${d.start_col} — ${d.message}`;
}
