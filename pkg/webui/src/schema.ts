/** Wire types for the checking service; field names mirror the JSON exactly. */

export const SCHEMA_VERSION = 1;

export interface Span {
  start_line: number;
  start_col: number;
  end_line: number;
  end_col: number;
}

export interface NameMapRecord {
  functions: Record<string, number>;
  predicates: Record<string, number>;
}

export interface ProofRecord {
  isar: string;
  name_map: NameMapRecord;
  conventional: string;
  span: Span;
}

export type DiagnosticSeverity = "error" | "warning";

export interface DiagnosticRecord {
  category: string;
  severity: DiagnosticSeverity;
  message: string;
  start_line: number;
  start_col: number;
  end_line: number;
  end_col: number;
  expected?: string;
  actual?: string;
}

export interface ProcessResponse {
  schema_version: number;
  proofs: ProofRecord[];
  diagnostics: DiagnosticRecord[];
}
