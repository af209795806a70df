"""Local JSON service exposing the parse/check/export pipeline over HTTP.

POST /process takes {"source": <script text>} and returns, for every proof
that verifies, its Isar text, name map and conventional rendering, plus all
diagnostics for the document.  GET /health reports liveness.  The server is
unauthenticated and meant for local use; permissive CORS headers let a page
served from anywhere talk to it.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Any

from .codegen import emit_isar
from .diagnostics import Diagnostic, to_machine
from .printers import lenient_formatters
from .surface import ParsedProof, parse_document

SCHEMA_VERSION = 1
DEFAULT_PORT = 7878


def check_parsed_proof(proof: ParsedProof) -> list[Diagnostic]:
    """Check one parsed proof, rendering states with its own names."""
    from .calculus import check_script

    fmt_formula, fmt_sequent = lenient_formatters(proof.name_map)
    return check_script(
        proof.script, fmt_formula, fmt_sequent, fallback_span=proof.span
    )


def _span_record(proof: ParsedProof) -> dict[str, int]:
    return {
        "start_line": proof.span.start_line,
        "start_col": proof.span.start_col,
        "end_line": proof.span.end_line,
        "end_col": proof.span.end_col,
    }


def process_source(source: str) -> dict[str, Any]:
    """Parse, check and export a document; the /process response body."""
    doc = parse_document(source)
    diagnostics = list(doc.diagnostics)
    proofs = []
    for proof in doc.proofs:
        proof_diags = check_parsed_proof(proof)
        diagnostics.extend(proof_diags)
        if any(d.is_error for d in proof_diags):
            continue
        generated = emit_isar(proof.script, proof.name_map)
        proofs.append(
            {
                "isar": generated.isar_text,
                "name_map": {
                    "functions": dict(proof.name_map.functions),
                    "predicates": dict(proof.name_map.predicates),
                },
                "conventional": generated.conventional_rendering,
                "span": _span_record(proof),
            }
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "proofs": proofs,
        "diagnostics": [to_machine(d) for d in diagnostics],
    }


class _Handler(BaseHTTPRequestHandler):
    def log_message(self, format: str, *args: Any) -> None:  # noqa: A002
        pass

    def _send_json(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self._send_cors()
        self.end_headers()
        self.wfile.write(body)

    def _send_cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self._send_cors()
        self.end_headers()

    def do_GET(self) -> None:
        if self.path == "/health":
            self._send_json(200, {"status": "ok"})
        else:
            self._send_json(404, {"error": "not found"})

    def do_POST(self) -> None:
        if self.path != "/process":
            self._send_json(404, {"error": "not found"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            raw = self.rfile.read(length)
            payload = json.loads(raw.decode("utf-8"))
        except (ValueError, UnicodeDecodeError):
            self._send_json(400, {"error": "request body must be valid JSON"})
            return
        if not isinstance(payload, dict) or not isinstance(payload.get("source"), str):
            self._send_json(400, {"error": 'request must be {"source": <text>}'})
            return
        self._send_json(200, process_source(payload["source"]))


def make_server(port: int = DEFAULT_PORT) -> ThreadingHTTPServer:
    return ThreadingHTTPServer(("127.0.0.1", port), _Handler)


def serve(port: int = DEFAULT_PORT) -> None:
    server = make_server(port)
    host, actual_port = server.server_address[:2]
    print(f"listening on http://{host}:{actual_port} (POST /process, GET /health)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
