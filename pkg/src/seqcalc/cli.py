"""Command line interface: check, unshorten, countermodel and serve.

Exit codes: 0 success, 1 verification failure (or a countermodel found),
2 I/O, usage or syntax failure, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .codegen import HINT_STYLES, assemble_unshortened, emit_isar
from .diagnostics import Category, Diagnostic, render_human, to_machine
from .names import NameMap
from .semantics import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    FiniteInterpretation,
    find_countermodel,
)
from .server import SCHEMA_VERSION, check_parsed_proof, serve
from .surface import parse_document, parse_formula_text

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_IO = 2
EXIT_BUDGET = 3


def _print_diagnostics(diags: list[Diagnostic], source: str, path: str | None = None) -> None:
    for d in diags:
        prefix = f"{path}: " if path else ""
        print(f"{prefix}{render_human(d, source)}", file=sys.stderr)


def _worst_exit(diags: list[Diagnostic]) -> int:
    if any(d.category is Category.SYNTAX_ERROR for d in diags):
        return EXIT_IO
    if any(d.is_error for d in diags):
        return EXIT_VERIFY
    return EXIT_OK


def _read_file(path: str) -> str | None:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as err:
        print(f"cannot read {path}: {err.strerror or err}", file=sys.stderr)
        return None


def _check_file(source: str) -> tuple[int, list[Diagnostic]]:
    doc = parse_document(source)
    diags = list(doc.diagnostics)
    for proof in doc.proofs:
        diags.extend(check_parsed_proof(proof))
    return len(doc.proofs), diags


def cmd_check(args: argparse.Namespace) -> int:
    exit_code = EXIT_OK
    results: list[dict[str, Any]] = []
    for path in args.paths:
        source = _read_file(path)
        if source is None:
            exit_code = max(exit_code, EXIT_IO)
            results.append({"path": path, "ok": False, "proofs": 0, "diagnostics": []})
            continue
        n_proofs, diags = _check_file(source)
        file_exit = _worst_exit(diags)
        exit_code = max(exit_code, file_exit)
        if args.json:
            results.append(
                {
                    "path": path,
                    "ok": file_exit == EXIT_OK,
                    "proofs": n_proofs,
                    "diagnostics": [to_machine(d) for d in diags],
                }
            )
        else:
            _print_diagnostics(diags, source, path)
            if file_exit == EXIT_OK:
                plural = "s" if n_proofs != 1 else ""
                print(f"{path}: {n_proofs} proof{plural} verified")
    if args.json:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "ok": exit_code == EXIT_OK,
            "results": results,
        }
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    return exit_code


def cmd_unshorten(args: argparse.Namespace) -> int:
    source = _read_file(args.path)
    if source is None:
        return EXIT_IO
    doc = parse_document(source)
    diags = list(doc.diagnostics)
    rendered: list[str] = []
    proof_records: list[dict[str, Any]] = []
    for proof in doc.proofs:
        proof_diags = check_parsed_proof(proof)
        diags.extend(proof_diags)
        has_error = any(d.is_error for d in proof_diags)
        if has_error and not args.force:
            continue
        generated = emit_isar(proof.script, proof.name_map, force=True, hint_style=args.hint_style)
        n_warnings = sum(1 for d in proof_diags if not d.is_error)
        rendered.append(assemble_unshortened(generated, warnings=n_warnings))
        proof_records.append(
            {
                "isar": generated.isar_text,
                "name_map": {
                    "functions": dict(proof.name_map.functions),
                    "predicates": dict(proof.name_map.predicates),
                },
                "conventional": generated.conventional_rendering,
            }
        )
    exit_code = _worst_exit(diags)
    if args.json:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "ok": exit_code == EXIT_OK,
            "proofs": proof_records,
            "diagnostics": [to_machine(d) for d in diags],
        }
        print(json.dumps(payload, ensure_ascii=False, indent=2))
        return exit_code
    _print_diagnostics(diags, source, args.path)
    if rendered:
        print("\n".join(rendered), end="")
    return exit_code


def _format_args(values: tuple[int, ...]) -> str:
    return f"({', '.join(str(v) for v in values)})" if values else ""


def render_countermodel(interp: FiniteInterpretation, nm: NameMap) -> str:
    elements = ", ".join(str(x) for x in interp.domain)
    lines = [f"countermodel with domain size {interp.domain_size} (elements {elements})"]
    for n, value in sorted(interp.env.items()):
        lines.append(f"  variable {n} = {value}")
    for (i, arity), table in interp.fun_tables.items():
        try:
            name = nm.fun_name(i)
        except KeyError:
            name = f"f{i}"
        for args, value in table.items():
            lines.append(f"  {name}{_format_args(args)} = {value}")
    for (i, arity), table in interp.pred_tables.items():
        try:
            name = nm.pred_name(i)
        except KeyError:
            name = f"p{i}"
        for args, value in table.items():
            lines.append(f"  {name}{_format_args(args)} = {'true' if value else 'false'}")
    return "\n".join(lines)


def countermodel_record(interp: FiniteInterpretation, nm: NameMap) -> dict[str, Any]:
    def fun_entry(key: tuple[int, int], table: dict) -> dict[str, Any]:
        i, arity = key
        try:
            name = nm.fun_name(i)
        except KeyError:
            name = None
        return {
            "id": i,
            "arity": arity,
            "name": name,
            "table": [{"args": list(a), "value": v} for a, v in table.items()],
        }

    def pred_entry(key: tuple[int, int], table: dict) -> dict[str, Any]:
        i, arity = key
        try:
            name = nm.pred_name(i)
        except KeyError:
            name = None
        return {
            "id": i,
            "arity": arity,
            "name": name,
            "table": [{"args": list(a), "value": v} for a, v in table.items()],
        }

    return {
        "domain_size": interp.domain_size,
        "env": {str(n): v for n, v in sorted(interp.env.items())},
        "functions": [fun_entry(k, t) for k, t in interp.fun_tables.items()],
        "predicates": [pred_entry(k, t) for k, t in interp.pred_tables.items()],
    }


def cmd_countermodel(args: argparse.Namespace) -> int:
    formula, nm, diags = parse_formula_text(args.formula)
    _print_diagnostics(diags, args.formula)
    if formula is None:
        return EXIT_IO
    try:
        result = find_countermodel(formula, args.max_domain, args.budget)
    except BudgetExceededError as err:
        if args.json:
            payload = {
                "schema_version": SCHEMA_VERSION,
                "countermodel": None,
                "budget_exceeded": {"count": err.count, "budget": err.budget},
            }
            print(json.dumps(payload, ensure_ascii=False, indent=2))
        else:
            print(f"budget exceeded: {err}", file=sys.stderr)
        return EXIT_BUDGET
    if args.json:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "max_domain": args.max_domain,
            "countermodel": None if result is None else countermodel_record(result, nm),
        }
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    elif result is None:
        print(f"no countermodel with domain size up to {args.max_domain}")
    else:
        print(render_countermodel(result, nm))
    return EXIT_OK if result is None else EXIT_VERIFY


def cmd_serve(args: argparse.Namespace) -> int:
    serve(args.port)
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="seqcalc",
        description="Check, expand and probe sequent calculus proof scripts.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="verify proof scripts")
    check.add_argument("paths", nargs="+", metavar="FILE")
    check.add_argument("--json", action="store_true", help="machine-readable output")
    check.set_defaults(func=cmd_check)

    unshorten = sub.add_parser("unshorten", help="export verified scripts as Isar text")
    unshorten.add_argument("path", metavar="FILE")
    unshorten.add_argument("--force", action="store_true", help="emit despite errors")
    unshorten.add_argument("--json", action="store_true", help="machine-readable output")
    unshorten.add_argument(
        "--hint-style", choices=HINT_STYLES, default="attribute",
        help="how gamma hints are annotated",
    )
    unshorten.set_defaults(func=cmd_unshorten)

    counter = sub.add_parser("countermodel", help="search finite countermodels")
    counter.add_argument("formula", help="formula in script syntax, e.g. 'Imp p[a] (Uni p[0])'")
    counter.add_argument("--max-domain", type=_positive_int, default=2)
    counter.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET)
    counter.add_argument("--json", action="store_true", help="machine-readable output")
    counter.set_defaults(func=cmd_countermodel)

    server = sub.add_parser("serve", help="run the local JSON service")
    server.add_argument("--port", type=_positive_int, default=7878)
    server.set_defaults(func=cmd_serve)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
