"""Sequent calculus proof checker with script expansion and model search."""

from .calculus import (
    AMBIGUOUS,
    ProofScript,
    ProofState,
    RuleApp,
    RuleId,
    Step,
    check_script,
    check_step,
    infer_instantiation,
    premises_of,
)
from .codegen import EmitRefusedError, GeneratedProof, assemble_unshortened, emit_isar
from .diagnostics import (
    Category,
    Diagnostic,
    Severity,
    SourceSpan,
    from_machine,
    render_human,
    to_machine,
)
from .generate import GenBudget, GenerationError, random_derivation
from .names import MissingNameError, NameMap
from .ops import ext, inc_term, member, new, news, sub
from .printers import (
    print_compact,
    print_compact_formula,
    print_compact_sequent,
    print_compact_term,
    print_conventional,
    print_full,
    print_full_sequent,
    print_full_term,
)
from .semantics import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    FiniteInterpretation,
    SignatureProfile,
    enumerate_interpretations,
    find_countermodel,
    interpretation_count,
    sequent_satisfied,
)
from .server import SCHEMA_VERSION, make_server, process_source, serve
from .surface import (
    ParsedDocument,
    ParsedProof,
    parse_document,
    parse_formula_text,
)
from .syntax import (
    Con,
    Dis,
    Exi,
    Formula,
    Fun,
    Imp,
    Neg,
    Pre,
    Sequent,
    Term,
    Uni,
    Var,
    formula_size,
    free_indices,
    symbols_of,
)

__version__ = "0.1.0"

__all__ = [
    "AMBIGUOUS",
    "BudgetExceededError",
    "Category",
    "Con",
    "DEFAULT_BUDGET",
    "Diagnostic",
    "Dis",
    "EmitRefusedError",
    "Exi",
    "FiniteInterpretation",
    "Formula",
    "Fun",
    "GenBudget",
    "GeneratedProof",
    "GenerationError",
    "Imp",
    "MissingNameError",
    "NameMap",
    "Neg",
    "ParsedDocument",
    "ParsedProof",
    "Pre",
    "ProofScript",
    "ProofState",
    "RuleApp",
    "RuleId",
    "SCHEMA_VERSION",
    "Sequent",
    "Severity",
    "SignatureProfile",
    "SourceSpan",
    "Step",
    "Term",
    "Uni",
    "Var",
    "assemble_unshortened",
    "check_script",
    "check_step",
    "emit_isar",
    "enumerate_interpretations",
    "ext",
    "find_countermodel",
    "formula_size",
    "free_indices",
    "from_machine",
    "inc_term",
    "infer_instantiation",
    "interpretation_count",
    "make_server",
    "member",
    "new",
    "news",
    "parse_document",
    "parse_formula_text",
    "premises_of",
    "print_compact",
    "print_compact_formula",
    "print_compact_sequent",
    "print_compact_term",
    "print_conventional",
    "print_full",
    "print_full_sequent",
    "print_full_term",
    "process_source",
    "random_derivation",
    "render_human",
    "sequent_satisfied",
    "serve",
    "sub",
    "symbols_of",
    "to_machine",
]
