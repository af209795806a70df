"""Diagnostic records shared by the parser, the checker and the CLI.

Every diagnostic belongs to a closed set of categories, each with a fixed
severity.  Spans are 1-based and inclusive at both ends.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


class Category(str, Enum):
    SYNTAX_ERROR = "syntax_error"
    SHAPE_MISMATCH = "shape_mismatch"
    STATE_MISMATCH = "state_mismatch"
    BASIC_MISAPPLIED = "basic_misapplied"
    FRESHNESS_VIOLATION = "freshness_violation"
    EXT_NOT_SUBSET = "ext_not_subset"
    MISSING_HINT = "missing_hint"
    UNCHANGED_SEQUENT = "unchanged_sequent"
    INCOMPLETE_PROOF = "incomplete_proof"
    NO_OPEN_GOALS = "no_open_goals"
    ARITY_LINT = "arity_lint"
    FREE_VARIABLE_LINT = "free_variable_lint"
    BUDGET_EXCEEDED = "budget_exceeded"


_WARNING_CATEGORIES = frozenset(
    {Category.UNCHANGED_SEQUENT, Category.ARITY_LINT, Category.FREE_VARIABLE_LINT}
)

SEVERITY_OF: dict[Category, Severity] = {
    c: (Severity.WARNING if c in _WARNING_CATEGORIES else Severity.ERROR) for c in Category
}


@dataclass(frozen=True)
class SourceSpan:
    """1-based source range; the end column is inclusive."""

    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def __post_init__(self) -> None:
        if self.start_line < 1 or self.start_col < 1:
            raise ValueError(f"span start must be positive: {self}")
        if (self.end_line, self.end_col) < (self.start_line, self.start_col):
            raise ValueError(f"span end precedes start: {self}")

    @classmethod
    def point(cls, line: int, col: int) -> SourceSpan:
        return cls(line, col, line, col)

    @classmethod
    def of_line(cls, line: int, start_col: int, end_col: int) -> SourceSpan:
        return cls(line, start_col, line, end_col)


DUMMY_SPAN = SourceSpan.point(1, 1)


@dataclass(frozen=True)
class Diagnostic:
    category: Category
    span: SourceSpan
    message: str
    expected: str | None = None
    actual: str | None = None

    @property
    def severity(self) -> Severity:
        return SEVERITY_OF[self.category]

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR


_EXCERPT_WIDTH = 96


def _excerpt(line_text: str, start_col: int, end_col: int) -> tuple[str, int, int]:
    """Window line_text around the span, returning text and caret columns."""
    start = max(start_col - 1, 0)
    end = min(max(end_col, start_col), len(line_text))
    if len(line_text) <= _EXCERPT_WIDTH:
        return line_text, start, max(end - start, 1)
    lo = max(start - _EXCERPT_WIDTH // 3, 0)
    hi = min(lo + _EXCERPT_WIDTH, len(line_text))
    text = line_text[lo:hi]
    if lo > 0:
        text = "..." + text[3:]
    if hi < len(line_text):
        text = text[:-3] + "..."
    return text, start - lo, max(min(end, hi) - start, 1)


def render_human(d: Diagnostic, source: str | None = None) -> str:
    """Multi-line rendering with category, location, excerpt and details."""
    out = [f"{d.severity.value}[{d.category.value}]: {d.message}"]
    out.append(f" --> line {d.span.start_line}, column {d.span.start_col}")
    if source is not None:
        lines = source.splitlines()
        if 1 <= d.span.start_line <= len(lines):
            line_text = lines[d.span.start_line - 1]
            end_col = d.span.end_col if d.span.end_line == d.span.start_line else len(line_text)
            text, pad, width = _excerpt(line_text, d.span.start_col, end_col)
            gutter = f"{d.span.start_line} | "
            out.append(f"{' ' * (len(gutter) - 2)}|")
            out.append(f"{gutter}{text}")
            out.append(f"{' ' * (len(gutter) - 2)}| {' ' * pad}{'^' * width}")
    if d.expected is not None:
        out.append(f"  expected: {d.expected}")
    if d.actual is not None:
        out.append(f"  actual:   {d.actual}")
    return "\n".join(out)


def to_machine(d: Diagnostic) -> dict:
    """JSON-ready record; field names are part of the output schema."""
    rec: dict = {
        "category": d.category.value,
        "severity": d.severity.value,
        "message": d.message,
        "start_line": d.span.start_line,
        "start_col": d.span.start_col,
        "end_line": d.span.end_line,
        "end_col": d.span.end_col,
    }
    if d.expected is not None:
        rec["expected"] = d.expected
    if d.actual is not None:
        rec["actual"] = d.actual
    return rec


def from_machine(rec: dict) -> Diagnostic:
    return Diagnostic(
        category=Category(rec["category"]),
        span=SourceSpan(rec["start_line"], rec["start_col"], rec["end_line"], rec["end_col"]),
        message=rec["message"],
        expected=rec.get("expected"),
        actual=rec.get("actual"),
    )
