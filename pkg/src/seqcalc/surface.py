"""Parser for the compact proof-script syntax.

A document holds zero or more proofs.  Each proof is a goal formula on an
unindented line, then steps: an unindented rule line (with an optional
bracketed hint term) followed by the stated open goals, one formula per
two-space-indented line, branches separated by a lone "+" line.  A step
without any indented block states that no goals remain; the next unindented
formula line then begins a new proof.  Rule names are reserved at the start
of unindented lines only.

Identifier names are ASCII letter strings; bare integers in term position
are de Bruijn variables.  The parser assigns numeric ids in order of first
occurrence and reports positions as 1-based line/column spans.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .calculus import GAMMA_RULES, ProofScript, RuleApp, RuleId, Step
from .diagnostics import Category, Diagnostic, SourceSpan
from .names import NameMap
from .syntax import Con, Dis, Exi, Formula, Fun, Imp, Neg, Pre, Term, Uni, Var, free_indices

RULE_NAMES = {r.value: r for r in RuleId}

_CONNECTIVES_2 = {"Imp": Imp, "Dis": Dis, "Con": Con}
_CONNECTIVES_1 = {"Neg": Neg, "Uni": Uni, "Exi": Exi}
_CONSTRUCTORS = frozenset(_CONNECTIVES_2) | frozenset(_CONNECTIVES_1)


@dataclass(frozen=True)
class Token:
    kind: str  # "name", "nat" or the punctuation character itself
    text: str
    line: int
    col: int

    @property
    def end_col(self) -> int:
        return self.col + len(self.text) - 1

    @property
    def span(self) -> SourceSpan:
        return SourceSpan.of_line(self.line, self.col, self.end_col)


@dataclass(frozen=True)
class ParsedProof:
    script: ProofScript
    name_map: NameMap
    span: SourceSpan


@dataclass
class ParsedDocument:
    proofs: tuple[ParsedProof, ...] = ()
    diagnostics: tuple[Diagnostic, ...] = ()


class ParseFailure(Exception):
    """Internal signal; parse_document turns it into a diagnostic."""

    def __init__(self, diagnostic: Diagnostic):
        super().__init__(diagnostic.message)
        self.diagnostic = diagnostic


def _fail(span: SourceSpan, message: str) -> None:
    raise ParseFailure(Diagnostic(Category.SYNTAX_ERROR, span, message))


def _is_letter(ch: str) -> bool:
    return "A" <= ch <= "Z" or "a" <= ch <= "z"


def _tokenize(text: str, line_no: int) -> list[Token]:
    toks: list[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in " \t":
            i += 1
            continue
        if ch in "()[],":
            toks.append(Token(ch, ch, line_no, i + 1))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(Token("nat", text[i:j], line_no, i + 1))
            i = j
            continue
        if _is_letter(ch):
            j = i
            while j < len(text) and _is_letter(text[j]):
                j += 1
            toks.append(Token("name", text[i:j], line_no, i + 1))
            i = j
            continue
        _fail(SourceSpan.point(line_no, i + 1), f"unexpected character {ch!r}")
    return toks


class _Cursor:
    def __init__(self, toks: list[Token], line_no: int, line_len: int):
        self.toks = toks
        self.pos = 0
        self.line_no = line_no
        self.line_len = line_len

    def peek(self) -> Token | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, what: str) -> Token:
        tok = self.peek()
        if tok is None:
            _fail(
                SourceSpan.point(self.line_no, self.line_len + 1),
                f"expected {what}, found end of line",
            )
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.take(what)
        if tok.kind != kind:
            _fail(tok.span, f"expected {what}, found {tok.text!r}")
        return tok

    def at_end(self) -> bool:
        return self.pos >= len(self.toks)

    def require_end(self) -> None:
        tok = self.peek()
        if tok is not None:
            _fail(tok.span, f"unexpected {tok.text!r} after a complete formula")


@dataclass
class _ProofBuilder:
    goal: Formula
    goal_span: SourceSpan
    nm: NameMap
    steps: list[Step] = field(default_factory=list)
    arities: dict[tuple[str, str], int] = field(default_factory=dict)
    end_line: int = 0
    end_col: int = 1

    @property
    def complete(self) -> bool:
        return bool(self.steps) and self.steps[-1].stated == ()

    def span(self) -> SourceSpan:
        return SourceSpan(
            self.goal_span.start_line, self.goal_span.start_col, self.end_line, self.end_col
        )


class _Parser:
    def __init__(self, text: str):
        self.lines = text.split("\n")
        self.i = 0
        self.proofs: list[ParsedProof] = []
        self.diagnostics: list[Diagnostic] = []
        self.cur: _ProofBuilder | None = None

    # --- line classification ------------------------------------------------

    def _line(self) -> str:
        return self.lines[self.i].rstrip("\r").rstrip()

    def _classify(self) -> str:
        text = self._line()
        if not text.strip():
            return "blank"
        if text.strip() == "+":
            return "plus"
        if text[0] in " \t":
            return "indented"
        return "toplevel"

    # --- names and lints ------------------------------------------------------

    def _check_arity(self, kind: str, name: str, arity: int, tok: Token) -> None:
        assert self.cur is not None
        key = (kind, name)
        first = self.cur.arities.setdefault(key, arity)
        if first != arity:
            self.diagnostics.append(
                Diagnostic(
                    Category.ARITY_LINT,
                    tok.span,
                    f"{name!r} is used with {arity} argument{'s' if arity != 1 else ''}"
                    f" here but with {first} elsewhere",
                )
            )

    def _lint_free_vars(self, p: Formula, span: SourceSpan) -> None:
        free = sorted(free_indices(p))
        if free:
            indices = ", ".join(str(n) for n in free)
            self.diagnostics.append(
                Diagnostic(
                    Category.FREE_VARIABLE_LINT,
                    span,
                    f"variable index {indices} exceeds the quantifier depth"
                    if len(free) == 1
                    else f"variable indices {indices} exceed the quantifier depth",
                )
            )

    # --- formula and term grammar ---------------------------------------------

    def _parse_term(self, cur: _Cursor) -> Term:
        tok = cur.take("a term")
        if tok.kind == "nat":
            return Var(int(tok.text))
        if tok.kind == "name":
            if tok.text in _CONSTRUCTORS:
                _fail(tok.span, f"{tok.text} is a formula constructor, not a term")
            args = self._parse_term_list(cur)
            assert self.cur is not None
            self._check_arity("fun", tok.text, len(args), tok)
            return Fun(self.cur.nm.fun_id(tok.text), args)
        _fail(tok.span, f"expected a term, found {tok.text!r}")
        raise AssertionError

    def _parse_term_list(self, cur: _Cursor) -> tuple[Term, ...]:
        tok = cur.peek()
        if tok is None or tok.kind != "[":
            return ()
        cur.take("'['")
        if (nxt := cur.peek()) is not None and nxt.kind == "]":
            cur.take("']'")
            return ()
        terms = [self._parse_term(cur)]
        while (nxt := cur.peek()) is not None and nxt.kind == ",":
            cur.take("','")
            terms.append(self._parse_term(cur))
        closing = cur.take("']'")
        if closing.kind != "]":
            _fail(closing.span, f"expected ']' or ',', found {closing.text!r}")
        return tuple(terms)

    def _parse_atom(self, tok: Token, cur: _Cursor) -> Formula:
        args = self._parse_term_list(cur)
        assert self.cur is not None
        self._check_arity("pre", tok.text, len(args), tok)
        return Pre(self.cur.nm.pred_id(tok.text), args)

    def _parse_formula(self, cur: _Cursor) -> Formula:
        tok = cur.take("a formula")
        if tok.kind == "name" and tok.text in _CONNECTIVES_2:
            ctor = _CONNECTIVES_2[tok.text]
            return ctor(self._parse_formula_arg(cur), self._parse_formula_arg(cur))
        if tok.kind == "name" and tok.text in _CONNECTIVES_1:
            ctor = _CONNECTIVES_1[tok.text]
            return ctor(self._parse_formula_arg(cur))
        if tok.kind == "name":
            return self._parse_atom(tok, cur)
        _fail(tok.span, f"expected a formula, found {tok.text!r}")
        raise AssertionError

    def _parse_formula_arg(self, cur: _Cursor) -> Formula:
        tok = cur.take("a formula argument")
        if tok.kind == "(":
            inner = self._parse_formula(cur)
            closing = cur.take("')'")
            if closing.kind != ")":
                _fail(closing.span, f"expected ')', found {closing.text!r}")
            return inner
        if tok.kind == "name":
            if tok.text in _CONSTRUCTORS:
                _fail(tok.span, f"compound argument must be parenthesized: ({tok.text} ...)")
            return self._parse_atom(tok, cur)
        _fail(tok.span, f"expected a formula argument, found {tok.text!r}")
        raise AssertionError

    def _parse_formula_line(self) -> tuple[Formula, SourceSpan]:
        text = self._line()
        toks = _tokenize(text, self.i + 1)
        cur = _Cursor(toks, self.i + 1, len(text))
        p = self._parse_formula(cur)
        cur.require_end()
        span = SourceSpan.of_line(self.i + 1, toks[0].col, toks[-1].end_col)
        self._lint_free_vars(p, span)
        return p, span

    # --- document structure -----------------------------------------------------

    def _flush(self) -> None:
        if self.cur is None:
            return
        b = self.cur
        script = ProofScript(b.goal, tuple(b.steps))
        self.proofs.append(ParsedProof(script, b.nm, b.span()))
        self.cur = None

    def _touch_end(self) -> None:
        assert self.cur is not None
        text = self._line()
        self.cur.end_line = self.i + 1
        self.cur.end_col = max(len(text), 1)

    def _start_proof(self) -> None:
        self._flush()
        nm = NameMap()
        self.cur = _ProofBuilder(goal=Pre(0), goal_span=SourceSpan.point(1, 1), nm=nm)
        goal, span = self._parse_formula_line()
        self.cur.goal = goal
        self.cur.goal_span = span
        self._touch_end()
        self.i += 1

    def _parse_step(self) -> None:
        assert self.cur is not None
        text = self._line()
        line_no = self.i + 1
        toks = _tokenize(text, line_no)
        cur = _Cursor(toks, line_no, len(text))
        name_tok = cur.take("a rule name")
        rule = RULE_NAMES[name_tok.text]
        hint: Term | None = None
        if (nxt := cur.peek()) is not None and nxt.kind == "[":
            if rule not in GAMMA_RULES:
                _fail(nxt.span, f"hint not allowed on {rule.value}")
            cur.take("'['")
            hint = self._parse_term(cur)
            closing = cur.take("']'")
            if closing.kind != "]":
                _fail(closing.span, f"expected ']', found {closing.text!r}")
        cur.require_end()
        rule_span = SourceSpan.of_line(line_no, name_tok.col, toks[-1].end_col)
        self._touch_end()
        self.i += 1

        branches: list[tuple[Formula, ...]] = []
        branch: list[Formula] = []
        saw_plus_at: SourceSpan | None = None
        while self.i < len(self.lines):
            kind = self._classify()
            if kind == "blank":
                self.i += 1
                continue
            if kind == "plus":
                plus_col = self._line().index("+") + 1
                if not branch:
                    _fail(
                        SourceSpan.point(self.i + 1, plus_col),
                        "branch separator without a preceding sequent",
                    )
                branches.append(tuple(branch))
                branch = []
                saw_plus_at = SourceSpan.point(self.i + 1, plus_col)
                self._touch_end()
                self.i += 1
                continue
            if kind == "indented":
                p, _span = self._parse_formula_line()
                branch.append(p)
                self._touch_end()
                self.i += 1
                continue
            break
        if branch:
            branches.append(tuple(branch))
        elif saw_plus_at is not None:
            _fail(saw_plus_at, "expected a sequent after the branch separator")
        stated = tuple(branches)
        self.cur.steps.append(Step(RuleApp(rule, hint), stated, rule_span))

    def parse(self) -> ParsedDocument:
        try:
            while self.i < len(self.lines):
                kind = self._classify()
                if kind == "blank":
                    self.i += 1
                    continue
                if kind == "plus":
                    col = self._line().index("+") + 1
                    _fail(
                        SourceSpan.point(self.i + 1, col),
                        "branch separator outside a stated block",
                    )
                if kind == "indented":
                    text = self._line()
                    col = len(text) - len(text.lstrip()) + 1
                    _fail(
                        SourceSpan.point(self.i + 1, col),
                        "unexpected indented line; stated sequents belong after a rule line",
                    )
                # top-level line: rule application or new goal
                text = self._line()
                toks = _tokenize(text, self.i + 1)
                first = toks[0]
                if first.kind == "name" and first.text in RULE_NAMES:
                    if self.cur is None:
                        _fail(first.span, "rule application before any goal formula")
                    self._parse_step()
                    continue
                if self.cur is not None and not self.cur.complete:
                    _fail(
                        SourceSpan.of_line(self.i + 1, first.col, toks[-1].end_col),
                        "expected a rule line; the previous proof still has open goals"
                        " (indent this line if it states a sequent)",
                    )
                self._start_proof()
        except ParseFailure as failure:
            self.cur = None
            self.diagnostics.append(failure.diagnostic)
        self._flush()
        return ParsedDocument(tuple(self.proofs), tuple(self.diagnostics))


def parse_document(text: str) -> ParsedDocument:
    """Parse a whole document, stopping at the first syntax error.

    Proofs completed before an error are kept; lint warnings gathered along
    the way stay in the diagnostics either way.
    """
    return _Parser(text).parse()


def parse_formula_text(text: str) -> tuple[Formula | None, NameMap, list[Diagnostic]]:
    """Parse a single formula, e.g. a CLI argument.  Names get fresh ids."""
    stripped = [ln for ln in text.split("\n") if ln.strip()]
    parser = _Parser(stripped[0] if stripped else "")
    parser.cur = _ProofBuilder(goal=Pre(0), goal_span=SourceSpan.point(1, 1), nm=NameMap())
    if len(stripped) != 1:
        where = SourceSpan.point(1, 1)
        return None, parser.cur.nm, [
            Diagnostic(Category.SYNTAX_ERROR, where, "expected exactly one formula")
        ]
    try:
        p, _span = parser._parse_formula_line()
    except ParseFailure as failure:
        return None, parser.cur.nm, parser.diagnostics + [failure.diagnostic]
    return p, parser.cur.nm, parser.diagnostics
