"""Printers for the three output syntaxes.

* compact: the proof-script surface syntax, canonical form.  Parsing the
  output reproduces the input tree exactly.
* full: fully parenthesized constructor syntax with numeric identifiers,
  as used in the exported lemma text.
* conventional: standard logic notation with named variables.
"""

from __future__ import annotations

from itertools import count
from typing import Iterator

from .names import MissingNameError, NameMap
from .syntax import Con, Dis, Exi, Formula, Fun, Imp, Neg, Pre, Sequent, Term, Uni, Var


# --- compact syntax ---------------------------------------------------------


def print_compact_term(t: Term, nm: NameMap) -> str:
    match t:
        case Var(n):
            return str(n)
        case Fun(i, args):
            name = nm.fun_name(i)
            if not args:
                return name
            return f"{name}[{', '.join(print_compact_term(a, nm) for a in args)}]"
    raise TypeError(f"not a term: {t!r}")


def print_compact_formula(p: Formula, nm: NameMap) -> str:
    def arg(q: Formula) -> str:
        if isinstance(q, Pre):
            return print_compact_formula(q, nm)
        return f"({print_compact_formula(q, nm)})"

    match p:
        case Pre(i, args):
            name = nm.pred_name(i)
            if not args:
                return name
            return f"{name}[{', '.join(print_compact_term(a, nm) for a in args)}]"
        case Imp(a, b):
            return f"Imp {arg(a)} {arg(b)}"
        case Dis(a, b):
            return f"Dis {arg(a)} {arg(b)}"
        case Con(a, b):
            return f"Con {arg(a)} {arg(b)}"
        case Exi(a):
            return f"Exi {arg(a)}"
        case Uni(a):
            return f"Uni {arg(a)}"
        case Neg(a):
            return f"Neg {arg(a)}"
    raise TypeError(f"not a formula: {p!r}")


def print_compact_sequent(z: Sequent, nm: NameMap) -> str:
    return "[" + ", ".join(print_compact_formula(p, nm) for p in z) + "]"


def print_compact(script, nm: NameMap) -> str:
    """Canonical script text: goal, one blank line, then the steps."""
    lines = [print_compact_formula(script.goal, nm), ""]
    for step in script.steps:
        rule = step.app.rule.value
        if step.app.hint is not None:
            rule += f"[{print_compact_term(step.app.hint, nm)}]"
        lines.append(rule)
        for i, branch in enumerate(step.stated):
            if i:
                lines.append("+")
            lines.extend("  " + print_compact_formula(p, nm) for p in branch)
    return "\n".join(lines) + "\n"


# --- full constructor syntax ------------------------------------------------


def print_full_term(t: Term) -> str:
    match t:
        case Var(n):
            return f"Var {n}"
        case Fun(i, args):
            return f"Fun {i} [{', '.join(print_full_term(a) for a in args)}]"
    raise TypeError(f"not a term: {t!r}")


def print_full(p: Formula) -> str:
    match p:
        case Pre(i, args):
            return f"Pre {i} [{', '.join(print_full_term(a) for a in args)}]"
        case Imp(a, b):
            return f"Imp ({print_full(a)}) ({print_full(b)})"
        case Dis(a, b):
            return f"Dis ({print_full(a)}) ({print_full(b)})"
        case Con(a, b):
            return f"Con ({print_full(a)}) ({print_full(b)})"
        case Exi(a):
            return f"Exi ({print_full(a)})"
        case Uni(a):
            return f"Uni ({print_full(a)})"
        case Neg(a):
            return f"Neg ({print_full(a)})"
    raise TypeError(f"not a formula: {p!r}")


def print_full_sequent(z: Sequent) -> str:
    return "[" + ", ".join(print_full(p) for p in z) + "]"


def lenient_formatters(nm: NameMap):
    """Diagnostic formatters: compact when every id is named, numeric otherwise.

    Rule application can introduce identifiers that never appear in the
    source (a fallback delta witness, for one), so diagnostics must not
    insist on the name map covering everything.
    """

    def fmt_formula(p: Formula) -> str:
        try:
            return print_compact_formula(p, nm)
        except MissingNameError:
            return print_full(p)

    def fmt_sequent(z: Sequent) -> str:
        try:
            return print_compact_sequent(z, nm)
        except MissingNameError:
            return print_full_sequent(z)

    return fmt_formula, fmt_sequent


# --- conventional notation --------------------------------------------------

_PREC_QUANT = 0
_PREC_IMP = 10
_PREC_DIS = 20
_PREC_CON = 30
_PREC_NEG = 40

_BINDER_POOL = ("x", "y", "z", "u", "v", "w")


def _binder_names(taken: frozenset[str]) -> Iterator[str]:
    for name in _BINDER_POOL:
        if name not in taken:
            yield name
    for n in count(1):
        name = f"x{n}"
        if name not in taken:
            yield name


def _fun_display(i: int, nm: NameMap) -> str:
    try:
        return nm.fun_name(i)
    except KeyError:
        return f"f{i}"


def _pred_display(i: int, nm: NameMap) -> str:
    try:
        return nm.pred_name(i)
    except KeyError:
        return f"p{i}"


def print_conventional(p: Formula, nm: NameMap) -> str:
    """Render p with named binders, minimal parentheses and maximal scopes.

    Binder names are drawn from x, y, z, u, v, w then x1, x2, ... skipping
    anything that collides with a function or predicate name in the map or
    with an enclosing binder.
    """
    taken = nm.all_names()

    def term(t: Term, binders: tuple[str, ...]) -> str:
        match t:
            case Var(n):
                if n < len(binders):
                    return binders[len(binders) - 1 - n]
                return f"?{n - len(binders)}"
            case Fun(i, args):
                name = _fun_display(i, nm)
                if not args:
                    return name
                return f"{name}({', '.join(term(a, binders) for a in args)})"
        raise TypeError(f"not a term: {t!r}")

    def wrap(text: str, inner: int, outer: int) -> str:
        return f"({text})" if inner < outer else text

    def go(q: Formula, outer: int, binders: tuple[str, ...]) -> str:
        match q:
            case Pre(i, args):
                name = _pred_display(i, nm)
                if not args:
                    return name
                return f"{name}({', '.join(term(a, binders) for a in args)})"
            case Neg(a):
                return wrap(f"¬{go(a, _PREC_NEG, binders)}", _PREC_NEG, outer)
            case Con(a, b):
                text = f"{go(a, _PREC_CON, binders)} ∧ {go(b, _PREC_CON + 1, binders)}"
                return wrap(text, _PREC_CON, outer)
            case Dis(a, b):
                text = f"{go(a, _PREC_DIS, binders)} ∨ {go(b, _PREC_DIS + 1, binders)}"
                return wrap(text, _PREC_DIS, outer)
            case Imp(a, b):
                text = f"{go(a, _PREC_IMP + 1, binders)} → {go(b, _PREC_IMP, binders)}"
                return wrap(text, _PREC_IMP, outer)
            case Exi(a) | Uni(a):
                sym = "∃" if isinstance(q, Exi) else "∀"
                name = next(_binder_names(taken | frozenset(binders)))
                text = f"{sym}{name}. {go(a, _PREC_QUANT, binders + (name,))}"
                return wrap(text, _PREC_QUANT, outer)
        raise TypeError(f"not a formula: {q!r}")

    return go(p, _PREC_QUANT, ())
