"""Terms, formulas and sequents of first-order logic with de Bruijn variables.

Identifiers for functions and predicates are plain natural numbers; the two
namespaces are independent.  A sequent is an ordered tuple of formulas, read
as their disjunction.  Duplicates are allowed and order matters.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Fun:
    """Function application.  A constant is a Fun with no arguments."""

    id: int
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Var:
    """Bound variable as a de Bruijn index; 0 refers to the nearest binder."""

    index: int


Term = Fun | Var


@dataclass(frozen=True)
class Pre:
    """Predicate applied to a list of terms."""

    id: int
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Imp:
    p: Formula
    q: Formula


@dataclass(frozen=True)
class Dis:
    p: Formula
    q: Formula


@dataclass(frozen=True)
class Con:
    p: Formula
    q: Formula


@dataclass(frozen=True)
class Exi:
    p: Formula


@dataclass(frozen=True)
class Uni:
    p: Formula


@dataclass(frozen=True)
class Neg:
    p: Formula


Formula = Pre | Imp | Dis | Con | Exi | Uni | Neg

Sequent = tuple[Formula, ...]


def symbols_of(p: Formula) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Collect the (id, arity) pairs of function and predicate symbols in p.

    The same id at two arities yields two entries.  Each result tuple is
    duplicate-free and ordered by first occurrence in a left-to-right,
    depth-first traversal.
    """
    funs: dict[tuple[int, int], None] = {}
    preds: dict[tuple[int, int], None] = {}

    def walk_term(t: Term) -> None:
        match t:
            case Fun(i, args):
                funs.setdefault((i, len(args)))
                for a in args:
                    walk_term(a)
            case Var(_):
                pass

    def walk(q: Formula) -> None:
        match q:
            case Pre(i, args):
                preds.setdefault((i, len(args)))
                for a in args:
                    walk_term(a)
            case Imp(a, b) | Dis(a, b) | Con(a, b):
                walk(a)
                walk(b)
            case Exi(a) | Uni(a) | Neg(a):
                walk(a)

    walk(p)
    return tuple(funs), tuple(preds)


def formula_size(p: Formula) -> int:
    """Number of formula constructors in p; terms do not count."""
    match p:
        case Pre(_, _):
            return 1
        case Imp(a, b) | Dis(a, b) | Con(a, b):
            return 1 + formula_size(a) + formula_size(b)
        case Exi(a) | Uni(a) | Neg(a):
            return 1 + formula_size(a)
    raise TypeError(f"not a formula: {p!r}")


def free_indices(p: Formula) -> frozenset[int]:
    """De Bruijn indices free in p, as seen from outside the formula."""
    out: set[int] = set()

    def walk_term(t: Term, depth: int) -> None:
        match t:
            case Var(n):
                if n >= depth:
                    out.add(n - depth)
            case Fun(_, args):
                for a in args:
                    walk_term(a, depth)

    def walk(q: Formula, depth: int) -> None:
        match q:
            case Pre(_, args):
                for a in args:
                    walk_term(a, depth)
            case Imp(a, b) | Dis(a, b) | Con(a, b):
                walk(a, depth)
                walk(b, depth)
            case Exi(a) | Uni(a):
                walk(a, depth + 1)
            case Neg(a):
                walk(a, depth)

    walk(p, 0)
    return frozenset(out)
