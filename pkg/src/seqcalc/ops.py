"""Primitive operations on terms, formulas and sequents.

These are the helpers the proof rules are defined in terms of: index
shifting, substitution, symbol freshness, membership and sequent extension.
All of them are total and written as plain structural recursion.
"""

from __future__ import annotations

from .syntax import Con, Dis, Exi, Formula, Fun, Imp, Neg, Pre, Sequent, Term, Uni, Var


def inc_term(t: Term) -> Term:
    """Shift every variable index in t up by one."""
    match t:
        case Var(n):
            return Var(n + 1)
        case Fun(i, args):
            return Fun(i, inc_list(args))
    raise TypeError(f"not a term: {t!r}")


def inc_list(ts: tuple[Term, ...]) -> tuple[Term, ...]:
    return tuple(inc_term(t) for t in ts)


def sub_term(v: int, s: Term, t: Term) -> Term:
    """Replace variable v by s in t, decrementing the variables above v."""
    match t:
        case Var(n):
            if n < v:
                return Var(n)
            if n == v:
                return s
            return Var(n - 1)
        case Fun(i, args):
            return Fun(i, sub_list(v, s, args))
    raise TypeError(f"not a term: {t!r}")


def sub_list(v: int, s: Term, ts: tuple[Term, ...]) -> tuple[Term, ...]:
    return tuple(sub_term(v, s, t) for t in ts)


def sub(v: int, s: Term, p: Formula) -> Formula:
    """Substitute s for variable v in p.

    Passing under a quantifier bumps the target index and shifts s so that
    the substituted term keeps referring to the same outer binders.
    """
    match p:
        case Pre(i, args):
            return Pre(i, sub_list(v, s, args))
        case Imp(a, b):
            return Imp(sub(v, s, a), sub(v, s, b))
        case Dis(a, b):
            return Dis(sub(v, s, a), sub(v, s, b))
        case Con(a, b):
            return Con(sub(v, s, a), sub(v, s, b))
        case Exi(a):
            return Exi(sub(v + 1, inc_term(s), a))
        case Uni(a):
            return Uni(sub(v + 1, inc_term(s), a))
        case Neg(a):
            return Neg(sub(v, s, a))
    raise TypeError(f"not a formula: {p!r}")


def new_term(c: int, t: Term) -> bool:
    """True iff function id c does not occur in t.  Variables are always new."""
    match t:
        case Var(_):
            return True
        case Fun(i, args):
            return i != c and new_list(c, args)
    raise TypeError(f"not a term: {t!r}")


def new_list(c: int, ts: tuple[Term, ...]) -> bool:
    return all(new_term(c, t) for t in ts)


def new(c: int, p: Formula) -> bool:
    """True iff function id c does not occur anywhere in p."""
    match p:
        case Pre(_, args):
            return new_list(c, args)
        case Imp(a, b) | Dis(a, b) | Con(a, b):
            return new(c, a) and new(c, b)
        case Exi(a) | Uni(a) | Neg(a):
            return new(c, a)
    raise TypeError(f"not a formula: {p!r}")


def news(c: int, z: Sequent) -> bool:
    """True iff function id c occurs in no formula of z."""
    return all(new(c, p) for p in z)


def member(p: Formula, z: Sequent) -> bool:
    """Structural-equality membership of p in z."""
    return any(p == q for q in z)


def ext(y: Sequent, z: Sequent) -> bool:
    """True iff every formula of z is a member of y.

    Order and multiplicity are ignored, so y may reorder, duplicate or
    extend z arbitrarily.
    """
    return all(member(p, y) for p in z)
