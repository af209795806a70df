"""Classical semantics over explicit domains and a finite-model oracle.

The evaluator mirrors the usual environment-passing definition: variable
environments are functions from de Bruijn indices to domain elements, and
quantifiers iterate over an explicitly given domain.  Finite interpretations
store complete lookup tables and can be enumerated exhaustively, which is
what the countermodel search and the soundness tests build on.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import product
from typing import Callable, Iterable, Iterator, Mapping, Sequence, TypeVar

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
    free_indices,
    symbols_of,
)

D = TypeVar("D")

DEFAULT_BUDGET = 10**6


class BudgetExceededError(Exception):
    """Enumeration would exceed the configured interpretation budget."""

    def __init__(self, count: int, budget: int):
        super().__init__(f"enumeration needs {count} interpretations, budget is {budget}")
        self.count = count
        self.budget = budget


class UndefinedSymbolError(KeyError):
    """A finite interpretation has no table entry for a symbol."""


def shift(e: Callable[[int], D], v: int, x: D) -> Callable[[int], D]:
    """Environment update: index v maps to x, larger indices move up by one."""

    def shifted(n: int) -> D:
        if n < v:
            return e(n)
        if n == v:
            return x
        return e(n - 1)

    return shifted


def eval_term(t: Term, e: Callable[[int], D], f: Callable[[int, tuple], D]) -> D:
    match t:
        case Var(n):
            return e(n)
        case Fun(i, args):
            return f(i, tuple(eval_term(a, e, f) for a in args))
    raise TypeError(f"not a term: {t!r}")


def eval_formula(
    p: Formula,
    e: Callable[[int], D],
    f: Callable[[int, tuple], D],
    g: Callable[[int, tuple], bool],
    domain: Sequence[D],
) -> bool:
    match p:
        case Pre(i, args):
            return g(i, tuple(eval_term(a, e, f) for a in args))
        case Imp(a, b):
            return (not eval_formula(a, e, f, g, domain)) or eval_formula(b, e, f, g, domain)
        case Dis(a, b):
            return eval_formula(a, e, f, g, domain) or eval_formula(b, e, f, g, domain)
        case Con(a, b):
            return eval_formula(a, e, f, g, domain) and eval_formula(b, e, f, g, domain)
        case Exi(a):
            return any(eval_formula(a, shift(e, 0, x), f, g, domain) for x in domain)
        case Uni(a):
            return all(eval_formula(a, shift(e, 0, x), f, g, domain) for x in domain)
        case Neg(a):
            return not eval_formula(a, e, f, g, domain)
    raise TypeError(f"not a formula: {p!r}")


@dataclass(frozen=True)
class SignatureProfile:
    """The (id, arity) pairs a formula set uses, in first-occurrence order."""

    funs: tuple[tuple[int, int], ...] = ()
    preds: tuple[tuple[int, int], ...] = ()

    @classmethod
    def of_formulas(cls, formulas: Iterable[Formula]) -> SignatureProfile:
        funs: dict[tuple[int, int], None] = {}
        preds: dict[tuple[int, int], None] = {}
        for p in formulas:
            fs, ps = symbols_of(p)
            for key in fs:
                funs.setdefault(key)
            for key in ps:
                preds.setdefault(key)
        return cls(tuple(funs), tuple(preds))


@dataclass(frozen=True)
class FiniteInterpretation:
    """Total tables over the domain {0, ..., domain_size - 1}.

    Tables are keyed by (id, arity) so the same id may appear at several
    arities.  The environment defaults every free index to 0.
    """

    domain_size: int
    fun_tables: Mapping[tuple[int, int], Mapping[tuple[int, ...], int]]
    pred_tables: Mapping[tuple[int, int], Mapping[tuple[int, ...], bool]]
    env: Mapping[int, int] = field(default_factory=dict)

    @property
    def domain(self) -> range:
        return range(self.domain_size)

    def with_env(self, env: Mapping[int, int]) -> FiniteInterpretation:
        return replace(self, env=dict(env))

    def assignment(self, n: int) -> int:
        return self.env.get(n, 0)

    def fun_value(self, i: int, args: tuple[int, ...]) -> int:
        table = self.fun_tables.get((i, len(args)))
        if table is None:
            raise UndefinedSymbolError(f"function {i}/{len(args)} has no table")
        return table[args]

    def pred_value(self, i: int, args: tuple[int, ...]) -> bool:
        table = self.pred_tables.get((i, len(args)))
        if table is None:
            raise UndefinedSymbolError(f"predicate {i}/{len(args)} has no table")
        return table[args]

    def eval_term(self, t: Term) -> int:
        return eval_term(t, self.assignment, self.fun_value)

    def eval_formula(self, p: Formula) -> bool:
        return eval_formula(p, self.assignment, self.fun_value, self.pred_value, self.domain)


def interpretation_count(sig: SignatureProfile, n: int) -> int:
    """Number of interpretations enumerate_interpretations would yield."""
    total = 1
    for _, arity in sig.funs:
        total *= n ** (n**arity)
    for _, arity in sig.preds:
        total *= 2 ** (n**arity)
    return total


def enumerate_interpretations(
    sig: SignatureProfile, n: int, budget: int = DEFAULT_BUDGET
) -> Iterator[FiniteInterpretation]:
    """All interpretations of sig over a domain of size n, deterministically.

    Function tables vary fastest on later symbols; predicate tables vary
    within each function assignment.  The environment is left at its default.
    """
    if n < 1:
        raise ValueError(f"domain size must be at least 1, got {n}")
    total = interpretation_count(sig, n)
    if total > budget:
        raise BudgetExceededError(total, budget)

    fun_args = [list(product(range(n), repeat=arity)) for _, arity in sig.funs]
    pred_args = [list(product(range(n), repeat=arity)) for _, arity in sig.preds]
    fun_rows = [list(product(range(n), repeat=len(args))) for args in fun_args]
    pred_rows = [list(product((False, True), repeat=len(args))) for args in pred_args]

    for fun_choice in product(*fun_rows):
        fun_tables = {
            key: dict(zip(args, row))
            for key, args, row in zip(sig.funs, fun_args, fun_choice)
        }
        for pred_choice in product(*pred_rows):
            pred_tables = {
                key: dict(zip(args, row))
                for key, args, row in zip(sig.preds, pred_args, pred_choice)
            }
            yield FiniteInterpretation(n, fun_tables, pred_tables)


def sequent_satisfied(z: Sequent, interp: FiniteInterpretation) -> bool:
    """True iff some formula of z holds; the empty sequent never does."""
    return any(interp.eval_formula(p) for p in z)


def find_countermodel(
    p: Formula, max_domain: int, budget: int = DEFAULT_BUDGET
) -> FiniteInterpretation | None:
    """Search domains 1..max_domain for an interpretation falsifying p.

    Free indices of p are varied over the domain as well; the first falsifying
    interpretation in enumeration order (environments vary fastest) wins.
    """
    if max_domain < 1:
        raise ValueError(f"max domain must be at least 1, got {max_domain}")
    sig = SignatureProfile.of_formulas([p])
    free = sorted(free_indices(p))
    for n in range(1, max_domain + 1):
        if interpretation_count(sig, n) * n ** len(free) > budget:
            raise BudgetExceededError(interpretation_count(sig, n) * n ** len(free), budget)
        for interp in enumerate_interpretations(sig, n, budget):
            for values in product(range(n), repeat=len(free)):
                candidate = interp.with_env(dict(zip(free, values)))
                if not candidate.eval_formula(p):
                    return candidate
    return None
