"""Seeded random generator of verifiable proof scripts.

Derivations are grown forward: start from sequents that Basic closes
immediately, then repeatedly turn a derived sequent into the premise of some
rule, producing a bigger conclusion.  Finally the root sequent is folded into
a single disjunction so the result is a complete script for one goal formula.
The emitted script always passes check_script with no diagnostics.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .calculus import ProofScript, RuleApp, RuleId, Step, check_script
from .ops import ext, news, sub
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


class GenerationError(Exception):
    """The generator could not produce a script within its budget."""


@dataclass(frozen=True)
class GenBudget:
    """Bounds on the emitted script: rule applications and goal size."""

    max_steps: int = 14
    max_formula_size: int = 48


@dataclass(frozen=True)
class _Node:
    rule: RuleId
    hint: Term | None
    conc: Sequent
    children: tuple[_Node, ...]


_A = Fun(0)
_B = Fun(1)
_CONSTANTS = (_A, _B)
_ATOMS = (Pre(0, (_A,)), Pre(0, (_B,)), Pre(1, (_A,)), Pre(1, (_B,)))


def _shift_term(t: Term, depth: int) -> Term:
    def go(u: Term) -> Term:
        match u:
            case Var(n):
                return Var(n + depth)
            case Fun(i, args):
                return Fun(i, tuple(go(a) for a in args))
        raise TypeError(f"not a term: {u!r}")

    return go(t)


def _abstract_term(u: Term, t: Term, depth: int) -> Term:
    if u == _shift_term(t, depth):
        return Var(depth)
    match u:
        case Var(n):
            return Var(n + 1) if n >= depth else Var(n)
        case Fun(i, args):
            return Fun(i, tuple(_abstract_term(a, t, depth) for a in args))
    raise TypeError(f"not a term: {u!r}")


def _abstract(p: Formula, t: Term, depth: int = 0) -> Formula:
    """Body b with sub(0, t, b) == p; occurrences of t become the bound var."""
    match p:
        case Pre(i, args):
            return Pre(i, tuple(_abstract_term(a, t, depth) for a in args))
        case Imp(a, b):
            return Imp(_abstract(a, t, depth), _abstract(b, t, depth))
        case Dis(a, b):
            return Dis(_abstract(a, t, depth), _abstract(b, t, depth))
        case Con(a, b):
            return Con(_abstract(a, t, depth), _abstract(b, t, depth))
        case Exi(a):
            return Exi(_abstract(a, t, depth + 1))
        case Uni(a):
            return Uni(_abstract(a, t, depth + 1))
        case Neg(a):
            return Neg(_abstract(a, t, depth))
    raise TypeError(f"not a formula: {p!r}")


def _var_free(u: Term) -> bool:
    match u:
        case Var(_):
            return False
        case Fun(_, args):
            return all(_var_free(a) for a in args)
    raise TypeError(f"not a term: {u!r}")


def _closed_subterms(z: Sequent) -> list[Term]:
    """Variable-free function terms occurring in z, in traversal order."""
    out: dict[Term, None] = {}

    def from_term(u: Term) -> None:
        match u:
            case Fun(_, args):
                if _var_free(u):
                    out.setdefault(u)
                for a in args:
                    from_term(a)
            case Var(_):
                pass

    def walk(p: Formula) -> None:
        match p:
            case Pre(_, args):
                for a in args:
                    from_term(a)
            case Imp(a, b) | Dis(a, b) | Con(a, b):
                walk(a)
                walk(b)
            case Exi(a) | Uni(a) | Neg(a):
                walk(a)

    for p in z:
        walk(p)
    return list(out)


def _sequent_size(z: Sequent) -> int:
    return sum(formula_size(p) for p in z)


def _fun_ids(z: Sequent) -> set[int]:
    ids: set[int] = set()
    for p in z:
        funs, _ = symbols_of(p)
        ids.update(i for i, _arity in funs)
    return ids


def _leaf(rng: random.Random, max_tail: int) -> _Node:
    head: Formula = rng.choice(_ATOMS)
    if max_tail >= 1 and rng.random() < 0.2:
        head = Neg(rng.choice(_ATOMS))
    closer = Neg(head)
    extras_budget = max(0, max_tail - 1)
    extras: list[Formula] = []
    for _ in range(rng.randint(0, min(2, extras_budget))):
        atom = rng.choice(_ATOMS)
        extras.append(rng.choice((atom, Neg(atom), Neg(Neg(atom)))))
    tail = extras + [closer]
    rng.shuffle(tail)
    return _Node(RuleId.Basic, None, (head, *tail), ())


def _grow_candidates(rng: random.Random, node: _Node) -> list[tuple[RuleId, object]]:
    """Rules that can consume node's conclusion as their (first) premise."""
    s = node.conc
    h, z = s[0], s[1:]
    cands: list[tuple[RuleId, object]] = []
    if len(s) >= 2:
        cands.append((RuleId.AlphaDis, None))
        if isinstance(h, Neg):
            cands.append((RuleId.AlphaImp, None))
            if isinstance(s[1], Neg):
                cands.append((RuleId.AlphaCon, None))
    cands.append((RuleId.NegNeg, None))
    cands.append((RuleId.Ext, None))
    terms = _closed_subterms((h,)) or list(_CONSTANTS)
    cands.append((RuleId.GammaExi, rng.choice(terms + list(_CONSTANTS))))
    cands.append((RuleId.DeltaUni, None))
    if isinstance(h, Neg):
        inner_terms = _closed_subterms((h.p,)) or list(_CONSTANTS)
        cands.append((RuleId.GammaUni, rng.choice(inner_terms + list(_CONSTANTS))))
        cands.append((RuleId.DeltaExi, None))
    neg_members = [f.p for f in z if isinstance(f, Neg)]
    dneg_members = [f.p.p for f in z if isinstance(f, Neg) and isinstance(f.p, Neg)]
    if neg_members:
        cands.append((RuleId.BetaCon, rng.choice(neg_members)))
        if isinstance(h, Neg):
            cands.append((RuleId.BetaImp, rng.choice(neg_members)))
    if dneg_members and isinstance(h, Neg):
        cands.append((RuleId.BetaDis, rng.choice(dneg_members)))
    return cands


def _apply_growth(rng: random.Random, node: _Node, rule: RuleId, aux: object) -> _Node | None:
    s = node.conc
    h, z = s[0], s[1:]
    match rule:
        case RuleId.AlphaDis:
            return _Node(rule, None, (Dis(h, s[1]), *s[2:]), (node,))
        case RuleId.AlphaImp:
            assert isinstance(h, Neg)
            return _Node(rule, None, (Imp(h.p, s[1]), *s[2:]), (node,))
        case RuleId.AlphaCon:
            assert isinstance(h, Neg) and isinstance(s[1], Neg)
            return _Node(rule, None, (Neg(Con(h.p, s[1].p)), *s[2:]), (node,))
        case RuleId.NegNeg:
            return _Node(rule, None, (Neg(Neg(h)), *z), (node,))
        case RuleId.Ext:
            pool = list(s) + [rng.choice(_ATOMS + tuple(Neg(a) for a in _ATOMS))]
            extra = rng.sample(pool, k=rng.randint(0, 1))
            y = list(s) + extra
            rng.shuffle(y)
            conc = tuple(y)
            if conc == s or not ext(conc, s):
                return None
            return _Node(rule, None, conc, (node,))
        case RuleId.GammaExi:
            t = aux
            body = _abstract(h, t)
            if sub(0, t, body) != h:
                return None
            keep_hint = 0 not in free_indices(body) or rng.random() < 0.5
            return _Node(rule, t if keep_hint else None, (Exi(body), *z), (node,))
        case RuleId.GammaUni:
            assert isinstance(h, Neg)
            t = aux
            body = _abstract(h.p, t)
            if sub(0, t, body) != h.p:
                return None
            keep_hint = 0 not in free_indices(body) or rng.random() < 0.5
            return _Node(rule, t if keep_hint else None, (Neg(Uni(body)), *z), (node,))
        case RuleId.DeltaUni | RuleId.DeltaExi:
            inner = h.p if rule is RuleId.DeltaExi else h
            if rule is RuleId.DeltaExi:
                assert isinstance(h, Neg)
            witnesses = [c for c in _closed_subterms((inner,)) if isinstance(c, Fun) and not c.args]
            rng.shuffle(witnesses)
            for c in witnesses:
                body = _abstract(inner, c)
                if sub(0, c, body) == inner and news(c.id, (body, *z)):
                    break
            else:
                fresh = max(_fun_ids(s), default=-1) + 1
                c = Fun(fresh)
                body = _abstract(inner, c)
            if rule is RuleId.DeltaUni:
                return _Node(rule, None, (Uni(body), *z), (node,))
            return _Node(rule, None, (Neg(Exi(body)), *z), (node,))
        case RuleId.BetaCon:
            q = aux
            sibling = _Node(RuleId.Basic, None, (q, *z), ())
            return _Node(rule, None, (Con(h, q), *z), (node, sibling))
        case RuleId.BetaImp:
            assert isinstance(h, Neg)
            p_side = aux
            sibling = _Node(RuleId.Basic, None, (p_side, *z), ())
            return _Node(rule, None, (Neg(Imp(p_side, h.p)), *z), (sibling, node))
        case RuleId.BetaDis:
            assert isinstance(h, Neg)
            q_inner = aux
            sibling = _Node(RuleId.Basic, None, (Neg(q_inner), *z), ())
            return _Node(rule, None, (Neg(Dis(h.p, q_inner)), *z), (node, sibling))
    return None


def _node_count(node: _Node) -> int:
    return 1 + sum(_node_count(c) for c in node.children)


def _wrap_single(node: _Node) -> _Node:
    while len(node.conc) > 1:
        s = node.conc
        node = _Node(RuleId.AlphaDis, None, (Dis(s[0], s[1]), *s[2:]), (node,))
    return node


def _linearize(root: _Node) -> ProofScript:
    steps: list[Step] = []

    def walk(node: _Node, rest: tuple[Sequent, ...]) -> None:
        stated = tuple(c.conc for c in node.children) + rest
        steps.append(Step(RuleApp(node.rule, node.hint), stated))
        for k, child in enumerate(node.children):
            walk(child, tuple(c.conc for c in node.children[k + 1 :]) + rest)

    walk(root, ())
    return ProofScript(root.conc[0], tuple(steps))


def _grow(rng: random.Random, budget: GenBudget) -> _Node:
    max_tail = max(1, min(3, budget.max_steps - 1))
    node = _leaf(rng, max_tail)
    for _ in range(200):
        used = _node_count(node)
        projected_wrap = len(node.conc) - 1
        if used + projected_wrap >= budget.max_steps:
            break
        if rng.random() < 0.35:
            break
        rule, aux = rng.choice(_grow_candidates(rng, node))
        grown = _apply_growth(rng, node, rule, aux)
        if grown is None:
            continue
        added = _node_count(grown) - used
        new_wrap = len(grown.conc) - 1
        if used + added + new_wrap > budget.max_steps:
            continue
        if _sequent_size(grown.conc) + new_wrap > budget.max_formula_size:
            break
        node = grown
    return node


def random_derivation(seed: int, budget: GenBudget = GenBudget()) -> tuple[ProofScript, Sequent]:
    """Deterministically generate a complete, verifiable proof script.

    Returns the script together with its root sequent (the singleton of the
    goal formula).  The same seed and budget always produce the same script.
    """
    if budget.max_steps < 2:
        raise GenerationError("budget must allow at least two steps")
    rng = random.Random(seed)
    for _ in range(64):
        root = _wrap_single(_grow(rng, budget))
        script = _linearize(root)
        if len(script.steps) > budget.max_steps:
            continue
        if formula_size(script.goal) > budget.max_formula_size:
            continue
        if check_script(script):
            continue
        return script, root.conc
    raise GenerationError(f"no script within budget after 64 attempts (seed {seed})")
