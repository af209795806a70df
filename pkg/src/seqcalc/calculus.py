"""The sequent calculus kernel: rules, backward application and checking.

A proof state is the ordered list of open goals.  Every rule works on the
first formula of the first open goal; the only structural rule is Ext, which
may reorder, duplicate or drop formulas.  A proof script records, after each
rule application, the full list of open goals the author expects.  Checking
recomputes each application and compares states with exact structural
equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .diagnostics import DUMMY_SPAN, Category, Diagnostic, SourceSpan
from .ops import ext, member, news, sub
from .syntax import Con, Dis, Exi, Formula, Fun, Imp, Neg, Pre, Sequent, Term, Uni, Var, symbols_of

ProofState = tuple[Sequent, ...]


class RuleId(Enum):
    Basic = "Basic"
    AlphaDis = "AlphaDis"
    AlphaImp = "AlphaImp"
    AlphaCon = "AlphaCon"
    BetaCon = "BetaCon"
    BetaImp = "BetaImp"
    BetaDis = "BetaDis"
    GammaExi = "GammaExi"
    GammaUni = "GammaUni"
    DeltaUni = "DeltaUni"
    DeltaExi = "DeltaExi"
    NegNeg = "NegNeg"
    Ext = "Ext"


GAMMA_RULES = frozenset({RuleId.GammaExi, RuleId.GammaUni})


@dataclass(frozen=True)
class RuleApp:
    """A rule together with an optional instantiation hint.

    Hints are only meaningful on the gamma rules, where they name the term
    the quantifier is instantiated with.
    """

    rule: RuleId
    hint: Term | None = None

    def __post_init__(self) -> None:
        if self.hint is not None and self.rule not in GAMMA_RULES:
            raise ValueError(f"hint not allowed on {self.rule.value}")


@dataclass(frozen=True)
class Step:
    app: RuleApp
    stated: ProofState
    span: SourceSpan = DUMMY_SPAN


@dataclass(frozen=True)
class ProofScript:
    goal: Formula
    steps: tuple[Step, ...]


class Ambiguous:
    """Marker: any term produces the stated formula (vacuous quantifier)."""

    def __repr__(self) -> str:
        return "AMBIGUOUS"


AMBIGUOUS = Ambiguous()


class RuleError(Exception):
    """A rule application that cannot be carried out on the current goal."""

    def __init__(self, category: Category, message: str):
        super().__init__(message)
        self.category = category
        self.message = message


FormulaFmt = Callable[[Formula], str]
SequentFmt = Callable[[Sequent], str]


def _unshift_term(t: Term, depth: int) -> Term | None:
    """Undo depth applications of inc_term; None if any index is too small."""
    match t:
        case Var(n):
            return Var(n - depth) if n >= depth else None
        case Fun(i, args):
            out = []
            for a in args:
                u = _unshift_term(a, depth)
                if u is None:
                    return None
                out.append(u)
            return Fun(i, tuple(out))
    raise TypeError(f"not a term: {t!r}")


def infer_instantiation(body: Formula, stated_head: Formula) -> Term | None | Ambiguous:
    """Recover t such that sub(0, t, body) equals stated_head.

    Returns the unique such term when the bound variable occurs in body and
    all occurrence sites agree, None when no term works, and AMBIGUOUS when
    the bound variable does not occur at all (any term works).
    """
    found: list[Term] = []

    def match_term(bt: Term, st: Term, depth: int) -> bool:
        match bt:
            case Var(n) if n == depth:
                t = _unshift_term(st, depth)
                if t is None:
                    return False
                found.append(t)
                return True
            case Var(n) if n < depth:
                return st == Var(n)
            case Var(n):
                return st == Var(n - 1)
            case Fun(i, args):
                if not isinstance(st, Fun) or st.id != i or len(st.args) != len(args):
                    return False
                return all(match_term(a, b, depth) for a, b in zip(args, st.args))
        raise TypeError(f"not a term: {bt!r}")

    def match_formula(bp: Formula, sp: Formula, depth: int) -> bool:
        match bp:
            case Pre(i, args):
                if not isinstance(sp, Pre) or sp.id != i or len(sp.args) != len(args):
                    return False
                return all(match_term(a, b, depth) for a, b in zip(args, sp.args))
            case Imp(a, b) | Dis(a, b) | Con(a, b):
                if type(sp) is not type(bp):
                    return False
                return match_formula(a, sp.p, depth) and match_formula(b, sp.q, depth)
            case Exi(a) | Uni(a) | Neg(a):
                if type(sp) is not type(bp):
                    return False
                bump = 0 if isinstance(bp, Neg) else 1
                return match_formula(a, sp.p, depth + bump)
        raise TypeError(f"not a formula: {bp!r}")

    if not match_formula(body, stated_head, 0):
        return None
    if not found:
        return AMBIGUOUS
    first = found[0]
    if any(t != first for t in found[1:]):
        return None
    return first


_HEAD_SHAPES: dict[RuleId, str] = {
    RuleId.AlphaDis: "Dis p q",
    RuleId.AlphaImp: "Imp p q",
    RuleId.AlphaCon: "Neg (Con p q)",
    RuleId.BetaCon: "Con p q",
    RuleId.BetaImp: "Neg (Imp p q)",
    RuleId.BetaDis: "Neg (Dis p q)",
    RuleId.GammaExi: "Exi p",
    RuleId.GammaUni: "Neg (Uni p)",
    RuleId.DeltaUni: "Uni p",
    RuleId.DeltaExi: "Neg (Exi p)",
    RuleId.NegNeg: "Neg (Neg p)",
}


def _shape_error(rule: RuleId, head: Formula, fmt: FormulaFmt) -> RuleError:
    return RuleError(
        Category.SHAPE_MISMATCH,
        f"{rule.value} expects the goal to start with {_HEAD_SHAPES[rule]},"
        f" found {fmt(head)}",
    )


def _smallest_fresh_id(goal: Sequent) -> int:
    used = set()
    for p in goal:
        funs, _ = symbols_of(p)
        for i, _arity in funs:
            used.add(i)
    i = 0
    while i in used:
        i += 1
    return i


def _delta_witness(
    rule: RuleId, body: Formula, tail: Sequent, stated_head: Formula | None
) -> int:
    """Pick the witness id for a delta rule and enforce its freshness."""
    inferred: Term | None | Ambiguous = AMBIGUOUS
    if stated_head is not None:
        probe = stated_head
        if rule is RuleId.DeltaExi:
            probe = probe.p if isinstance(probe, Neg) else None
        if probe is not None:
            inferred = infer_instantiation(body, probe)
    if isinstance(inferred, Fun) and not inferred.args:
        i = inferred.id
        if not news(i, (body,) + tail):
            raise RuleError(
                Category.FRESHNESS_VIOLATION,
                f"{rule.value} witness (function id {i}) already occurs in the sequent",
            )
        return i
    # No constant can be read off the stated head: fall back to the smallest
    # fresh id.  Any mismatch then surfaces as a state mismatch.
    return _smallest_fresh_id((body,) + tail)


def premises_of(
    app: RuleApp,
    goal: Sequent,
    stated_first: Sequent | None = None,
    fmt: FormulaFmt | None = None,
) -> tuple[Sequent, ...]:
    """Premise sequents of applying app backward to goal.

    stated_first is the first sequent the author stated after the step; the
    gamma, delta and Ext rules consult it to recover instantiation terms,
    witnesses and the extension target.  Raises RuleError when the rule does
    not fit.
    """
    if fmt is None:
        from .printers import print_full

        fmt = print_full
    rule = app.rule
    if not goal:
        raise RuleError(
            Category.SHAPE_MISMATCH, f"{rule.value} cannot apply to an empty sequent"
        )
    h, z = goal[0], goal[1:]
    stated_head = stated_first[0] if stated_first else None

    match rule:
        case RuleId.Basic:
            if not member(Neg(h), z):
                raise RuleError(
                    Category.BASIC_MISAPPLIED,
                    f"Basic needs the negation of {fmt(h)} later in the goal",
                )
            return ()
        case RuleId.AlphaDis:
            if not isinstance(h, Dis):
                raise _shape_error(rule, h, fmt)
            return ((h.p, h.q) + z,)
        case RuleId.AlphaImp:
            if not isinstance(h, Imp):
                raise _shape_error(rule, h, fmt)
            return ((Neg(h.p), h.q) + z,)
        case RuleId.AlphaCon:
            if not (isinstance(h, Neg) and isinstance(h.p, Con)):
                raise _shape_error(rule, h, fmt)
            return ((Neg(h.p.p), Neg(h.p.q)) + z,)
        case RuleId.BetaCon:
            if not isinstance(h, Con):
                raise _shape_error(rule, h, fmt)
            return ((h.p,) + z, (h.q,) + z)
        case RuleId.BetaImp:
            if not (isinstance(h, Neg) and isinstance(h.p, Imp)):
                raise _shape_error(rule, h, fmt)
            return ((h.p.p,) + z, (Neg(h.p.q),) + z)
        case RuleId.BetaDis:
            if not (isinstance(h, Neg) and isinstance(h.p, Dis)):
                raise _shape_error(rule, h, fmt)
            return ((Neg(h.p.p),) + z, (Neg(h.p.q),) + z)
        case RuleId.NegNeg:
            if not (isinstance(h, Neg) and isinstance(h.p, Neg)):
                raise _shape_error(rule, h, fmt)
            return ((h.p.p,) + z,)
        case RuleId.GammaExi | RuleId.GammaUni:
            if rule is RuleId.GammaExi:
                if not isinstance(h, Exi):
                    raise _shape_error(rule, h, fmt)
                body = h.p
            else:
                if not (isinstance(h, Neg) and isinstance(h.p, Uni)):
                    raise _shape_error(rule, h, fmt)
                body = h.p.p
            t = app.hint
            if t is None:
                probe = stated_head
                if rule is RuleId.GammaUni:
                    probe = probe.p if isinstance(probe, Neg) else None
                inferred = infer_instantiation(body, probe) if probe is not None else None
                if not isinstance(inferred, (Fun, Var)):
                    raise RuleError(
                        Category.MISSING_HINT,
                        f"cannot infer the instantiation term for {rule.value};"
                        f" add a hint like {rule.value}[a]",
                    )
                t = inferred
            inst = sub(0, t, body)
            premise = Neg(inst) if rule is RuleId.GammaUni else inst
            return ((premise,) + z,)
        case RuleId.DeltaUni:
            if not isinstance(h, Uni):
                raise _shape_error(rule, h, fmt)
            i = _delta_witness(rule, h.p, z, stated_head)
            return ((sub(0, Fun(i, ()), h.p),) + z,)
        case RuleId.DeltaExi:
            if not (isinstance(h, Neg) and isinstance(h.p, Exi)):
                raise _shape_error(rule, h, fmt)
            i = _delta_witness(rule, h.p.p, z, stated_head)
            return ((Neg(sub(0, Fun(i, ()), h.p.p)),) + z,)
        case RuleId.Ext:
            if stated_first is None:
                raise RuleError(
                    Category.SHAPE_MISMATCH,
                    "Ext needs a stated sequent to extend to; it cannot close a goal",
                )
            if not ext(goal, stated_first):
                missing = next(p for p in stated_first if not member(p, goal))
                raise RuleError(
                    Category.EXT_NOT_SUBSET,
                    f"Ext may only keep formulas already present: {fmt(missing)}"
                    f" is not a member of the goal",
                )
            return (stated_first,)
    raise AssertionError(f"unhandled rule {rule!r}")


def _default_sequent_fmt(z: Sequent) -> str:
    from .printers import print_full_sequent

    return print_full_sequent(z)


def _fmt_state(state: ProofState, fmt_sequent: SequentFmt) -> str:
    if not state:
        return "no open goals"
    return " + ".join(fmt_sequent(z) for z in state)


def check_step(
    state: ProofState,
    step: Step,
    fmt_formula: FormulaFmt | None = None,
    fmt_sequent: SequentFmt | None = None,
) -> tuple[ProofState | None, list[Diagnostic]]:
    """Apply step to the first open goal and compare against its stated state.

    Returns the new state (None on a hard error) plus any diagnostics.  The
    stated state must list every open goal, new branches first, in exact
    order.
    """
    if fmt_sequent is None:
        fmt_sequent = _default_sequent_fmt
    diags: list[Diagnostic] = []
    if not state:
        return None, [
            Diagnostic(
                Category.NO_OPEN_GOALS,
                step.span,
                f"{step.app.rule.value} applied after the proof is already complete",
            )
        ]
    if step.stated == state:
        diags.append(
            Diagnostic(
                Category.UNCHANGED_SEQUENT,
                step.span,
                "stated state repeats the previous state unchanged",
            )
        )
    goal, rest = state[0], state[1:]
    stated_first = step.stated[0] if step.stated else None
    try:
        premises = premises_of(step.app, goal, stated_first, fmt_formula)
    except RuleError as err:
        diags.append(
            Diagnostic(
                err.category,
                step.span,
                err.message,
                actual=fmt_sequent(goal),
            )
        )
        return None, diags
    expected = premises + rest
    if step.stated != expected:
        diags.append(
            Diagnostic(
                Category.STATE_MISMATCH,
                step.span,
                f"stated state does not match the result of {step.app.rule.value}",
                expected=_fmt_state(expected, fmt_sequent),
                actual=_fmt_state(step.stated, fmt_sequent),
            )
        )
        return None, diags
    return step.stated, diags


def check_script(
    script: ProofScript,
    fmt_formula: FormulaFmt | None = None,
    fmt_sequent: SequentFmt | None = None,
    fallback_span: SourceSpan = DUMMY_SPAN,
) -> list[Diagnostic]:
    """Check a whole script starting from the single stated goal.

    Stops at the first hard error; warnings gathered up to that point are
    kept.  An empty result means the proof is complete and correct.
    """
    state: ProofState = ((script.goal,),)
    diags: list[Diagnostic] = []
    for step in script.steps:
        new_state, step_diags = check_step(state, step, fmt_formula, fmt_sequent)
        diags.extend(step_diags)
        if new_state is None:
            return diags
        state = new_state
    if state:
        if fmt_sequent is None:
            fmt_sequent = _default_sequent_fmt
        span = script.steps[-1].span if script.steps else fallback_span
        open_goals = len(state)
        diags.append(
            Diagnostic(
                Category.INCOMPLETE_PROOF,
                span,
                f"proof ends with {open_goals} open goal{'s' if open_goals != 1 else ''}",
                actual=_fmt_state(state, fmt_sequent),
            )
        )
    return diags
