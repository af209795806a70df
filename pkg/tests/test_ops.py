"""Substitution and side-condition functions against pinned cases and oracles."""

from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from seqcalc import Exi, Fun, Neg, Pre, Uni, Var, ext, inc_term, member, new, news, sub
from seqcalc.ops import new_term, sub_term

from enumeration import all_formulas, all_terms, reference_ext, reference_member

A = Fun(0, ())


def test_inc_term():
    assert inc_term(Var(2)) == Var(3)
    assert inc_term(Fun(0, ())) == Fun(0, ())
    assert inc_term(Fun(1, (Var(0), Fun(0, ())))) == Fun(1, (Var(1), Fun(0, ())))


def test_sub_term():
    assert sub_term(0, Fun(0, ()), Var(0)) == Fun(0, ())
    assert sub_term(0, Fun(0, ()), Var(3)) == Var(2)
    assert sub_term(1, Fun(0, ()), Var(0)) == Var(0)


def test_sub_under_quantifier():
    # replacing the outer variable leaves the inner binder's index alone
    body = Uni(Pre(0, (Var(1), Var(0))))
    assert sub(0, A, body) == Uni(Pre(0, (A, Var(0))))


def test_sub_at_surface():
    p = Pre(0, (A, Var(0)))
    assert sub(0, A, p) == Pre(0, (A, A))


def test_sub_no_variables():
    assert sub(0, Fun(3, ()), Pre(5, ())) == Pre(5, ())


def test_new():
    assert new(0, Pre(0, (Fun(0, ()),))) is False
    assert new(0, Uni(Pre(0, (Var(0),)))) is True
    assert new(1, Pre(0, (Fun(0, (Fun(1, ()),)),))) is False


def test_news():
    z = (Neg(Exi(Pre(0, (Var(0),)))), Exi(Pre(1, (Var(0),))))
    assert news(2, z) is True
    assert news(7, ()) is True
    assert news(0, (Pre(0, (Fun(0, ()),)),)) is False


def test_member():
    p, q, r = Pre(0, ()), Pre(1, ()), Pre(2, ())
    assert member(p, ()) is False
    assert member(Neg(Pre(0, (A,))), (Neg(Pre(0, (A,))),)) is True
    assert member(p, (q, p, r)) is True


def test_ext():
    p, q = Pre(0, (A,)), Pre(1, (A,))
    q0 = Exi(Pre(1, (Var(0),)))
    assert ext((Neg(q), Neg(p), q0), (q0, Neg(q))) is True
    assert ext((p,), (p, p)) is True
    assert ext((p,), (p, q)) is False
    assert ext((), ()) is True


POOL = [Pre(0, (A,)), Neg(Pre(0, (A,))), Exi(Pre(1, (Var(0),)))]


def _lists_up_to(n):
    lists = [()]
    frontier = [()]
    for _ in range(n):
        frontier = [z + (p,) for z in frontier for p in POOL]
        lists.extend(frontier)
    return lists


def test_member_matches_reference_exhaustively():
    for z in _lists_up_to(4):
        for x in POOL:
            assert member(x, z) == reference_member(x, z), (x, z)


def test_ext_matches_reference_exhaustively():
    lists = _lists_up_to(4)
    for y in lists:
        for z in lists:
            assert ext(y, z) == reference_ext(y, z), (y, z)


def test_ext_reflexive_transitive():
    lists = _lists_up_to(2)
    for y in lists:
        assert ext(y, y)
    for x in lists:
        for y in lists:
            if not ext(x, y):
                continue
            for z in lists:
                if ext(y, z):
                    assert ext(x, z)


def test_ext_preserves_member():
    lists = _lists_up_to(3)
    for y in lists:
        for z in lists:
            if ext(y, z):
                for x in POOL:
                    if member(x, z):
                        assert member(x, y)


def test_inc_then_sub_cancels():
    for t in all_terms(4):
        for s in all_terms(2):
            assert sub_term(0, s, inc_term(t)) == t


def test_sub_preserves_freshness():
    # substituting a term free of symbol c cannot introduce c
    c = 5
    for p in all_formulas(3, atom_term_size=1):
        if not new(c, p):
            continue
        for t in all_terms(2):
            if new_term(c, t):
                assert new(c, sub(0, t, p))


terms = st.sampled_from(all_terms(3))


@given(terms, st.integers(min_value=0, max_value=9))
def test_inc_preserves_function_symbols(t, c):
    assert new_term(c, inc_term(t)) == new_term(c, t)
