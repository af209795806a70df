"""Term and formula tree basics: equality, symbol collection, sizes."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seqcalc import (
    Con,
    Dis,
    Exi,
    Fun,
    Imp,
    Neg,
    Pre,
    Uni,
    Var,
    formula_size,
    free_indices,
    symbols_of,
)

from enumeration import all_formulas

A = Fun(0, ())
B = Fun(1, ())


def test_terms_are_immutable_and_hashable():
    t = Fun(1, (Var(0), A))
    assert t == Fun(1, (Var(0), Fun(0, ())))
    assert hash(t) == hash(Fun(1, (Var(0), Fun(0, ()))))
    with pytest.raises(AttributeError):
        t.id = 2  # type: ignore[misc]


def test_formulas_distinguish_constructors():
    p = Pre(0, ())
    assert Dis(p, p) != Con(p, p)
    assert Imp(p, p) != Dis(p, p)
    assert Exi(p) != Uni(p)
    assert Neg(p) != p


def test_structural_equality_is_exhaustively_discriminating():
    pool = all_formulas(3, atom_term_size=1)
    for i, p in enumerate(pool):
        for j, q in enumerate(pool):
            assert (p == q) == (i == j)


def test_symbols_of_binary_atom():
    p = Pre(0, (A, B))
    funs, preds = symbols_of(p)
    assert funs == ((0, 0), (1, 0))
    assert preds == ((0, 2),)


def test_symbols_of_variable_only():
    funs, preds = symbols_of(Uni(Pre(0, (Var(0),))))
    assert funs == ()
    assert preds == ((0, 1),)


def test_symbols_of_deduplicates():
    funs, preds = symbols_of(Con(Pre(0, ()), Pre(0, ())))
    assert funs == ()
    assert preds == ((0, 0),)


def test_symbols_of_first_occurrence_order():
    p = Imp(Pre(1, (B,)), Pre(0, (A, B)))
    funs, preds = symbols_of(p)
    assert funs == ((1, 0), (0, 0))
    assert preds == ((1, 1), (0, 2))


def test_symbols_of_records_observed_arities():
    p = Con(Pre(0, ()), Pre(0, (A,)))
    _, preds = symbols_of(p)
    assert preds == ((0, 0), (0, 1))


def test_formula_size():
    assert formula_size(Pre(0, ())) == 1
    assert formula_size(Neg(Pre(0, ()))) == 2
    p, q = Pre(0, ()), Neg(Pre(1, ()))
    assert formula_size(Dis(p, q)) == 1 + formula_size(p) + formula_size(q)


def test_formula_size_ignores_term_structure():
    assert formula_size(Pre(0, (Fun(1, (Fun(1, (Var(0),)),)),))) == 1


def test_free_indices():
    assert free_indices(Pre(0, (Var(2),))) == frozenset({2})
    assert free_indices(Uni(Pre(0, (Var(0),)))) == frozenset()
    assert free_indices(Uni(Pre(0, (Var(1),)))) == frozenset({0})
    assert free_indices(Uni(Exi(Pre(0, (Var(0), Var(3)))))) == frozenset({1})
    assert free_indices(Pre(0, (A,))) == frozenset()


formulas = st.sampled_from(all_formulas(4))


@given(formulas, formulas, formulas)
def test_equality_relation_properties(p, q, r):
    assert p == p
    if p == q:
        assert q == p
        assert hash(p) == hash(q)
    if p == q and q == r:
        assert p == r
