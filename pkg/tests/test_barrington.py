import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leafquant import barrington as bp
from leafquant.barrington import (A0, A1, And, Const, Nor, Not, Or, Var, arity, barrington_accepts,
                                  bottleneck_fold, compile_formula, evaluate, evaluate_product,
                                  formula_depth, pad_to_balanced, parse_formula, to_nor)
from leafquant.errors import ArityError, FormulaSyntaxError
from leafquant.perm import Permutation, symmetric_group
from formulas import all_formulas, random_formulas
from oracles import truth

S5 = symmetric_group(5)
perms = st.sampled_from(S5)


def test_constants_match_cycle_notation():
    assert str(bp.B) == "(23)(45)"
    assert str(bp.C) == "(12435)"
    assert str(A1) == "(12345)"
    assert str(A0) == "()"


def test_pinned_convention_regression():
    # the identities hold under exactly one product order; keep it pinned
    assert all(bp.w_identities(bp.LEFT_TO_RIGHT).values())
    assert not any(bp.w_identities(bp.RIGHT_TO_LEFT).values())
    assert bp.select_convention() == bp.CONVENTION == bp.LEFT_TO_RIGHT


def test_w_word_shape():
    w = bp.w_word("x", "y")
    assert len(w) == 16
    assert w.count("x") == 5 and w.count("y") == 5


def test_multiply_conventions_differ():
    p, q = Permutation.parse("(12)"), Permutation.parse("(23)")
    assert bp.multiply(p, q, bp.LEFT_TO_RIGHT) == bp.multiply(q, p, bp.RIGHT_TO_LEFT)
    assert bp.multiply(p, q, bp.LEFT_TO_RIGHT) != bp.multiply(p, q, bp.RIGHT_TO_LEFT)
    with pytest.raises(ValueError):
        bp.multiply(p, q, "sideways")


@given(st.lists(perms, min_size=1, max_size=64))
def test_fold_equals_product(seq):
    assert bottleneck_fold(seq) == evaluate_product(seq)
    assert (bottleneck_fold(seq, bp.RIGHT_TO_LEFT)
            == evaluate_product(seq, bp.RIGHT_TO_LEFT))


@given(perms, perms, perms)
def test_product_associative(p, q, r):
    assert evaluate_product([p, q, r]) == evaluate_product([evaluate_product([p, q]), r])


def test_empty_product_rejected():
    with pytest.raises(ValueError):
        evaluate_product([])
    with pytest.raises(ValueError):
        bottleneck_fold([])


def test_parse_formula_forms():
    assert parse_formula("and (var 1) (not (var 2))") == And(Var(1), Not(Var(2)))
    assert parse_formula("or x1 x3") == Or(Var(1), Var(3))
    assert parse_formula("nor (const 0) true") == Nor(Const(False), Const(True))


@pytest.mark.parametrize("text", ["", "and x1", "var 0", "xor x1 x2", "(or x1 x2", "x1 x2"])
def test_parse_formula_errors(text):
    with pytest.raises(FormulaSyntaxError):
        parse_formula(text)


def test_arity_and_depth():
    phi = And(Var(1), Or(Var(3), Not(Const(True))))
    assert arity(phi) == 3
    assert formula_depth(phi) == 4
    assert arity(Const(True)) == 0


def test_barrington_arity_error():
    with pytest.raises(ArityError):
        barrington_accepts(And(Var(1), Var(4)), [1, 0, 1])
    assert barrington_accepts(Const(True), [])


def test_to_nor_is_nor_only_and_equivalent():
    for phi in all_formulas(2, 2):
        nor = to_nor(phi)
        stack = [nor]
        while stack:
            node = stack.pop()
            assert isinstance(node, (Nor, Var, Const))
            stack.extend(node.children())
        for bits in itertools.product((0, 1), repeat=2):
            assert evaluate(nor, bits) == truth(phi, bits)


def test_soundness_depth_two_exhaustive():
    for phi in all_formulas(2, 3):
        for bits in itertools.product((0, 1), repeat=3):
            assert barrington_accepts(phi, bits) == truth(phi, bits), (phi, bits)


def test_soundness_random_formulas():
    for n, phi in random_formulas(40, seed=7):
        for bits in itertools.product((0, 1), repeat=n):
            assert barrington_accepts(phi, bits) == truth(phi, bits)


def test_program_values_are_a0_or_a1():
    rng = random.Random(3)
    for n, phi in random_formulas(20, max_vars=4, depth=3, seed=11):
        prog = compile_formula(to_nor(phi))
        bits = [rng.randint(0, 1) for _ in range(n)]
        value = prog.evaluate(bits)
        assert value in (A0, A1)
        assert value == evaluate_product(prog.flatten(bits))


def _full_nor(depth, counter):
    if depth == 0:
        counter[0] += 1
        return Var(counter[0] % 3 + 1)
    return Nor(_full_nor(depth - 1, counter), _full_nor(depth - 1, counter))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_full_tree_leaf_count(d):
    prog = pad_to_balanced(compile_formula(_full_nor(d, [0])))
    assert prog.is_balanced()
    assert prog.leaf_count() == 16 ** d


def test_padding_preserves_value_and_balances():
    phi = to_nor(Or(Var(1), And(Var(2), Not(Var(3)))))
    prog = compile_formula(phi)
    padded = pad_to_balanced(prog)
    assert not prog.is_balanced() and padded.is_balanced()
    assert padded.leaf_count() == 16 ** padded.nor_depth()
    for bits in itertools.product((0, 1), repeat=3):
        assert padded.evaluate(bits) == prog.evaluate(bits)


def test_listing_tokens():
    listing = compile_formula(Nor(Var(1), Var(2))).listing()
    assert listing[0] == "()" and listing[1] == "(23)(45)"
    assert listing[2:6] == ["x1"] * 4
    assert len(listing) == 16


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=3, max_size=3))
def test_program_agrees_with_truth_table(bits):
    phi = to_nor(And(Var(1), Or(Var(2), Var(3))))
    prog = compile_formula(phi)
    assert (prog.evaluate(bits) == A1) == truth(phi, bits)
