import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leafquant.automata import BINARY, Alphabet, RegularAcceptor, compile_regex, parikh
from leafquant.cardinal import (CardinalSpec, MultinomialCombo, ReductionWitness, cap,
                                cardinal_language, cardinal_spec_of, combo_eval,
                                identity_witness, parse_witness, search_reduction,
                                verify_witness)
from leafquant.catalog import catalog
from leafquant.errors import NotCardinalError, ResourceLimitError, SpecFormatError
from oracles import binom, words

E_MAJ = ReductionWitness((MultinomialCombo.of({(0, 0): 1}, (1, 1)),
                          MultinomialCombo.of({(0, 1): 2}, (1, 1))), 10)


def spec(name):
    return cardinal_language(catalog(name))


def test_parikh_examples():
    assert parikh("", BINARY) == (0, 0)
    assert parikh("0110", BINARY) == (2, 2)


@given(st.text("01", max_size=30), st.randoms())
def test_parikh_shuffle_invariant(w, rnd):
    letters = list(w)
    rnd.shuffle(letters)
    assert parikh("".join(letters), BINARY) == (sorted(w).count("0"), sorted(w).count("1"))


def test_spec_of_u_and_e():
    u = cardinal_spec_of(catalog("U"))
    assert (u.k, u.m) == (2, 1)
    assert u.members == {(0, 0), (0, 1)}
    e = cardinal_spec_of(catalog("E"))
    assert e.m == 1 and e.members == {(0, 1), (1, 1)}


def test_spec_of_us_needs_threshold_two():
    us = cardinal_spec_of(catalog("us"))
    assert us.m == 2
    assert us.contains((7, 1)) and not us.contains((0, 2))


def test_par_rejected():
    with pytest.raises(NotCardinalError, match="no threshold up to m_max=8"):
        cardinal_spec_of(catalog("par"), m_max=8)


def test_non_commutative_rejected():
    with pytest.raises(NotCardinalError, match="commutative"):
        cardinal_spec_of(catalog("np_and_conp"))
    with pytest.raises(ResourceLimitError, match="alphabet"):
        cardinal_spec_of(catalog("s5_word"))


def test_maj_falls_back_to_unbounded():
    with pytest.raises(NotCardinalError):
        cardinal_spec_of(catalog("maj"))
    m = spec("maj")
    assert not m.bounded
    assert m.contains((3, 4)) and not m.contains((4, 4))
    with pytest.raises(ValueError):
        m.export()


@pytest.mark.parametrize("name", ["E", "U", "us", "maj"])
def test_spec_faithful_to_acceptor(name):
    acc, s = catalog(name), spec(name)
    for w in words("01", 8):
        assert s.contains(parikh(w, BINARY)) == acc.accepts(w)


@pytest.mark.parametrize("name", ["E", "U", "us"])
def test_capping_law(name):
    s = spec(name)
    for v in product(range(2 * s.m + 3), repeat=s.k):
        assert s.contains(v) == s.contains(cap(v, s.m))


def test_three_letter_regular_spec():
    abc = Alphabet(("a", "b", "c"))
    # at least one a and no c, in any order
    acc = RegularAcceptor(compile_regex("b*a(a+b)*", abc))
    s = cardinal_spec_of(acc)
    assert (s.k, s.m) == (3, 1)
    assert s.contains((2, 5, 0)) and not s.contains((1, 0, 1))


def test_spec_text_round_trip():
    for name in ["E", "U", "us"]:
        s = spec(name)
        assert CardinalSpec.parse(s.export()) == s
    assert spec("E").export().splitlines()[:3] == ["2 1", "0 0 ∉", "0 1 ∈"]


@pytest.mark.parametrize("text", ["", "2", "2 1\n0 0 ∈", "2 1\n0 0 x\n0 1 ∈\n1 0 ∈\n1 1 ∈",
                                  "1 1\n0 ∈\n2 ∉", "1 1\n0 ∈\n0 ∉"])
def test_spec_parse_errors(text):
    with pytest.raises(SpecFormatError):
        CardinalSpec.parse(text)


def test_combo_examples():
    const = MultinomialCombo.of({(0, 0): 1}, (1, 1))
    assert all(combo_eval(const, v) == 1 for v in product(range(5), repeat=2))
    assert combo_eval(MultinomialCombo.of({(0, 1): 2}, (1, 1)), (3, 4)) == 8
    with pytest.raises(ValueError):
        combo_eval(const, (1, 2, 3))


def test_combo_invariants():
    with pytest.raises(ValueError):
        MultinomialCombo.of({(0, 1): -1}, (1, 1))
    with pytest.raises(ValueError):
        MultinomialCombo.of({(0, 1): 0}, (1, 1))
    with pytest.raises(ValueError):
        MultinomialCombo.of({(2, 0): 1}, (1, 1))


def test_combo_against_factorial_oracle():
    rng = random.Random(5)
    for _ in range(500):
        k = rng.randint(1, 3)
        z = tuple(rng.randint(0, 3) for _ in range(k))
        alphas = {u: rng.randint(0, 4) for u in product(*(range(x + 1) for x in z))}
        alphas[z] = alphas[z] or 1
        c = MultinomialCombo.of(alphas, z)
        v = tuple(rng.randint(0, 12) for _ in range(k))
        expected = 0
        for u, a in alphas.items():
            term = a
            for vj, uj in zip(v, u):
                term *= binom(vj, uj)
            expected += term
        assert combo_eval(c, v) == expected


def test_combo_arbitrary_precision():
    c = MultinomialCombo.of({(40,): 1}, (40,))
    assert combo_eval(c, (10 ** 4,)) == binom(10 ** 4, 40) > 2 ** 64


@settings(max_examples=100)
@given(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(1, 5),
                       min_size=1, max_size=5),
       st.tuples(st.integers(0, 15), st.integers(0, 15)), st.integers(0, 1))
def test_combo_monotone(alphas, v, coord):
    c = MultinomialCombo.of(alphas, (2, 2))
    bumped = list(v)
    bumped[coord] += 1
    assert combo_eval(c, tuple(bumped)) >= combo_eval(c, v)


def test_e_to_maj_witness():
    w = search_reduction(spec("E"), spec("maj"), (1, 1), 2, 10)
    assert w is not None
    assert w.combos[0].alphas == {(0, 0): 1}
    assert w.combos[1].alphas == {(0, 1): 2}
    assert verify_witness(w, spec("E"), spec("maj"), 10)


def test_verify_hand_witness_and_corruption():
    assert verify_witness(E_MAJ, spec("E"), spec("maj"), 10)
    # combos cannot be identically zero, so corrupt p2 to the constant 1 instead
    one = MultinomialCombo.of({(0, 0): 1}, (1, 1))
    bad = ReductionWitness((one, one), 10)
    assert not verify_witness(bad, spec("E"), spec("maj"), 10)
    assert spec("E").contains((0, 1)) and not spec("maj").contains(bad.apply((0, 1)))


def test_u_to_e_has_no_witness():
    assert search_reduction(spec("U"), spec("E"), (2, 2), 4, 12) is None


@pytest.mark.parametrize("name", ["E", "U", "us", "maj"])
def test_same_spec_gives_identity(name):
    s = spec(name)
    w = search_reduction(s, s, (1, 1), 1, 6)
    assert w is not None
    for i, c in enumerate(w.combos):
        assert c.alphas == {tuple(int(i == j) for j in range(2)): 1}
    assert verify_witness(identity_witness(2, 6), s, s, 6)


def test_search_limits():
    with pytest.raises(ResourceLimitError):
        search_reduction(spec("U"), spec("maj"), (3, 3), 4, 10, limit=1000)
    with pytest.raises(ResourceLimitError):
        search_reduction(spec("U"), spec("E"), (1, 1), 1, 100)
    with pytest.raises(ValueError):
        search_reduction(spec("U"), spec("E"), (1, 1), 0, 10)


def test_search_is_deterministic():
    a, b = spec("E"), spec("maj")
    assert search_reduction(a, b, (1, 1), 2, 10) == search_reduction(a, b, (1, 1), 2, 10)


def test_witness_text_round_trip():
    text = E_MAJ.export()
    assert text.splitlines()[:4] == ["WITNESS: found", "GRID: 10", "COMBO 1: z = 1 1", "0 0 : 1"]
    assert parse_witness(text) == E_MAJ
