import pytest

from leafquant.automata import CountingAcceptor, GroupWordAcceptor, RegularAcceptor
from leafquant.catalog import NAMES, catalog, class_tag, parse_name, regex_for
from leafquant.errors import AlphabetError
from leafquant.perm import Permutation
from oracles import words

# (name, param, membership by counting/structure)
REFERENCE = {
    ("E", None): lambda w: "1" in w,
    ("U", None): lambda w: "0" not in w,
    ("maj", None): lambda w: w.count("1") > w.count("0"),
    ("us", None): lambda w: w.count("1") == 1,
    ("par", None): lambda w: w.count("1") % 2 == 1,
    ("mod_k", 3): lambda w: w.count("1") % 3 == 0,
    ("mod_k", 4): lambda w: w.count("1") % 4 == 0,
}


@pytest.mark.parametrize("key", sorted(REFERENCE, key=str))
def test_membership_against_counting(key):
    acc = catalog(*key)
    ref = REFERENCE[key]
    for w in words("01", 9):
        assert acc.accepts(w) == ref(w), w


def test_np_and_conp_semantics():
    acc = catalog("np_and_conp")
    for w in words("01", 9):
        assert acc.accepts(w) == ("010" in w and "0110" not in w)


def test_minimal_dfa_sizes():
    sizes = {("E", None): 2, ("U", None): 2, ("us", None): 3, ("par", None): 2,
             ("mod_k", 3): 3, ("np_and_conp", None): 9, ("A", 2): 8, ("A", 3): 15}
    for key, n in sizes.items():
        assert catalog(*key).dfa.num_states == n, key


def test_kinds():
    assert isinstance(catalog("maj"), CountingAcceptor)
    assert isinstance(catalog("s5_word"), GroupWordAcceptor)
    assert isinstance(catalog("E"), RegularAcceptor)
    assert regex_for("maj") is None


def test_s5_word_semantics():
    acc = catalog("s5_word")
    t, c = Permutation.parse("(12)"), Permutation.parse("(12345)")
    assert acc.accepts([])
    assert acc.accepts([t, t])
    assert acc.accepts([c] * 5)
    assert not acc.accepts([c] * 4)
    assert acc.product([t, c]) == t.then(c)
    with pytest.raises(AlphabetError):
        acc.accepts(["0"])


def test_class_tags():
    assert [class_tag(n) for n in ("E", "U", "maj", "us", "par", "s5_word")] == [
        "NP", "coNP", "PP", "US", "Mod_2P", "PSPACE"]
    assert class_tag("mod_k", 5) == "Mod_5P"
    assert class_tag("A", 3) == "BC(Sigma_3^p)"


@pytest.mark.parametrize("name,param", [("nope", None), ("mod_k", None), ("mod_k", 1), ("A", 1)])
def test_bad_catalog_requests(name, param):
    with pytest.raises(ValueError):
        catalog(name, param)


def test_parse_name():
    assert parse_name("mod_k:3") == ("mod_k", 3)
    assert parse_name("A(2)") == ("A", 2)
    assert parse_name(" E ") == ("E", None)


def test_every_name_builds():
    for name in NAMES:
        param = 2 if name in ("mod_k", "A") else None
        assert catalog(name, param).catalog_key == (name, param)
