"""Named leaf languages and the complexity classes they are known to define."""
from __future__ import annotations

from functools import lru_cache

from . import barrington
from .automata import (BINARY, Acceptor, CountingAcceptor, GroupWordAcceptor,
                       RegularAcceptor, compile_regex)
from .perm import Permutation, symmetric_group

NAMES = ("E", "U", "maj", "us", "par", "mod_k", "np_and_conp", "A", "s5_word")

_FIXED_REGEX = {
    "E": "(0+1)*1(0+1)*",
    "U": "1*",
    "us": "0*10*",
    "par": "0*1(0*10*1)*0*",
    "np_and_conp": "~(~((0+1)*010(0+1)*)+(0+1)*0110(0+1)*)",
}

_CLASS = {
    "E": "NP",
    "U": "coNP",
    "maj": "PP",
    "us": "US",
    "par": "Mod_2P",
    "np_and_conp": "NP&coNP",
    "s5_word": "PSPACE",
}


def mod_regex(k: int) -> str:
    """Words whose number of 1s is divisible by k."""
    return "0*(" + "10*" * k + ")*"


def a_regex(k: int) -> str:
    """The level-k language: two 1^k separators around a complemented level k-1."""
    if k < 2:
        raise ValueError("A(k) needs k >= 2")
    if k == 2:
        return "(0+1)*11(010)^+11(0+1)*"
    sep = "1" * k
    return f"(0+1)*{sep}~({a_regex(k - 1)}){sep}(0+1)*"


def regex_for(name: str, param: int | None = None) -> str | None:
    """Regex text for a regular catalog entry, None for non-regular ones."""
    if name in _FIXED_REGEX:
        return _FIXED_REGEX[name]
    if name == "mod_k":
        return mod_regex(_need(name, param))
    if name == "A":
        return a_regex(_need(name, param))
    return None


def _need(name, param):
    if param is None:
        raise ValueError(f"catalog entry {name!r} needs an integer parameter")
    if param < 2:
        raise ValueError(f"catalog entry {name!r} needs a parameter >= 2, got {param}")
    return param


def class_tag(name: str, param: int | None = None) -> str:
    if name == "mod_k":
        return f"Mod_{_need(name, param)}P"
    if name == "A":
        return f"BC(Sigma_{_need(name, param)}^p)"
    return _CLASS[name]


def _s5_multiply(p: Permutation, q: Permutation) -> Permutation:
    return barrington.multiply(p, q)


def catalog(name: str, param: int | None = None) -> Acceptor:
    acceptor = _build(name, param)
    acceptor.catalog_key = (name, param)
    return acceptor


@lru_cache(maxsize=None)
def _build(name, param):
    if name not in NAMES:
        raise ValueError(f"unknown catalog language {name!r}; known: {', '.join(NAMES)}")
    label = name if param is None else f"{name}({param})"
    if name == "maj":
        return CountingAcceptor(BINARY, lambda v: v[1] > v[0], name=label)
    if name == "s5_word":
        return GroupWordAcceptor(symmetric_group(5), _s5_multiply,
                                 Permutation.identity(5), name=label)
    if name in ("mod_k", "A"):
        _need(name, param)
    text = regex_for(name, param)
    return RegularAcceptor(compile_regex(text), name=label, regex=text)


def parse_name(text: str) -> tuple:
    """Split ``mod_k:3`` / ``A(3)`` / ``E`` into (name, param)."""
    text = text.strip()
    for open_, close in ((":", ""), ("(", ")")):
        if open_ in text:
            head, _, tail = text.partition(open_)
            tail = tail[: len(tail) - len(close)] if close and tail.endswith(close) else tail
            return head.strip(), int(tail)
    return text, None
