"""Executable leaf-language machinery: automata algebra, leaf machines,
S5 permutation programs and cardinal-language reductions."""
from .automata import (BINARY, Acceptor, Alphabet, CountingAcceptor, Dfa, GroupWordAcceptor,
                       RegularAcceptor, accepts, char_string, compile_regex, parse_regex,
                       regex_to_min_dfa)
from .catalog import catalog
from .classify import Classification, Verdict, classify_leaf_language

__all__ = [
    "BINARY", "Acceptor", "Alphabet", "CountingAcceptor", "Dfa", "GroupWordAcceptor",
    "RegularAcceptor", "accepts", "char_string", "compile_regex", "parse_regex",
    "regex_to_min_dfa", "catalog", "Classification", "Verdict", "classify_leaf_language",
]
