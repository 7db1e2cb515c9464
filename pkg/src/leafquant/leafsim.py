"""Balanced-tree leaf machines and the characteristic-string operator.

A machine is described extensionally: for an input x it has ``leaf_count(x)``
computation paths, and path i prints ``leaf_symbol(x, i)``. An operator
instance is a two-argument predicate A, a bound f and a leaf language B, and
accepts x iff the characteristic string of A_x on 0..f(x) lies in B. The two
views are interconvertible without changing acceptance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .automata import BINARY, Acceptor, Alphabet, RegularAcceptor, char_string, compile_regex
from .errors import AlphabetError, DimacsError, ResourceLimitError

DEFAULT_VAR_CAP = 20
TRACE_LIMIT = 256


@dataclass(frozen=True)
class LeafMachine:
    leaf_count: Callable[[Sequence], int]
    leaf_symbol: Callable[[Sequence, int], object]
    alphabet: Alphabet = BINARY
    input_alphabet: Alphabet = BINARY
    name: str = "machine"


@dataclass(frozen=True)
class OperatorInstance:
    predicate: Callable[[Sequence, int], bool]
    bound: Callable[[Sequence], int]
    leaf_language: Acceptor


def leaf_string(m: LeafMachine, x: Sequence) -> Sequence:
    m.input_alphabet.check(x)
    n = m.leaf_count(x)
    if n < 1:
        raise ValueError(f"{m.name} has no leaves on {x!r}")
    return m.alphabet.join(m.leaf_symbol(x, i) for i in range(n))


def bleaf_accepts(m: LeafMachine, b: Acceptor, x: Sequence) -> bool:
    missing = [a for a in m.alphabet if a not in b.alphabet]
    if missing:
        raise AlphabetError(f"leaf symbols {missing!r} are not in the leaf language's alphabet")
    return b.accepts(leaf_string(m, x))


def operator_accepts(o: OperatorInstance, x: Sequence) -> bool:
    return o.leaf_language.accepts(char_string(o.predicate, x, 0, o.bound(x)))


def machine_to_operator(m: LeafMachine, b: Acceptor) -> OperatorInstance:
    """A = {(x, y) : path y prints 1}, f(x) = leaf_count(x) - 1."""
    if not set(m.alphabet) <= {"0", "1"}:
        raise AlphabetError("machine_to_operator needs a binary machine; block-encode it first")
    symbol = m.leaf_symbol
    count = m.leaf_count
    return OperatorInstance(lambda x, y: symbol(x, y) == "1", lambda x: count(x) - 1, b)


def operator_to_machine(o: OperatorInstance, input_alphabet: Alphabet = BINARY) -> LeafMachine:
    """Branch over y = 0..f(x) and print the characteristic bit at each leaf."""
    pred = o.predicate
    bound = o.bound
    return LeafMachine(lambda x: bound(x) + 1,
                       lambda x, y: "1" if pred(x, y) else "0",
                       BINARY, input_alphabet, "operator-machine")


# Block encoding of non-binary leaf alphabets --------------------------------

def code_width(alphabet: Alphabet) -> int:
    return max(1, math.ceil(math.log2(len(alphabet))))


def block_encode_machine(m: LeafMachine) -> LeafMachine:
    """Binary machine printing each original leaf symbol as a fixed-width code."""
    width = code_width(m.alphabet)
    index = m.alphabet.index
    symbol = m.leaf_symbol
    count = m.leaf_count

    def leaf(x, i):
        q, r = divmod(i, width)
        return format(index(symbol(x, q)), f"0{width}b")[r]

    return LeafMachine(lambda x: count(x) * width, leaf, BINARY, m.input_alphabet,
                       f"{m.name}/block")


class BlockDecodedAcceptor(Acceptor):
    """Binary words that decode block-wise into a word of ``inner``."""

    kind = "block"

    def __init__(self, inner: Acceptor):
        super().__init__(BINARY, f"block({inner.name})")
        self.inner = inner
        self.width = code_width(inner.alphabet)

    def _accepts(self, word):
        w = self.width
        if len(word) % w:
            return False
        letters = self.inner.alphabet.letters
        out = []
        for i in range(0, len(word), w):
            code = int("".join(word[i:i + w]), 2)
            if code >= len(letters):
                return False
            out.append(letters[code])
        return self.inner.accepts(self.inner.alphabet.join(out))


# CNF formulas and the satisfying-assignment machine -------------------------

@dataclass(frozen=True)
class Cnf:
    num_vars: int
    clauses: tuple

    def __post_init__(self):
        clauses = tuple(tuple(int(l) for l in c) for c in self.clauses)
        for c in clauses:
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise DimacsError(f"literal {lit} out of range for {self.num_vars} variables")
        object.__setattr__(self, "clauses", clauses)

    def satisfied_by(self, bits: Sequence[int]) -> bool:
        return all(any((lit > 0) == bool(bits[abs(lit) - 1]) for lit in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Cnf:
    num_vars = None
    expected = None
    clauses = []
    current = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: bad problem line {line!r}")
            try:
                num_vars, expected = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: bad problem line {line!r}") from None
            continue
        if num_vars is None:
            raise DimacsError(f"line {lineno}: clause before problem line")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        raise DimacsError("missing problem line")
    if current:
        clauses.append(tuple(current))
    if expected is not None and expected != len(clauses):
        raise DimacsError(f"problem line announces {expected} clauses, found {len(clauses)}")
    return Cnf(num_vars, tuple(clauses))


def assignment_bits(i: int, n: int) -> tuple:
    """The i-th assignment in lexicographic order, variable 1 most significant."""
    return tuple((i >> (n - 1 - j)) & 1 for j in range(n))


def sat_machine(cnf: Cnf, var_cap: int = DEFAULT_VAR_CAP) -> LeafMachine:
    """One path per assignment; a path prints 1 iff its assignment satisfies cnf.

    The input word is ignored.
    """
    n = cnf.num_vars
    if n > var_cap:
        raise ResourceLimitError(f"{n} variables exceed the cap of {var_cap}")
    return LeafMachine(lambda x: 1 << n,
                       lambda x, i: "1" if cnf.satisfied_by(assignment_bits(i, n)) else "0",
                       BINARY, BINARY, "sat")


def format_leaves(s: Sequence, limit: int = TRACE_LIMIT) -> str:
    text = s if isinstance(s, str) else " ".join(map(str, s))
    if len(s) <= limit:
        return text
    head = s[:limit] if isinstance(s, str) else " ".join(map(str, s[:limit]))
    return f"{head}... (length {len(s)})"


def trace(m: LeafMachine, b: Acceptor, x: Sequence) -> str:
    leaves = leaf_string(m, x)
    verdict = "accept" if b.accepts(leaves) else "reject"
    shown = (x if isinstance(x, str) else " ".join(map(str, x))) or "(empty)"
    return (f"INPUT: {shown}\n"
            f"LEAVES: {len(leaves)}\n"
            f"LEAF_STRING: {format_leaves(leaves)}\n"
            f"VERDICT: {verdict}\n")


# Registered example machines --------------------------------------------------

def _copy_machine() -> LeafMachine:
    # leaf i echoes input letter i; one trailing 0 keeps the tree nonempty
    return LeafMachine(lambda x: len(x) + 1,
                       lambda x, i: x[i] if i < len(x) else "0", name="copy")


def _short_prefix_machine() -> LeafMachine:
    return LeafMachine(lambda x: 6, lambda x, i: "1" if i < len(x) else "0", name="short-prefix")


def _below_value_machine() -> LeafMachine:
    # 2^|x| paths; path y prints 1 iff y is below the binary value of x
    return LeafMachine(lambda x: 1 << len(x),
                       lambda x, i: "1" if i < int(x or "0", 2) else "0", name="below-value")


def _ternary_machine() -> LeafMachine:
    abc = Alphabet(("a", "b", "c"))
    return LeafMachine(lambda x: len(x) + 2,
                       lambda x, i: "abc"[(x[:i].count("1") + i) % 3], abc, BINARY, "ternary")


def registered_machines() -> list:
    """Example (machine, leaf language) pairs over binary inputs.

    Non-binary machines come block-encoded, paired with the decoded language.
    """
    from .catalog import catalog
    ternary = _ternary_machine()
    inner = RegularAcceptor(compile_regex("(a+b+c)*c(a+b+c)*", ternary.alphabet))
    return [
        (_copy_machine(), catalog("E")),
        (_short_prefix_machine(), catalog("par")),
        (_below_value_machine(), catalog("maj")),
        (block_encode_machine(ternary), BlockDecodedAcceptor(inner)),
    ]
