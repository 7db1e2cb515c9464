"""Alphabets, regular expressions, finite automata and language acceptors.

Words are plain sequences of letters: ``str`` for single-character alphabets,
tuples otherwise. Regular expressions use the grammar

    union   := concat ('+' concat)*
    concat  := factor factor*
    factor  := '~' factor | atom ('*' | '^+')*
    atom    := letter | '(' union ')' | '()' | '{}'

where ``()`` is the empty word, ``{}`` the empty language, ``X^+`` abbreviates
``XX*`` and ``~X`` is the complement of ``X`` relative to the alphabet.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .errors import AlphabetError, RegexSyntaxError, ResourceLimitError

DEFAULT_STATE_CAP = 20000

_RESERVED = set("+*^()~{} \t\n")


@dataclass(frozen=True)
class Alphabet:
    letters: tuple
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        letters = tuple(self.letters)
        if not letters:
            raise AlphabetError("alphabet must be nonempty")
        if len(set(letters)) != len(letters):
            raise AlphabetError(f"duplicate letters in {letters!r}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(letters)})

    @classmethod
    def of(cls, letters: Iterable[Hashable]) -> "Alphabet":
        return cls(tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, letter):
        return letter in self._index

    def index(self, letter) -> int:
        try:
            return self._index[letter]
        except (KeyError, TypeError):
            raise AlphabetError(f"letter {letter!r} is not in the alphabet") from None

    def check(self, word: Sequence) -> None:
        for letter in word:
            self.index(letter)

    @property
    def is_textual(self) -> bool:
        return all(isinstance(a, str) and len(a) == 1 for a in self.letters)

    def join(self, letters: Iterable) -> Sequence:
        """Assemble letters into a word (a str when every letter is one character)."""
        letters = list(letters)
        return "".join(letters) if self.is_textual else tuple(letters)

    def words(self, length: int) -> Iterator[Sequence]:
        """All words of exactly ``length`` letters, in lexicographic order."""
        for t in product(self.letters, repeat=length):
            yield self.join(t)

    def words_upto(self, length: int) -> Iterator[Sequence]:
        for n in range(length + 1):
            yield from self.words(n)


BINARY = Alphabet(("0", "1"))


def word_to_nat(word: Sequence, alphabet: Alphabet = BINARY) -> int:
    """Position of ``word`` in length-then-lexicographic order (empty word is 0)."""
    k = len(alphabet)
    n = 0
    for letter in word:
        n = n * k + alphabet.index(letter) + 1
    return n


def nat_to_word(n: int, alphabet: Alphabet = BINARY) -> Sequence:
    if n < 0:
        raise ValueError("negative index")
    k = len(alphabet)
    out = []
    while n > 0:
        n, r = divmod(n - 1, k)
        out.append(alphabet.letters[r])
    return alphabet.join(reversed(out))


def char_string(predicate: Callable[[Sequence, int], bool], x: Sequence, lo: int, hi: int) -> str:
    """Characteristic string of the section ``{y : predicate(x, y)}`` over ``lo..hi``."""
    if lo > hi:
        raise ValueError(f"lo={lo} exceeds hi={hi}")
    return "".join("1" if predicate(x, y) else "0" for y in range(lo, hi + 1))


# Regular expressions -------------------------------------------------------

class RegexAst:
    """Base class for regex syntax tree nodes."""

    def letters(self) -> set:
        out = set()
        stack = [self]
        while stack:
            node = stack.pop()
            if isinstance(node, Sym):
                out.add(node.letter)
            stack.extend(node.children())
        return out

    def children(self) -> tuple:
        return ()


@dataclass(frozen=True)
class EmptySet(RegexAst):
    def __str__(self):
        return "{}"


@dataclass(frozen=True)
class Epsilon(RegexAst):
    def __str__(self):
        return "()"


@dataclass(frozen=True)
class Sym(RegexAst):
    letter: Hashable

    def __str__(self):
        return str(self.letter)


@dataclass(frozen=True)
class Union(RegexAst):
    left: RegexAst
    right: RegexAst

    def children(self):
        return (self.left, self.right)

    def __str__(self):
        return f"({self.left}+{self.right})"


@dataclass(frozen=True)
class Concat(RegexAst):
    left: RegexAst
    right: RegexAst

    def children(self):
        return (self.left, self.right)

    def __str__(self):
        return f"{self.left}{self.right}"


@dataclass(frozen=True)
class Star(RegexAst):
    child: RegexAst

    def children(self):
        return (self.child,)

    def __str__(self):
        return f"({self.child})*"


@dataclass(frozen=True)
class Complement(RegexAst):
    child: RegexAst

    def children(self):
        return (self.child,)

    def __str__(self):
        return f"~({self.child})"


def plus(node: RegexAst) -> RegexAst:
    return Concat(node, Star(node))


def concat_all(nodes: Iterable[RegexAst]) -> RegexAst:
    out = None
    for node in nodes:
        out = node if out is None else Concat(out, node)
    return Epsilon() if out is None else out


class _Parser:
    def __init__(self, text, alphabet):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, ch):
        if self.peek() != ch:
            raise RegexSyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def parse(self):
        if self.peek() is None:
            raise RegexSyntaxError("empty regular expression", 0)
        node = self.union()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.peek()!r}", self.pos)
        return node

    def union(self):
        node = self.concat()
        while self.peek() == "+":
            self.pos += 1
            node = Union(node, self.concat())
        return node

    def concat(self):
        parts = []
        while True:
            ch = self.peek()
            if ch is None or ch in "+)":
                break
            parts.append(self.factor())
        if not parts:
            raise RegexSyntaxError("missing operand", self.pos)
        return concat_all(parts)

    def factor(self):
        if self.peek() == "~":
            self.pos += 1
            return Complement(self.factor())
        node = self.atom()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                node = Star(node)
            elif ch == "^":
                self.pos += 1
                self.expect("+")
                node = plus(node)
            else:
                return node

    def atom(self):
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            if self.peek() == ")":
                self.pos += 1
                return Epsilon()
            node = self.union()
            self.expect(")")
            return node
        if ch == "{":
            self.pos += 1
            self.expect("}")
            return EmptySet()
        if ch is None:
            raise RegexSyntaxError("unexpected end of input", start)
        if ch in _RESERVED:
            raise RegexSyntaxError(f"unexpected {ch!r}", start)
        if ch not in self.alphabet:
            raise RegexSyntaxError(f"letter {ch!r} outside alphabet", start)
        self.pos += 1
        return Sym(ch)


def parse_regex(text: str, alphabet: Alphabet = BINARY) -> RegexAst:
    for a in alphabet:
        if not (isinstance(a, str) and len(a) == 1) or a in _RESERVED:
            raise AlphabetError(f"letter {a!r} cannot appear in regex text")
    return _Parser(text, alphabet).parse()


# Deterministic automata ----------------------------------------------------

@dataclass(frozen=True)
class Dfa:
    """Complete DFA over states ``0..n-1``; ``delta[q][i]`` is the successor on letter i."""

    alphabet: Alphabet
    delta: tuple
    start: int
    accepting: frozenset

    def __post_init__(self):
        n = len(self.delta)
        k = len(self.alphabet)
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        if not 0 <= self.start < n:
            raise ValueError("start state out of range")
        for row in self.delta:
            if len(row) != k or not all(0 <= q < n for q in row):
                raise ValueError("transition table is not total")
        if not all(0 <= q < n for q in self.accepting):
            raise ValueError("accepting state out of range")

    @property
    def num_states(self) -> int:
        return len(self.delta)

    def run(self, word: Sequence, state: int | None = None) -> int:
        q = self.start if state is None else state
        index = self.alphabet.index
        for letter in word:
            q = self.delta[q][index(letter)]
        return q

    def accepts(self, word: Sequence) -> bool:
        return self.run(word) in self.accepting

    def complement(self) -> "Dfa":
        rest = frozenset(range(self.num_states)) - self.accepting
        return Dfa(self.alphabet, self.delta, self.start, rest)

    def reachable(self) -> list:
        seen = {self.start}
        order = [self.start]
        queue = deque(order)
        while queue:
            q = queue.popleft()
            for r in self.delta[q]:
                if r not in seen:
                    seen.add(r)
                    order.append(r)
                    queue.append(r)
        return order

    def minimize(self) -> "Dfa":
        """Minimal DFA, states numbered in breadth-first order from the start."""
        states = self.reachable()
        block = {q: int(q in self.accepting) for q in states}
        count = len(set(block.values()))
        while True:
            sigs = {}
            new = {}
            for q in states:
                sig = (block[q],) + tuple(block[r] for r in self.delta[q])
                new[q] = sigs.setdefault(sig, len(sigs))
            block = new
            if len(sigs) == count:
                break
            count = len(sigs)
        # canonical renumbering
        rep = {}
        for q in states:
            rep.setdefault(block[q], q)
        order = {}
        queue = deque([block[self.start]])
        order[block[self.start]] = 0
        while queue:
            b = queue.popleft()
            for r in self.delta[rep[b]]:
                if block[r] not in order:
                    order[block[r]] = len(order)
                    queue.append(block[r])
        delta = [None] * len(order)
        accepting = set()
        for b, i in order.items():
            q = rep[b]
            delta[i] = tuple(order[block[r]] for r in self.delta[q])
            if q in self.accepting:
                accepting.add(i)
        return Dfa(self.alphabet, delta, 0, accepting)

    def equivalent(self, other: "Dfa") -> bool:
        if self.alphabet != other.alphabet:
            return False
        return self.minimize() == other.minimize()

    def export(self) -> str:
        lines = [f"start: {self.start}",
                 "accepting: " + " ".join(str(q) for q in sorted(self.accepting))]
        for q, row in enumerate(self.delta):
            for a, r in zip(self.alphabet, row):
                lines.append(f"{q} {a} {r}")
        return "\n".join(lines) + "\n"


def empty_dfa(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, [[0] * len(alphabet)], 0, ())


class _Nfa:
    """Epsilon-NFA used during regex compilation."""

    def __init__(self, k):
        self.k = k
        self.eps = []
        self.moves = []

    def new_state(self):
        self.eps.append([])
        self.moves.append([[] for _ in range(self.k)])
        return len(self.eps) - 1

    def build(self, node, alphabet, cap):
        """Return (entry, exit) states of a fragment recognizing ``node``."""
        s = self.new_state()
        t = self.new_state()
        if isinstance(node, EmptySet):
            pass
        elif isinstance(node, Epsilon):
            self.eps[s].append(t)
        elif isinstance(node, Sym):
            self.moves[s][alphabet.index(node.letter)].append(t)
        elif isinstance(node, Union):
            for child in (node.left, node.right):
                a, b = self.build(child, alphabet, cap)
                self.eps[s].append(a)
                self.eps[b].append(t)
        elif isinstance(node, Concat):
            a1, b1 = self.build(node.left, alphabet, cap)
            a2, b2 = self.build(node.right, alphabet, cap)
            self.eps[s].append(a1)
            self.eps[b1].append(a2)
            self.eps[b2].append(t)
        elif isinstance(node, Star):
            a, b = self.build(node.child, alphabet, cap)
            self.eps[s] += [a, t]
            self.eps[b] += [a, t]
        elif isinstance(node, Complement):
            # lowered through a DFA, then spliced back in
            d = regex_to_min_dfa(node.child, alphabet, cap).complement()
            base = len(self.eps)
            for _ in range(d.num_states):
                self.new_state()
            for q, row in enumerate(d.delta):
                for i, r in enumerate(row):
                    self.moves[base + q][i].append(base + r)
                if q in d.accepting:
                    self.eps[base + q].append(t)
            self.eps[s].append(base + d.start)
        else:
            raise TypeError(f"unknown regex node {node!r}")
        return s, t

    def closure(self, states):
        out = set(states)
        stack = list(states)
        while stack:
            q = stack.pop()
            for r in self.eps[q]:
                if r not in out:
                    out.add(r)
                    stack.append(r)
        return frozenset(out)


def regex_to_min_dfa(ast: RegexAst, alphabet: Alphabet = BINARY,
                     state_cap: int = DEFAULT_STATE_CAP) -> Dfa:
    for letter in ast.letters():
        alphabet.index(letter)
    nfa = _Nfa(len(alphabet))
    entry, exit_ = nfa.build(ast, alphabet, state_cap)
    start = nfa.closure([entry])
    ids = {start: 0}
    delta = []
    accepting = set()
    queue = deque([start])
    while queue:
        S = queue.popleft()
        if exit_ in S:
            accepting.add(ids[S])
        row = []
        for i in range(len(alphabet)):
            T = nfa.closure([r for q in S for r in nfa.moves[q][i]])
            if T not in ids:
                if len(ids) >= state_cap:
                    raise ResourceLimitError(f"subset construction exceeded {state_cap} states")
                ids[T] = len(ids)
                queue.append(T)
            row.append(ids[T])
        delta.append(row)
    return Dfa(alphabet, delta, 0, accepting).minimize()


def compile_regex(text: str, alphabet: Alphabet = BINARY,
                  state_cap: int = DEFAULT_STATE_CAP) -> Dfa:
    return regex_to_min_dfa(parse_regex(text, alphabet), alphabet, state_cap)


# Acceptors -----------------------------------------------------------------

def parikh(word: Sequence, alphabet: Alphabet = BINARY) -> tuple:
    """Letter counts of ``word`` in alphabet order."""
    counts = [0] * len(alphabet)
    for letter in word:
        counts[alphabet.index(letter)] += 1
    return tuple(counts)


class Acceptor:
    """A deciding procedure for a language over ``alphabet``.

    Subclasses implement ``_accepts``; ``accepts`` validates letters first.
    """

    kind = "abstract"

    def __init__(self, alphabet: Alphabet, name: str | None = None):
        self.alphabet = alphabet
        self.name = name

    def accepts(self, word: Sequence) -> bool:
        self.alphabet.check(word)
        return self._accepts(word)

    def _accepts(self, word):
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self.name or '?'})"


class RegularAcceptor(Acceptor):
    kind = "regular"

    def __init__(self, dfa: Dfa, name: str | None = None, regex: str | None = None):
        super().__init__(dfa.alphabet, name)
        self.dfa = dfa
        self.regex = regex

    def _accepts(self, word):
        return self.dfa.accepts(word)


class CountingAcceptor(Acceptor):
    """Membership decided by a predicate on the Parikh vector."""

    kind = "counting"

    def __init__(self, alphabet: Alphabet, predicate: Callable[[tuple], bool],
                 name: str | None = None):
        super().__init__(alphabet, name)
        self.predicate = predicate

    def _accepts(self, word):
        return bool(self.predicate(parikh(word, self.alphabet)))


class GroupWordAcceptor(Acceptor):
    """Words over group elements whose ordered product equals ``target``.

    ``multiply(g, h)`` is the product of g followed by h.
    """

    kind = "group-word"

    def __init__(self, elements: Sequence, multiply: Callable, identity, target=None,
                 name: str | None = None):
        super().__init__(Alphabet(tuple(elements)), name)
        self.multiply = multiply
        self.identity = identity
        self.target = identity if target is None else target

    def product(self, word):
        acc = self.identity
        for g in word:
            acc = self.multiply(acc, g)
        return acc

    def _accepts(self, word):
        return self.product(word) == self.target

    def to_dfa(self) -> Dfa:
        """The Cayley-graph automaton: one state per group element."""
        letters = self.alphabet.letters
        index = {g: i for i, g in enumerate(letters)}
        delta = [[index[self.multiply(g, h)] for h in letters] for g in letters]
        return Dfa(self.alphabet, delta, index[self.identity], {index[self.target]})


def accepts(acceptor: Acceptor, word: Sequence) -> bool:
    return acceptor.accepts(word)


def dfa_of(acceptor: Acceptor) -> Dfa | None:
    """The automaton behind a regular-backed acceptor, else None."""
    if isinstance(acceptor, RegularAcceptor):
        return acceptor.dfa
    if isinstance(acceptor, GroupWordAcceptor):
        return acceptor.to_dfa()
    return None
