"""Boolean formulas as S5 permutation programs.

A formula is rewritten over NOR alone and every NOR node with inputs x, y is
expanded into the sixteen-leaf word ``a0 b x x x x c y y y y d x e y f``. With
``false -> a0`` and ``true -> a1`` the word evaluates to a1 exactly when
NOR(x, y) holds, so the whole program multiplies out to a1 iff the formula is
true.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import ArityError, FormulaSyntaxError
from .perm import Permutation, symmetric_group

A0 = Permutation.parse("()")
A1 = Permutation.parse("(12345)")
B = Permutation.parse("(23)(45)")
C = Permutation.parse("(12435)")
D = Permutation.parse("(243)")
E = Permutation.parse("(345)")
F = Permutation.parse("(152)")

LEFT_TO_RIGHT = "left-to-right"
RIGHT_TO_LEFT = "right-to-left"
# Fixed by select_convention(); a regression test pins it.
CONVENTION = LEFT_TO_RIGHT


def multiply(p: Permutation, q: Permutation, convention: str = CONVENTION) -> Permutation:
    """Product ``p*q`` of two adjacent word letters (p to the left of q)."""
    if convention == LEFT_TO_RIGHT:
        return p.then(q)
    if convention == RIGHT_TO_LEFT:
        return q.then(p)
    raise ValueError(f"unknown convention {convention!r}")


def w_word(x, y) -> list:
    return [A0, B, x, x, x, x, C, y, y, y, y, D, x, E, y, F]


def w_value(x: Permutation, y: Permutation, convention: str = CONVENTION) -> Permutation:
    return evaluate_product(w_word(x, y), convention)


def w_identities(convention: str) -> dict:
    """Whether each of the four NOR identities holds under ``convention``."""
    return {
        "w(a0,a0)=a1": w_value(A0, A0, convention) == A1,
        "w(a0,a1)=a0": w_value(A0, A1, convention) == A0,
        "w(a1,a0)=a0": w_value(A1, A0, convention) == A0,
        "w(a1,a1)=a0": w_value(A1, A1, convention) == A0,
    }


def select_convention() -> str:
    good = [c for c in (LEFT_TO_RIGHT, RIGHT_TO_LEFT) if all(w_identities(c).values())]
    if len(good) != 1:
        raise RuntimeError(f"expected exactly one valid convention, found {good}")
    return good[0]


def evaluate_product(leaves: Sequence[Permutation], convention: str = CONVENTION) -> Permutation:
    """Ordered product, combined pairwise (segment-and-combine)."""
    items = list(leaves)
    if not items:
        raise ValueError("empty product")
    while len(items) > 1:
        paired = [multiply(items[i], items[i + 1], convention)
                  for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            paired.append(items[-1])
        items = paired
    return items[0]


def bottleneck_fold(leaves: Sequence[Permutation], convention: str = CONVENTION) -> Permutation:
    """Left-to-right scan that carries one permutation between steps."""
    it = iter(leaves)
    try:
        state = next(it)
    except StopIteration:
        raise ValueError("empty product") from None
    for leaf in it:
        state = multiply(state, leaf, convention)
    return state


# Formulas ------------------------------------------------------------------

class BoolFormula:
    def children(self) -> tuple:
        return ()


@dataclass(frozen=True)
class Const(BoolFormula):
    value: bool

    def __str__(self):
        return f"const {int(self.value)}"


@dataclass(frozen=True)
class Var(BoolFormula):
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("variables are numbered from 1")

    def __str__(self):
        return f"var {self.index}"


@dataclass(frozen=True)
class Not(BoolFormula):
    child: BoolFormula

    def children(self):
        return (self.child,)

    def __str__(self):
        return f"not ({self.child})"


@dataclass(frozen=True)
class _Binary(BoolFormula):
    left: BoolFormula
    right: BoolFormula
    op = ""

    def children(self):
        return (self.left, self.right)

    def __str__(self):
        return f"{self.op} ({self.left}) ({self.right})"


@dataclass(frozen=True)
class And(_Binary):
    op = "and"


@dataclass(frozen=True)
class Or(_Binary):
    op = "or"


@dataclass(frozen=True)
class Nor(_Binary):
    op = "nor"


def evaluate(phi: BoolFormula, assignment: Sequence[int]) -> bool:
    memo = {}

    def ev(node):
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Const):
            out = bool(node.value)
        elif isinstance(node, Var):
            out = bool(assignment[node.index - 1])
        elif isinstance(node, Not):
            out = not ev(node.child)
        elif isinstance(node, And):
            out = ev(node.left) and ev(node.right)
        elif isinstance(node, Or):
            out = ev(node.left) or ev(node.right)
        elif isinstance(node, Nor):
            out = not (ev(node.left) or ev(node.right))
        else:
            raise TypeError(f"unknown formula node {node!r}")
        memo[key] = out
        return out

    return ev(phi)


def arity(phi: BoolFormula) -> int:
    """Largest variable index occurring in phi (0 if none)."""
    best = 0
    seen = set()
    stack = [phi]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        if isinstance(node, Var):
            best = max(best, node.index)
        stack.extend(node.children())
    return best


def formula_depth(phi: BoolFormula) -> int:
    """Height counting nodes; a variable or constant has depth 1."""
    if not phi.children():
        return 1
    return 1 + max(formula_depth(c) for c in phi.children())


_TOKEN = re.compile(r"\s*(?:(\()|(\))|([A-Za-z_]+)(\d*)|(\d+))")


def parse_formula(text: str) -> BoolFormula:
    """Parse prefix notation, e.g. ``or (var 1) (not (var 2))``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise FormulaSyntaxError(f"unexpected {text[pos:pos + 10]!r} at position {pos}")
        lp, rp, word, suffix, num = m.groups()
        if lp or rp:
            tokens.append(lp or rp)
        elif word:
            tokens.append(word.lower())
            if suffix:
                tokens.append(suffix)
        else:
            tokens.append(num)
        pos = m.end()
    if not tokens:
        raise FormulaSyntaxError("empty formula")
    i = 0

    def take():
        nonlocal i
        if i >= len(tokens):
            raise FormulaSyntaxError("unexpected end of formula")
        i += 1
        return tokens[i - 1]

    def number():
        tok = take()
        if not tok.isdigit():
            raise FormulaSyntaxError(f"expected a number, got {tok!r}")
        return int(tok)

    def expr():
        tok = take()
        if tok == "(":
            node = expr()
            if take() != ")":
                raise FormulaSyntaxError("expected ')'")
            return node
        if tok in ("var", "x"):
            n = number()
            if n < 1:
                raise FormulaSyntaxError("variables are numbered from 1")
            return Var(n)
        if tok == "const":
            val = take()
            if val not in ("0", "1", "true", "false"):
                raise FormulaSyntaxError(f"bad constant {val!r}")
            return Const(val in ("1", "true"))
        if tok in ("true", "false"):
            return Const(tok == "true")
        if tok == "not":
            return Not(expr())
        if tok in ("and", "or", "nor"):
            cls = {"and": And, "or": Or, "nor": Nor}[tok]
            return cls(expr(), expr())
        raise FormulaSyntaxError(f"unexpected token {tok!r}")

    node = expr()
    if i != len(tokens):
        raise FormulaSyntaxError(f"trailing input starting at token {tokens[i]!r}")
    return node


def to_nor(phi: BoolFormula) -> BoolFormula:
    """Rewrite over NOR, variables and constants only."""
    memo = {}

    def go(node):
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, (Const, Var)):
            out = node
        elif isinstance(node, Not):
            x = go(node.child)
            out = Nor(x, x)
        elif isinstance(node, Or):
            inner = Nor(go(node.left), go(node.right))
            out = Nor(inner, inner)
        elif isinstance(node, And):
            x, y = go(node.left), go(node.right)
            out = Nor(Nor(x, x), Nor(y, y))
        elif isinstance(node, Nor):
            out = Nor(go(node.left), go(node.right))
        else:
            raise TypeError(f"unknown formula node {node!r}")
        memo[key] = out
        return out

    return go(phi)


# Programs ------------------------------------------------------------------
# Nodes compare by identity: programs are DAGs with heavy subtree sharing.

@dataclass(frozen=True, eq=False)
class ConstLeaf:
    perm: Permutation


@dataclass(frozen=True, eq=False)
class VarLeaf:
    index: int


@dataclass(frozen=True, eq=False)
class NorNode:
    children: tuple


@dataclass(frozen=True, eq=False)
class PadNode:
    """Sixteen-way padding block: one real subtree followed by identity filler."""

    children: tuple


_A0_LEAF = ConstLeaf(A0)


def _kids(node):
    return getattr(node, "children", ())


class GroupProgram:
    def __init__(self, root):
        self.root = root

    def leaf_count(self) -> int:
        memo = {}

        def count(node):
            if id(node) not in memo:
                kids = _kids(node)
                memo[id(node)] = sum(count(c) for c in kids) if kids else 1
            return memo[id(node)]

        return count(self.root)

    def nor_depth(self) -> int:
        return _depth(self.root, {})

    def leaves(self):
        """Leaves in left-to-right order (ConstLeaf or VarLeaf)."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            kids = _kids(node)
            if kids:
                stack.extend(reversed(kids))
            else:
                yield node

    def listing(self) -> list:
        return [str(leaf.perm) if isinstance(leaf, ConstLeaf) else f"x{leaf.index}"
                for leaf in self.leaves()]

    def flatten(self, assignment: Sequence[int]) -> list:
        return [leaf.perm if isinstance(leaf, ConstLeaf)
                else (A1 if assignment[leaf.index - 1] else A0)
                for leaf in self.leaves()]

    def evaluate(self, assignment: Sequence[int], convention: str = CONVENTION) -> Permutation:
        """Product of the flattened leaves, computed once per shared subtree."""
        if convention not in (LEFT_TO_RIGHT, RIGHT_TO_LEFT):
            raise ValueError(f"unknown convention {convention!r}")
        elements, index, table = _cayley()
        ltr = convention == LEFT_TO_RIGHT
        true, false = index[A1], index[A0]
        memo = {}

        # group elements as integer ids; products by table lookup
        def ev(node):
            key = id(node)
            if key in memo:
                return memo[key]
            if isinstance(node, ConstLeaf):
                out = index[node.perm]
            elif isinstance(node, VarLeaf):
                out = true if assignment[node.index - 1] else false
            else:
                kids = node.children
                out = ev(kids[0])
                for c in kids[1:]:
                    out = table[out][ev(c)] if ltr else table[ev(c)][out]
            memo[key] = out
            return out

        return elements[ev(self.root)]

    def is_balanced(self) -> bool:
        depths = set()
        memo = {}

        def walk(node, level):
            key = (id(node), level)
            if key in memo:
                return
            memo[key] = True
            kids = _kids(node)
            if not kids:
                depths.add(level)
            for c in kids:
                walk(c, level + 1)

        walk(self.root, 0)
        return len(depths) == 1


@lru_cache(maxsize=1)
def _cayley():
    """S5 elements, their ids, and ``table[i][j]`` = id of (element i then element j)."""
    elements = symmetric_group(5)
    index = {p: i for i, p in enumerate(elements)}
    table = [[index[p.then(q)] for q in elements] for p in elements]
    return elements, index, table


def _depth(node, memo):
    key = id(node)
    if key not in memo:
        kids = _kids(node)
        memo[key] = 1 + max(_depth(c, memo) for c in kids) if kids else 0
    return memo[key]


def compile_formula(phi: BoolFormula) -> GroupProgram:
    """Expand a NOR-only formula into its permutation program."""
    memo = {}

    def go(node):
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Const):
            out = ConstLeaf(A1 if node.value else A0)
        elif isinstance(node, Var):
            out = VarLeaf(node.index)
        elif isinstance(node, Nor):
            x, y = go(node.left), go(node.right)
            out = NorNode(tuple(ConstLeaf(p) if isinstance(p, Permutation) else p
                                for p in w_word(x, y)))
        else:
            raise TypeError(f"compile expects a NOR-only formula, got {type(node).__name__}")
        memo[key] = out
        return out

    return GroupProgram(go(phi))


def pad_to_balanced(program: GroupProgram) -> GroupProgram:
    """Insert identity leaves so every root-to-leaf path has length 4*depth."""
    if program.is_balanced():
        return program
    depth_memo = {}
    memo = {}

    def pad(node, r):
        key = (id(node), r)
        if key in memo:
            return memo[key]
        if r == 0:
            out = node
        elif isinstance(node, NorNode) and _depth(node, depth_memo) <= r:
            out = NorNode(tuple(pad(c, r - 1) for c in node.children))
        elif isinstance(node, (ConstLeaf, VarLeaf)):
            filler = pad(_A0_LEAF, r - 1)
            out = PadNode((pad(node, r - 1),) + (filler,) * 15)
        else:
            raise ValueError("cannot pad a node deeper than its slot")
        memo[key] = out
        return out

    return GroupProgram(pad(program.root, program.nor_depth()))


def barrington_accepts(phi: BoolFormula, assignment: Sequence[int]) -> bool:
    n = arity(phi)
    if len(assignment) < n:
        raise ArityError(f"formula uses {n} variables, assignment has {len(assignment)}")
    return _program_of(phi).evaluate(assignment) == A1


@lru_cache(maxsize=512)
def _program_of(phi: BoolFormula) -> GroupProgram:
    return compile_formula(to_nor(phi))
