"""Transition monoids of automata and the algebraic tests used for classification.

Elements are transformations of the automaton's states stored as tuples; the
product ``x*y`` means "apply x, then y", so the element of a word is the
product of its letters from left to right.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .automata import Dfa
from .errors import ResourceLimitError

DEFAULT_MONOID_CAP = 50000
TABLE_CAP = 8192


def compose(x: tuple, y: tuple) -> tuple:
    """x then y."""
    return tuple(y[q] for q in x)


class Monoid:
    def __init__(self, elements: Sequence[tuple], identity: int, generator_of: dict):
        self.elements = tuple(elements)
        self.index = {t: i for i, t in enumerate(self.elements)}
        self.identity = identity
        self.generator_of = dict(generator_of)

    def __len__(self):
        return len(self.elements)

    @property
    def degree(self) -> int:
        return len(self.elements[0])

    def multiply(self, i: int, j: int) -> int:
        return self.index[compose(self.elements[i], self.elements[j])]

    def element_of(self, word: Sequence) -> int:
        acc = self.identity
        for letter in word:
            acc = self.multiply(acc, self.generator_of[letter])
        return acc

    def power(self, i: int, k: int) -> int:
        acc = self.identity
        for _ in range(k):
            acc = self.multiply(acc, i)
        return acc

    def index_and_period(self, i: int) -> tuple:
        """Smallest (a, p) with x^a = x^(a+p)."""
        seen = {}
        x = self.elements[i]
        cur = x
        k = 1
        while cur not in seen:
            seen[cur] = k
            cur = compose(cur, x)
            k += 1
        a = seen[cur]
        return a, k - a

    def idempotent_power(self, i: int) -> int:
        a, p = self.index_and_period(i)
        return self.power(i, -(-a // p) * p)

    def idempotents(self) -> list:
        return [i for i, t in enumerate(self.elements) if compose(t, t) == t]

    @cached_property
    def table(self) -> np.ndarray:
        """Full multiplication table, ``table[i, j] = i*j``."""
        n_el = len(self)
        if n_el > TABLE_CAP:
            raise ResourceLimitError(f"multiplication table of {n_el} elements exceeds {TABLE_CAP}")
        E = np.array(self.elements, dtype=np.int64)
        n = E.shape[1]
        if n <= 15:
            weights = n ** np.arange(n, dtype=np.int64)
            codes = E @ weights
            order = np.argsort(codes)
            sorted_codes = codes[order]
        out = np.empty((n_el, n_el), dtype=np.int32)
        block = max(1, 2_000_000 // (n_el * n))
        for lo in range(0, n_el, block):
            hi = min(n_el, lo + block)
            # prod[b, j, q] = E[j, E[lo + b, q]]
            prod = E[:, E[lo:hi]].transpose(1, 0, 2)
            if n <= 15:
                pos = np.searchsorted(sorted_codes, prod @ weights)
                out[lo:hi] = order[pos]
            else:
                for b in range(hi - lo):
                    out[lo + b] = [self.index[tuple(r)] for r in prod[b].tolist()]
        return out

    def check_associativity(self, samples: int | None = None, seed: int = 0) -> bool:
        """Exhaustive when ``samples`` is None, otherwise random triples."""
        T = self.table
        n = len(self)
        if samples is None:
            left = T[T, :]           # (i*j)*k  indexed [i, j, k]
            right = T[:, T]          # i*(j*k)  indexed [i, j, k]
            return bool(np.array_equal(left, right))
        rng = random.Random(seed)
        for _ in range(samples):
            i, j, k = (rng.randrange(n) for _ in range(3))
            if T[T[i, j], k] != T[i, T[j, k]]:
                return False
        return True

    def export(self) -> str:
        lines = [f"size: {len(self)}", f"identity: {self.identity}"]
        for letter, g in self.generator_of.items():
            lines.append(f"generator {letter}: {g}")
        lines.append("table:")
        for row in self.table.tolist():
            lines.append(" ".join(map(str, row)))
        return "\n".join(lines) + "\n"


def transition_monoid(dfa: Dfa, cap: int = DEFAULT_MONOID_CAP) -> Monoid:
    """Closure of the letter transformations of ``dfa``, identity included.

    For a minimal DFA this is the syntactic monoid of its language.
    """
    n = dfa.num_states
    identity = tuple(range(n))
    gens = [tuple(dfa.delta[q][i] for q in range(n)) for i in range(len(dfa.alphabet))]
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g[q] for q in x)
            if y not in index:
                if len(elements) >= cap:
                    raise ResourceLimitError(f"monoid exceeds {cap} elements")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    generator_of = {a: index[g] for a, g in zip(dfa.alphabet, gens)}
    return Monoid(elements, 0, generator_of)


def is_aperiodic(m: Monoid) -> bool:
    """Every element satisfies x^k = x^(k+1) for some k."""
    return all(m.index_and_period(i)[1] == 1 for i in range(len(m)))


@dataclass(frozen=True)
class GroupInMonoid:
    idempotent: int
    members: frozenset
    inverses: dict = field(hash=False, compare=False)

    def __len__(self):
        return len(self.members)

    def verify(self, m: Monoid) -> bool:
        e = self.idempotent
        if e not in self.members or m.multiply(e, e) != e:
            return False
        for g in self.members:
            if m.multiply(e, g) != g or m.multiply(g, e) != g:
                return False
            inv = self.inverses.get(g)
            if inv not in self.members or m.multiply(g, inv) != e or m.multiply(inv, g) != e:
                return False
            for h in self.members:
                if m.multiply(g, h) not in self.members:
                    return False
        return True


def maximal_groups(m: Monoid) -> list:
    """For each idempotent e, the group of units of the local monoid eMe."""
    E = np.array(m.elements, dtype=np.int64)
    n = E.shape[1]
    weights = np.int64(n) ** np.arange(n, dtype=np.int64) if n <= 15 else None
    groups = []
    for e_idx in m.idempotents():
        e = E[e_idx]
        image = np.unique(e)
        local = e[E[:, e]]                      # e*x*e for every x
        on_image = np.sort(local[:, image], axis=1)
        units = local[(on_image == image).all(axis=1)]
        if weights is not None:
            # dedupe rows through their base-n codes, much cheaper than unique(axis=0)
            _, first = np.unique(units @ weights, return_index=True)
            units = units[first]
        else:
            units = np.unique(units, axis=0)
        members = frozenset(m.index[tuple(r)] for r in units.tolist())
        inverses = {}
        for g in members:
            # g^(period-1) is the inverse inside the group
            _, p = m.index_and_period(g)
            inverses[g] = m.multiply(m.power(g, p - 1), e_idx) if p > 1 else e_idx
        groups.append(GroupInMonoid(e_idx, members, inverses))
    return groups


def _generated_subgroup(m: Monoid, gens: set, identity: int) -> frozenset:
    out = {identity}
    queue = deque([identity])
    gens = list(gens)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = m.multiply(x, g)
            if y not in out:
                out.add(y)
                queue.append(y)
    return frozenset(out)


def derived_series(g: GroupInMonoid, m: Monoid) -> list:
    """Member sets G, [G,G], [[G,G],[G,G]], ... up to the first repeat."""
    e = g.idempotent
    inv = dict(g.inverses)
    series = [g.members]
    current = g.members
    for _ in range(len(g.members)):
        comms = set()
        for a in current:
            for b in current:
                c = m.multiply(m.multiply(inv[a], inv[b]), m.multiply(a, b))
                comms.add(c)
        nxt = _generated_subgroup(m, comms, e)
        if nxt == current:
            break
        series.append(nxt)
        current = nxt
    return series


SMALLEST_NONSOLVABLE_ORDER = 60


def is_solvable_group(g: GroupInMonoid, m: Monoid) -> bool:
    # every group of order below |A5| = 60 is solvable
    if len(g) < SMALLEST_NONSOLVABLE_ORDER:
        return True
    return len(derived_series(g, m)[-1]) == 1


def is_solvable(m: Monoid) -> bool:
    """Every maximal group of m is solvable."""
    return all(is_solvable_group(g, m) for g in maximal_groups(m))


def is_commutative(m: Monoid) -> bool:
    """The monoid is generated by its letters, so pairwise commuting letters suffice."""
    gens = sorted(set(m.generator_of.values()))
    return all(m.multiply(a, b) == m.multiply(b, a) for a in gens for b in gens if a < b)
