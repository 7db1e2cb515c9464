"""Cardinal languages, bounded significance and multinomial reduction witnesses.

A cardinal language is described by the set N(L) of Parikh vectors of its
words. It has bounded significance m when membership of v only depends on
``min(v_j, m)`` coordinatewise. A witness for a reduction from A to B is a
tuple of functions ``p_i(v) = sum_u alpha_u * prod_j C(v_j, u_j)`` with
nonnegative integer coefficients such that v in N(A) iff p(v) in N(B).

The search here is bounded, so it is one-sided: a returned witness has been
verified on a grid, while ``None`` only means nothing was found within the
bounds.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Callable, Sequence

from .automata import Acceptor, CountingAcceptor, RegularAcceptor, parikh
from .errors import NotCardinalError, ResourceLimitError, SpecFormatError
from .monoid import DEFAULT_MONOID_CAP, is_commutative, transition_monoid

__all__ = [
    "CardinalSpec", "MultinomialCombo", "ReductionWitness", "parikh",
    "cardinal_spec_of", "cardinal_language", "combo_eval", "search_reduction",
    "verify_witness", "identity_witness",
]

DEFAULT_K_CAP = 4
DEFAULT_M_MAX = 8
DEFAULT_SEARCH_LIMIT = 1_000_000
GRID_CAP = 64

IN, OUT = "∈", "∉"


def cap(v: Sequence[int], m: int) -> tuple:
    return tuple(min(x, m) for x in v)


class CardinalSpec:
    """N(L) for a cardinal language.

    Bounded specs (``m`` set) are a membership table on ``{0..m}^k``;
    unbounded ones wrap a predicate and have ``m = None``.
    """

    def __init__(self, k: int, m: int | None = None, members=None,
                 predicate: Callable[[tuple], bool] | None = None, name: str | None = None):
        if k < 1:
            raise ValueError("k must be positive")
        if (m is None) != (members is None):
            raise ValueError("give either m with a member table or a predicate")
        if m is None and predicate is None:
            raise ValueError("unbounded specs need a predicate")
        self.k = k
        self.m = m
        self.members = None if members is None else frozenset(tuple(v) for v in members)
        if self.members is not None:
            for v in self.members:
                if len(v) != k or any(not 0 <= x <= m for x in v):
                    raise ValueError(f"member {v} is not a capped grid point")
        self._predicate = predicate
        self.name = name

    @property
    def bounded(self) -> bool:
        return self.m is not None

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.k:
            raise ValueError(f"expected a {self.k}-vector, got {tuple(v)}")
        if self.m is not None:
            return cap(v, self.m) in self.members
        return bool(self._predicate(tuple(v)))

    __contains__ = contains

    def __eq__(self, other):
        if not isinstance(other, CardinalSpec) or not (self.bounded and other.bounded):
            return NotImplemented
        return (self.k, self.m, self.members) == (other.k, other.m, other.members)

    def __hash__(self):
        return hash((self.k, self.m, self.members))

    def __repr__(self):
        bound = f"m={self.m}" if self.bounded else "unbounded"
        return f"CardinalSpec({self.name or '?'}, k={self.k}, {bound})"

    def export(self) -> str:
        if not self.bounded:
            raise ValueError("only bounded specs have a table form")
        lines = [f"{self.k} {self.m}"]
        for v in product(range(self.m + 1), repeat=self.k):
            lines.append(" ".join(map(str, v)) + " " + (IN if v in self.members else OUT))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str, name: str | None = None) -> "CardinalSpec":
        rows = [ln.strip() for ln in text.splitlines()
                if ln.strip() and not ln.strip().startswith("#")]
        if not rows:
            raise SpecFormatError("empty spec")
        try:
            k, m = (int(t) for t in rows[0].split())
        except ValueError:
            raise SpecFormatError(f"bad header {rows[0]!r}; expected 'k m'") from None
        if k < 1 or m < 0:
            raise SpecFormatError(f"bad header {rows[0]!r}")
        seen = {}
        for row in rows[1:]:
            parts = row.split()
            if len(parts) != k + 1 or parts[-1] not in (IN, OUT):
                raise SpecFormatError(f"bad row {row!r}")
            try:
                v = tuple(int(t) for t in parts[:-1])
            except ValueError:
                raise SpecFormatError(f"bad row {row!r}") from None
            if any(not 0 <= x <= m for x in v) or v in seen:
                raise SpecFormatError(f"row {row!r} is outside the grid or repeated")
            seen[v] = parts[-1] == IN
        if len(seen) != (m + 1) ** k:
            raise SpecFormatError(f"expected {(m + 1) ** k} rows, found {len(seen)}")
        return cls(k, m, [v for v, inside in seen.items() if inside], name=name)


def _membership(a: Acceptor) -> Callable[[tuple], bool]:
    if isinstance(a, CountingAcceptor):
        return lambda v: bool(a.predicate(tuple(v)))
    letters = a.alphabet.letters

    def member(v):
        return a.accepts(a.alphabet.join(x for x, n in zip(letters, v) for _ in range(n)))

    return member


def cardinal_spec_of(a: Acceptor, m_max: int = DEFAULT_M_MAX, k_cap: int = DEFAULT_K_CAP,
                     monoid_cap: int = DEFAULT_MONOID_CAP) -> CardinalSpec:
    """Smallest-threshold bounded spec for ``a``; NotCardinalError otherwise."""
    k = len(a.alphabet)
    if k > k_cap:
        raise ResourceLimitError(f"alphabet of {k} letters exceeds the cap of {k_cap}")
    if isinstance(a, RegularAcceptor):
        if not is_commutative(transition_monoid(a.dfa.minimize(), monoid_cap)):
            raise NotCardinalError("not cardinal: syntactic monoid is not commutative")
    elif not isinstance(a, CountingAcceptor):
        raise NotCardinalError(f"not cardinal: unsupported acceptor kind {a.kind!r}")
    member = _membership(a)
    for m in range(m_max + 1):
        grid = product(range(m_max + m + 1), repeat=k)
        if all(member(v) == member(cap(v, m)) for v in grid):
            table = [v for v in product(range(m + 1), repeat=k) if member(v)]
            return CardinalSpec(k, m, table, name=a.name)
    raise NotCardinalError(f"no threshold up to m_max={m_max}: "
                           "membership never stabilises under capping")


def cardinal_language(a: Acceptor, m_max: int = DEFAULT_M_MAX) -> CardinalSpec:
    """Bounded spec when one exists, else the unbounded spec of a counting acceptor."""
    try:
        return cardinal_spec_of(a, m_max)
    except NotCardinalError:
        if isinstance(a, CountingAcceptor):
            return CardinalSpec(len(a.alphabet), predicate=_membership(a), name=a.name)
        raise


# Multinomial combinations ---------------------------------------------------

def vector_binomial(v: Sequence[int], u: Sequence[int]) -> int:
    out = 1
    for vj, uj in zip(v, u):
        out *= comb(vj, uj)
        if not out:
            break
    return out


@dataclass(frozen=True)
class MultinomialCombo:
    """``sum_u alpha_u * C(v, u)`` over ``u <= z``; only nonzero terms are stored."""

    z: tuple
    terms: tuple

    def __post_init__(self):
        z = tuple(self.z)
        terms = tuple(sorted((tuple(u), int(a)) for u, a in dict(self.terms).items() if a))
        if any(a < 0 for _, a in dict(self.terms).items()):
            raise ValueError("coefficients must be nonnegative")
        if not terms:
            raise ValueError("a combination needs at least one nonzero coefficient")
        for u, _ in terms:
            if len(u) != len(z) or any(not 0 <= uj <= zj for uj, zj in zip(u, z)):
                raise ValueError(f"monomial {u} is not below z={z}")
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, alphas: dict, z: Sequence[int] | None = None) -> "MultinomialCombo":
        if z is None:
            z = tuple(max(col) for col in zip(*alphas))
        return cls(tuple(z), tuple(alphas.items()))

    @property
    def alphas(self) -> dict:
        return dict(self.terms)

    @property
    def coefficient_sum(self) -> int:
        return sum(a for _, a in self.terms)

    def sort_key(self) -> tuple:
        return (self.coefficient_sum, len(self.terms), self.terms)

    def __call__(self, v: Sequence[int]) -> int:
        return combo_eval(self, v)

    def lines(self) -> list:
        return [" ".join(map(str, u)) + f" : {a}" for u, a in self.terms]


def combo_eval(c: MultinomialCombo, v: Sequence[int]) -> int:
    if len(v) != len(c.z):
        raise ValueError(f"dimension mismatch: combo has {len(c.z)}, vector has {len(v)}")
    return sum(a * vector_binomial(v, u) for u, a in c.terms)


@dataclass(frozen=True)
class ReductionWitness:
    combos: tuple
    grid: int

    def apply(self, v: Sequence[int]) -> tuple:
        return tuple(combo_eval(c, v) for c in self.combos)

    def export(self) -> str:
        lines = ["WITNESS: found", f"GRID: {self.grid}"]
        for i, c in enumerate(self.combos, 1):
            lines.append(f"COMBO {i}: z = {' '.join(map(str, c.z))}")
            lines.extend(c.lines())
        return "\n".join(lines) + "\n"


def identity_witness(k: int, grid: int = 0) -> ReductionWitness:
    z = (1,) * k
    combos = tuple(MultinomialCombo(z, ((tuple(int(i == j) for j in range(k)), 1),))
                   for i in range(k))
    return ReductionWitness(combos, grid)


def _grid(k, V):
    return list(product(range(V + 1), repeat=k))


def verify_witness(w: ReductionWitness, a: CardinalSpec, b: CardinalSpec, V: int) -> bool:
    if len(w.combos) != b.k or any(len(c.z) != a.k for c in w.combos):
        raise ValueError("witness dimensions do not match the specs")
    return all(a.contains(v) == b.contains(w.apply(v)) for v in _grid(a.k, V))


def required_grid(a: CardinalSpec, b: CardinalSpec, z_max: Sequence[int]) -> int:
    """Smallest grid on which a check covers every vector (for bounded specs)."""
    ms = [s.m for s in (a, b) if s.bounded]
    need = 2 * max(ms) + 2 if ms else 0
    if b.bounded:
        need = max(need, max(z_max) + b.m)
    return need


def search_reduction(a: CardinalSpec, b: CardinalSpec, z_max: Sequence[int] | int,
                     alpha_max: int, V: int, limit: int = DEFAULT_SEARCH_LIMIT,
                     grid_cap: int = GRID_CAP) -> ReductionWitness | None:
    """Least witness, in (coefficient sum, term count, terms) order, or None.

    When the specs coincide the identity map is tried first.
    """
    k, k2 = a.k, b.k
    z_max = (z_max,) * k if isinstance(z_max, int) else tuple(z_max)
    if len(z_max) != k or min(z_max) < 0 or alpha_max < 1 or V < 1:
        raise ValueError("bounds must be positive and match the source dimension")
    V = max(V, required_grid(a, b, z_max))
    if V > grid_cap:
        raise ResourceLimitError(f"grid bound {V} exceeds the cap of {grid_cap}")

    if k == k2 and max(z_max) >= 1 and min(z_max) >= 1:
        ident = identity_witness(k, V)
        ident = ReductionWitness(tuple(MultinomialCombo(z_max, c.terms) for c in ident.combos), V)
        if verify_witness(ident, a, b, V):
            return ident

    monomials = list(product(*(range(z + 1) for z in z_max)))
    # With a threshold m_b, coefficients above m_b never change capped values,
    # and lowering them only decreases the sort key.
    top = min(alpha_max, max(b.m, 1)) if b.bounded else alpha_max
    count = (top + 1) ** len(monomials) - 1
    if count > limit:
        raise ResourceLimitError(f"{count} candidate combinations exceed the limit of {limit}")

    grid = _grid(k, V)
    table = [[vector_binomial(v, u) for v in grid] for u in monomials]
    combos = []
    for alphas in product(range(top + 1), repeat=len(monomials)):
        if any(alphas):
            c = MultinomialCombo(z_max, tuple((u, x) for u, x in zip(monomials, alphas) if x))
            combos.append((c.sort_key(), alphas, c))
    combos.sort(key=lambda t: t[0])

    reps = []
    seen = set()
    for key, alphas, c in combos:
        values = [0] * len(grid)
        for row, x in zip(table, alphas):
            if x:
                for i, val in enumerate(row):
                    values[i] += x * val
        if b.bounded:
            values = [min(val, b.m) for val in values]
        sig = tuple(values)
        if sig not in seen:
            seen.add(sig)
            reps.append((key, c, sig))

    if len(reps) ** k2 > limit:
        raise ResourceLimitError(f"{len(reps)}^{k2} candidate tuples exceed the limit of {limit}")
    in_a = [a.contains(v) for v in grid]
    tuples = sorted(product(range(len(reps)), repeat=k2),
                    key=lambda t: (sum(reps[i][0][0] for i in t),
                                   sum(reps[i][0][1] for i in t),
                                   tuple(reps[i][0] for i in t)))
    for t in tuples:
        sigs = [reps[i][2] for i in t]
        if all(in_a[p] == b.contains(tuple(s[p] for s in sigs)) for p in range(len(grid))):
            return ReductionWitness(tuple(reps[i][1] for i in t), V)
    return None


def parse_witness(text: str) -> ReductionWitness:
    """Inverse of ReductionWitness.export."""
    grid = 0
    combos = []
    z = None
    terms = []
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("GRID:"):
            grid = int(line.split(":")[1])
        elif line.startswith("COMBO"):
            if z is not None:
                combos.append(MultinomialCombo(z, tuple(terms)))
            z = tuple(int(t) for t in line.split("=")[1].split())
            terms = []
        elif ":" in line and z is not None and not line.startswith("WITNESS"):
            u, a = line.split(":")
            terms.append((tuple(int(t) for t in u.split()), int(a)))
    if z is not None:
        combos.append(MultinomialCombo(z, tuple(terms)))
    return ReductionWitness(tuple(combos), grid)
