"""Formula generators shared by the Barrington tests."""
import random
from itertools import product

from leafquant.barrington import And, Const, Not, Or, Var


def all_formulas(depth, num_vars):
    """Every formula over const/var/not/and/or of node height <= depth (leaves have height 1)."""
    leaves = [Const(False), Const(True)] + [Var(i) for i in range(1, num_vars + 1)]
    level = list(leaves)
    for _ in range(depth - 1):
        below = level
        level = list(leaves)
        level += [Not(f) for f in below]
        level += [And(f, g) for f, g in product(below, repeat=2)]
        level += [Or(f, g) for f, g in product(below, repeat=2)]
    return level


def random_formula(rng: random.Random, num_vars, depth):
    if depth <= 1 or rng.random() < 0.15:
        if rng.random() < 0.1:
            return Const(rng.random() < 0.5)
        return Var(rng.randint(1, num_vars))
    op = rng.choice(["not", "and", "or", "and", "or"])
    if op == "not":
        return Not(random_formula(rng, num_vars, depth - 1))
    cls = And if op == "and" else Or
    return cls(random_formula(rng, num_vars, depth - 1), random_formula(rng, num_vars, depth - 1))


def random_formulas(count, max_vars=8, depth=5, seed=1):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_vars)
        out.append((n, random_formula(rng, n, depth)))
    return out
