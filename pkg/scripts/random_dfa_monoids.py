"""Distribution of syntactic monoid sizes and verdicts for random complete DFAs."""
import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from leafquant.automata import Alphabet, Dfa
from leafquant.classify import classify_dfa


@dataclass
class Config:
    states: int = 5
    letters: int = 2
    samples: int = 500
    seed: int = 0


def random_dfa(rng: random.Random, cfg: Config) -> Dfa:
    alphabet = Alphabet(tuple("abcdefgh"[:cfg.letters]))
    delta = [[rng.randrange(cfg.states) for _ in range(cfg.letters)] for _ in range(cfg.states)]
    accepting = {q for q in range(cfg.states) if rng.random() < 0.5}
    return Dfa(alphabet, delta, 0, accepting)


def run(cfg: Config):
    rng = random.Random(cfg.seed)
    verdicts = Counter()
    sizes = []
    slowest = 0.0
    for _ in range(cfg.samples):
        t = time.perf_counter()
        c = classify_dfa(random_dfa(rng, cfg))
        slowest = max(slowest, time.perf_counter() - t)
        verdicts[c.verdict.value] += 1
        sizes.append(c.evidence["monoid_size"])
    return verdicts, sizes, slowest


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--states", type=int, default=5)
    ap.add_argument("--letters", type=int, default=2)
    ap.add_argument("--samples", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    cfg = Config(**vars(ap.parse_args()))
    verdicts, sizes, slowest = run(cfg)
    sizes.sort()
    print(f"samples: {cfg.samples}  states: {cfg.states}  letters: {cfg.letters}")
    print(f"monoid size median {sizes[len(sizes) // 2]}, max {sizes[-1]}")
    for verdict, n in sorted(verdicts.items()):
        print(f"{verdict:<15}{n}")
    print(f"slowest classification: {slowest:.3f} s")


if __name__ == "__main__":
    main()
