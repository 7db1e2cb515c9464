"""Classify every catalog language and print one table row per entry."""
import argparse
from dataclasses import dataclass

from leafquant.catalog import NAMES, catalog
from leafquant.classify import classify_leaf_language


@dataclass
class Config:
    params: tuple = (2, 3)
    monoid_cap: int = 50000


def rows(cfg: Config):
    for name in NAMES:
        params = cfg.params if name in ("mod_k", "A") else (None,)
        for p in params:
            acc = catalog(name, p)
            c = classify_leaf_language(acc, cfg.monoid_cap)
            size = c.evidence.get("monoid_size", "-")
            yield acc.name, size, c.verdict.value, c.named or "-"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--params", type=int, nargs="+", default=[2, 3])
    args = ap.parse_args()
    cfg = Config(params=tuple(args.params))
    print(f"{'language':<14}{'|M|':>6}  {'verdict':<15}named")
    for name, size, verdict, named in rows(cfg):
        print(f"{name:<14}{size!s:>6}  {verdict:<15}{named}")


if __name__ == "__main__":
    main()
