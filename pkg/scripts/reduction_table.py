"""Pairwise bounded reduction search between small cardinal languages."""
import argparse
from dataclasses import dataclass

from leafquant.cardinal import cardinal_language, search_reduction
from leafquant.catalog import catalog
from leafquant.errors import ResourceLimitError


@dataclass
class Config:
    languages: tuple = ("E", "U", "us", "maj")
    z_max: int = 1
    alpha_max: int = 2
    grid: int = 10


def table(cfg: Config) -> dict:
    specs = {n: cardinal_language(catalog(n)) for n in cfg.languages}
    out = {}
    for a in cfg.languages:
        for b in cfg.languages:
            try:
                w = search_reduction(specs[a], specs[b], cfg.z_max, cfg.alpha_max, cfg.grid)
                out[a, b] = "yes" if w else "none"
            except (ResourceLimitError, ValueError):
                out[a, b] = "cap"
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--z-max", type=int, default=1)
    ap.add_argument("--alpha-max", type=int, default=2)
    ap.add_argument("--grid", type=int, default=10)
    args = ap.parse_args()
    cfg = Config(z_max=args.z_max, alpha_max=args.alpha_max, grid=args.grid)
    result = table(cfg)
    # "none" only means no witness inside the bounds
    print("A \\ B".ljust(8) + "".join(b.ljust(7) for b in cfg.languages))
    for a in cfg.languages:
        print(a.ljust(8) + "".join(result[a, b].ljust(7) for b in cfg.languages))


if __name__ == "__main__":
    main()
