"""Permutations of {1, ..., n} with cycle notation I/O."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _permutations

_CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class Permutation:
    """``images[i - 1]`` is the image of point i."""

    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images!r} is not a bijection on 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int = 5) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str, n: int = 5) -> "Permutation":
        """Parse cycle notation such as ``(23)(45)``; ``()`` is the identity.

        Points are single digits unless separated by spaces or commas.
        """
        text = text.strip()
        if not text or _CYCLE.sub("", text).strip():
            raise ValueError(f"bad cycle notation {text!r}")
        images = list(range(1, n + 1))
        seen = set()
        for body in _CYCLE.findall(text):
            body = body.strip()
            if not body:
                continue
            if " " in body or "," in body:
                points = [int(t) for t in re.split(r"[ ,]+", body)]
            else:
                points = [int(c) for c in body]
            for p in points:
                if not 1 <= p <= n or p in seen:
                    raise ValueError(f"bad point {p} in {text!r}")
                seen.add(p)
            for i, p in enumerate(points):
                images[p - 1] = points[(i + 1) % len(points)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Apply self first, then other."""
        img = other.images
        return Permutation(tuple(img[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, 1))

    def cycles(self) -> list:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            p = self(start)
            while p != start:
                cycle.append(p)
                seen.add(p)
                p = self(p)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        sep = "" if self.degree < 10 else " "
        return "".join("(" + sep.join(map(str, c)) + ")" for c in cycles)


@lru_cache(maxsize=None)
def symmetric_group(n: int = 5) -> tuple:
    """All n! permutations, sorted by image tuple."""
    return tuple(Permutation(p) for p in _permutations(range(1, n + 1)))
