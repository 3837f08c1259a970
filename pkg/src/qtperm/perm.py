"""Permutations of {0, ..., n-1} stored as immutable image tuples."""

from __future__ import annotations

import math
from typing import Iterable, Sequence


class Permutation:
    """An invertible self-map of {0, ..., n-1}.

    ``images[x]`` is the point ``x`` maps to.  Products are read left to
    right: ``(p * q)(x) == q(p(x))``.  This convention is fixed project-wide
    and pinned by a golden test.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for x in images:
            if not isinstance(x, int) or not 0 <= x < n or seen[x]:
                raise ValueError(f"not a bijection of 0..{n - 1}: {images!r}")
            seen[x] = True
        self.images = images

    @staticmethod
    def _unchecked(images: tuple) -> "Permutation":
        # fast path for internal code that already holds a valid image tuple
        p = object.__new__(Permutation)
        p.images = images
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._unchecked(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles; repeated or out-of-range points raise."""
        images = list(range(n))
        used = set()
        for cycle in cycles:
            for x in cycle:
                if not 0 <= x < n:
                    raise ValueError(f"point {x} out of range 0..{n - 1}")
                if x in used:
                    raise ValueError(f"point {x} repeated across cycles")
                used.add(x)
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls._unchecked(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch")
        q = other.images
        return Permutation._unchecked(tuple(q[x] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._unchecked(tuple(inv))

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(len(self.images))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            j = self.images[i]
            while j != i:
                seen.add(j)
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def first_moved_point(self) -> int | None:
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Permutation.identity({len(self.images)})"
        text = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"<Permutation deg={len(self.images)} {text}>"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: ``compose(p, q)(x) == q(p(x))``."""
    return p * q
