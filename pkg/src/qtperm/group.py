"""Permutation groups backed by deterministic Schreier-Sims stabilizer chains."""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

from .perm import Permutation


class StabilizerChain:
    """A base, per-level transversals and strong generators.

    Level ``i`` stabilizes ``base[:i]``; ``transversals[i]`` maps each point
    ``gamma`` in the basic orbit of ``base[i]`` to a representative ``u`` with
    ``u(base[i]) == gamma``.  ``strong_gens[i]`` generates the pointwise
    stabilizer of ``base[:i]``; ``strong_gens[len(base)]`` is always empty.
    """

    __slots__ = ("degree", "base", "transversals", "strong_gens")

    def __init__(self, degree, base, transversals, strong_gens):
        self.degree = degree
        self.base = tuple(base)
        self.transversals = transversals
        self.strong_gens = strong_gens

    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    def transversal_sizes(self) -> tuple[int, ...]:
        return tuple(len(t) for t in self.transversals)

    def sift(self, p: Permutation) -> Permutation:
        """Strip p through the chain; identity residue means membership."""
        residue, _ = self.sift_from(p, 0)
        return residue

    def sift_from(self, p: Permutation, start: int) -> tuple[Permutation, int]:
        for i in range(start, len(self.base)):
            gamma = p(self.base[i])
            trans = self.transversals[i]
            if gamma not in trans:
                return p, i
            p = p * trans[gamma].inverse()
        return p, len(self.base)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError("degree mismatch")
        return self.sift(p).is_identity()

    def stabilizer_order_from(self, level: int) -> int:
        """Order of the pointwise stabilizer of ``base[:level]``."""
        return math.prod(len(t) for t in self.transversals[level:])

    def generators_fixing(self, level: int) -> list[Permutation]:
        if level >= len(self.strong_gens):
            return []
        return list(self.strong_gens[level])

    def elements(self) -> Iterator[Permutation]:
        """All group elements in a deterministic chain-enumeration order."""

        def rec(i):
            if i == len(self.base):
                yield Permutation.identity(self.degree)
                return
            for gamma in sorted(self.transversals[i]):
                u = self.transversals[i][gamma]
                for s in rec(i + 1):
                    yield s * u

        return rec(0)


def build_chain(
    generators: Sequence[Permutation],
    degree: int,
    base_prefix: Sequence[int] = (),
) -> StabilizerChain:
    """Deterministic Schreier-Sims.  The base starts with ``base_prefix``."""
    for b in base_prefix:
        if not 0 <= b < degree:
            raise ValueError(f"base point {b} out of range")
    if len(set(base_prefix)) != len(base_prefix):
        raise ValueError("base prefix points must be distinct")

    gens: list[Permutation] = []
    for g in generators:
        if g.degree != degree:
            raise ValueError("degree mismatch among generators")
        if not g.is_identity() and g not in gens:
            gens.append(g)

    base: list[int] = list(base_prefix)
    for g in gens:
        if all(g(b) == b for b in base):
            base.append(g.first_moved_point())

    identity = Permutation.identity(degree)
    if not base:
        return StabilizerChain(degree, (), [], [[]])

    def first_moved_base(g: Permutation) -> int:
        for i, b in enumerate(base):
            if g(b) != b:
                return i
        return len(base)

    strong: list[list[Permutation]] = [[] for _ in range(len(base) + 1)]
    for g in gens:
        k = first_moved_base(g)
        for i in range(k + 1):
            strong[i].append(g)

    transversals: list[dict[int, Permutation]] = [dict() for _ in base]

    def compute_transversal(i: int) -> None:
        beta = base[i]
        trans = {beta: identity}
        queue = [beta]
        for a in queue:
            ua = trans[a]
            for g in strong[i]:
                b = g(a)
                if b not in trans:
                    trans[b] = ua * g
                    queue.append(b)
        transversals[i] = trans

    def sift_from(p: Permutation, start: int) -> tuple[Permutation, int]:
        for i in range(start, len(base)):
            gamma = p(base[i])
            trans = transversals[i]
            if gamma not in trans:
                return p, i
            p = p * trans[gamma].inverse()
        return p, len(base)

    for i in range(len(base)):
        compute_transversal(i)

    # Work from the deepest level up; the invariant is that all strictly
    # deeper levels are complete whenever level i is processed.
    i = len(base) - 1
    while i >= 0:
        compute_transversal(i)
        trans = transversals[i]
        complete = True
        for gamma in sorted(trans):
            u = trans[gamma]
            for g in strong[i]:
                delta = g(gamma)
                schreier = u * g * trans[delta].inverse()
                if schreier.is_identity():
                    continue
                residue, j = sift_from(schreier, i + 1)
                if residue.is_identity():
                    continue
                complete = False
                if j == len(base):
                    base.append(residue.first_moved_point())
                    strong.append([])
                    transversals.append(dict())
                for level in range(i + 1, j + 1):
                    strong[level].append(residue)
                for level in range(i + 1, j + 1):
                    compute_transversal(level)
                i = j
                break
            if not complete:
                break
        if complete:
            i -= 1

    return StabilizerChain(degree, base, transversals, strong)


class PermGroup:
    """Group generated by permutations of one degree.

    Immutable after construction; stabilizer chains are built lazily and
    cached per base prefix.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None):
        gens = tuple(generators)
        if not gens:
            raise ValueError("generator list must be nonempty")
        if degree is None:
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError("all generators must share the group's degree")
        self.degree = degree
        self.generators = gens
        self._chains: dict[tuple[int, ...], StabilizerChain] = {}

    def chain(self, base_prefix: Sequence[int] = ()) -> StabilizerChain:
        key = tuple(base_prefix)
        chain = self._chains.get(key)
        if chain is None:
            chain = build_chain(self.generators, self.degree, key)
            self._chains[key] = chain
        return chain

    def order(self) -> int:
        return self.chain().order()

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError("degree mismatch")
        return self.chain().contains(p)

    def is_trivial(self) -> bool:
        return self.order() == 1

    def orbit(self, alpha: int) -> list[int]:
        """Orbit of a point, ascending."""
        seen = {alpha}
        queue = [alpha]
        for a in queue:
            for g in self.generators:
                b = g(a)
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return sorted(seen)

    def point_stabilizer(self, alpha: int) -> "PermGroup":
        if not 0 <= alpha < self.degree:
            raise ValueError(f"point {alpha} out of range")
        return self.pointwise_stabilizer((alpha,))

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        chain = self.chain(tuple(points))
        gens = chain.generators_fixing(len(points))
        if not gens:
            gens = [Permutation.identity(self.degree)]
        return PermGroup(gens, self.degree)

    def two_point_stabilizer_order(self, alpha: int, beta: int) -> int:
        if alpha == beta:
            raise ValueError("the two points must be distinct")
        return self.chain((alpha, beta)).stabilizer_order_from(2)

    def elements(self) -> Iterator[Permutation]:
        return self.chain().elements()

    def __repr__(self) -> str:
        return f"<PermGroup deg={self.degree} ngens={len(self.generators)}>"
