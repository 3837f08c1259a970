"""Orbit decomposition, subdegrees, pair-class profile and quasi-transitivity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .group import PermGroup
from .perm import Permutation

QUASI_TRANSITIVE = "quasi_transitive"
CONSTANT_ONE = "constant_one"
NON_CONSTANT = "non_constant"


@dataclass(frozen=True)
class OrbitDecomposition:
    """Orbits sorted by (size, least point); one representative per orbit."""

    orbits: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]

    def orbit_index_map(self) -> dict[int, int]:
        idx = {}
        for i, orbit in enumerate(self.orbits):
            for p in orbit:
                idx[p] = i
        return idx


@dataclass(frozen=True)
class PairClass:
    """One group orbit on unordered point pairs."""

    representative: tuple[int, int]
    size: int
    stabilizer_order: int
    abelian: bool


@dataclass(frozen=True)
class QuasiVerdict:
    status: str
    t: int | None = None
    witnesses: tuple[PairClass, PairClass] | None = None


@dataclass(frozen=True)
class OrbitReport:
    points: tuple[int, ...]
    representative: int
    size: int
    subdegrees: tuple[int, ...]
    faithful: bool
    transitive: bool
    two_transitive: bool
    three_halves: bool
    frobenius: bool
    primitive: bool


@dataclass(frozen=True)
class ActionReport:
    degree: int
    order: int
    orbit_reports: tuple[OrbitReport, ...]
    pair_classes: tuple[PairClass, ...]
    verdict: QuasiVerdict


def orbits(G: PermGroup) -> OrbitDecomposition:
    remaining = set(range(G.degree))
    found = []
    while remaining:
        start = min(remaining)
        orb = G.orbit(start)
        remaining.difference_update(orb)
        found.append(tuple(orb))
    found.sort(key=lambda o: (len(o), o[0]))
    return OrbitDecomposition(tuple(found), tuple(o[0] for o in found))


def _partition(gens: Sequence[Permutation], degree: int) -> list[list[int]]:
    """Orbit partition of 0..degree-1 under the given permutations."""
    seen = [False] * degree
    parts = []
    for start in range(degree):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = True
        for a in orb:
            for g in gens:
                b = g(a)
                if not seen[b]:
                    seen[b] = True
                    orb.append(b)
        parts.append(sorted(orb))
    return parts


def _suborbit_sizes(stab: PermGroup) -> list[int]:
    """Map point -> size of its orbit under the subgroup."""
    sizes = [0] * stab.degree
    for part in _partition(stab.generators, stab.degree):
        for p in part:
            sizes[p] = len(part)
    return sizes


def subdegrees(G: PermGroup, alpha: int) -> tuple[int, ...]:
    """Orbit lengths of the point stabilizer on the orbit of alpha.

    Includes the fixed point's 1; sorted ascending.
    """
    orbit = set(G.orbit(alpha))
    stab = G.point_stabilizer(alpha)
    lengths = [len(part) for part in _partition(stab.generators, G.degree)
               if part[0] in orbit]
    return tuple(sorted(lengths))


def _check_invariant(G: PermGroup, orbit: Iterable[int]) -> list[int]:
    pts = sorted(set(orbit))
    pset = set(pts)
    for g in G.generators:
        if any(g(p) not in pset for p in pts):
            raise ValueError("set is not invariant under the group")
    return pts


def _restricted_group(G: PermGroup, orbit: Sequence[int]) -> PermGroup:
    index = {p: i for i, p in enumerate(orbit)}
    gens = [
        Permutation(tuple(index[g(p)] for p in orbit))
        for g in G.generators
    ]
    return PermGroup(gens, len(orbit))


def action_kernel(G: PermGroup, orbit: Iterable[int]) -> PermGroup:
    """Subgroup acting trivially on an invariant set."""
    pts = _check_invariant(G, orbit)
    return G.pointwise_stabilizer(pts)


def is_faithful_on(G: PermGroup, orbit: Iterable[int]) -> bool:
    pts = _check_invariant(G, orbit)
    return _restricted_group(G, pts).order() == G.order()


def _orbit_stats(G: PermGroup, orbit: Sequence[int]) -> tuple[int, int, list[int]]:
    """(alpha, |G_alpha|, suborbit lengths on orbit minus alpha)."""
    alpha = min(orbit)
    stab = G.point_stabilizer(alpha)
    oset = set(orbit)
    rest = [len(part) for part in _partition(stab.generators, G.degree)
            if part[0] in oset and part != [alpha]]
    return alpha, stab.order(), sorted(rest)


def is_two_transitive(G: PermGroup, orbit: Iterable[int]) -> bool:
    pts = _check_invariant(G, orbit)
    if len(pts) < 2:
        raise ValueError("orbit must have at least 2 points")
    _, _, rest = _orbit_stats(G, pts)
    return rest == [len(pts) - 1]


def is_three_halves(G: PermGroup, orbit: Iterable[int]) -> bool:
    """Transitive with all suborbits on the rest of one common length d > 1.

    Two-transitive actions count; regular ones (d = 1) do not, matching the
    hypotheses of the classical primitive-or-Frobenius dichotomy.
    """
    pts = _check_invariant(G, orbit)
    if len(pts) < 2:
        raise ValueError("orbit must have at least 2 points")
    _, _, rest = _orbit_stats(G, pts)
    if rest == [len(pts) - 1]:
        return True
    return len(set(rest)) == 1 and rest[0] > 1


def is_frobenius(G: PermGroup, orbit: Iterable[int]) -> bool:
    """Transitive, nonregular, with trivial two-point stabilizers on the orbit."""
    pts = _check_invariant(G, orbit)
    if len(pts) < 2:
        raise ValueError("orbit must have at least 2 points")
    _, stab_order, rest = _orbit_stats(G, pts)
    return stab_order > 1 and all(size == stab_order for size in rest)


def _minimal_block_size(gens, points, alpha, beta):
    parent = {p: p for p in points}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        parent[rb] = ra
        return True

    stack = [(alpha, beta)]
    union(alpha, beta)
    while stack:
        u, v = stack.pop()
        for g in gens:
            a, b = g(u), g(v)
            if union(a, b):
                stack.append((a, b))
    root = find(alpha)
    return sum(1 for p in points if find(p) == root)


def is_primitive(G: PermGroup, orbit: Iterable[int]) -> bool:
    """No nontrivial proper block system, by the minimal-block algorithm."""
    pts = _check_invariant(G, orbit)
    m = len(pts)
    if m < 2:
        raise ValueError("orbit must have at least 2 points")
    if set(G.orbit(pts[0])) != set(pts):
        raise ValueError("group is not transitive on the given set")
    alpha = pts[0]
    for beta in pts[1:]:
        if _minimal_block_size(G.generators, pts, alpha, beta) < m:
            return False
    return True


def _is_abelian(gens: Sequence[Permutation]) -> bool:
    for i, p in enumerate(gens):
        for q in gens[i + 1:]:
            if p * q != q * p:
                return False
    return True


def pair_class_profile(G: PermGroup) -> tuple[PairClass, ...]:
    """One entry per group orbit on unordered pairs of the whole domain.

    Classes are found by expanding pair orbits from each orbit
    representative; stabilizer orders come from orbit-stabilizer applied to
    the representative's point stabilizer, so no chain is rebuilt per pair.
    """
    n = G.degree
    if n < 2:
        raise ValueError("degree must be at least 2")
    decomp = orbits(G)
    orbit_of = decomp.orbit_index_map()
    gens = G.generators
    seen: set[tuple[int, int]] = set()
    classes: list[PairClass] = []
    for i, rep in enumerate(decomp.representatives):
        stab = G.point_stabilizer(rep)
        stab_order = stab.order()
        sub_sizes = _suborbit_sizes(stab)
        for beta in range(n):
            if beta == rep or orbit_of[beta] < i:
                continue
            start = (rep, beta) if rep < beta else (beta, rep)
            if start in seen:
                continue
            members = {start}
            queue = [start]
            best = start
            for (u, v) in queue:
                for g in gens:
                    a, b = g(u), g(v)
                    pair = (a, b) if a < b else (b, a)
                    if pair not in members:
                        members.add(pair)
                        queue.append(pair)
                        if pair < best:
                            best = pair
            seen |= members
            order_ab = stab_order // sub_sizes[beta]
            if order_ab == 1:
                abelian = True
            else:
                two_point = stab.point_stabilizer(beta)
                abelian = _is_abelian(two_point.generators)
            classes.append(PairClass(best, len(members), order_ab, abelian))
    classes.sort(key=lambda c: c.representative)
    return tuple(classes)


def quasi_verdict(G: PermGroup) -> QuasiVerdict:
    """Constant two-point stabilizer order t > 1, t = 1, or witnesses."""
    classes = pair_class_profile(G)
    orders = sorted({c.stabilizer_order for c in classes})
    if len(orders) == 1:
        t = orders[0]
        if t > 1:
            return QuasiVerdict(QUASI_TRANSITIVE, t=t)
        return QuasiVerdict(CONSTANT_ONE, t=1)
    first = classes[0]
    other = next(c for c in classes if c.stabilizer_order != first.stabilizer_order)
    return QuasiVerdict(NON_CONSTANT, witnesses=(first, other))


def analyze(G: PermGroup) -> ActionReport:
    """Everything measured about an action, in one deterministic report."""
    if G.degree < 2:
        raise ValueError("degree must be at least 2")
    decomp = orbits(G)
    order = G.order()
    reports = []
    for orbit, rep in zip(decomp.orbits, decomp.representatives):
        m = len(orbit)
        faithful = is_faithful_on(G, orbit)
        if m == 1:
            reports.append(OrbitReport(
                points=orbit, representative=rep, size=1, subdegrees=(1,),
                faithful=faithful, transitive=True, two_transitive=False,
                three_halves=False, frobenius=False, primitive=False))
            continue
        _, stab_order, rest = _orbit_stats(G, orbit)
        two_t = rest == [m - 1]
        three_halves = two_t or (len(set(rest)) == 1 and rest[0] > 1)
        frob = stab_order > 1 and all(size == stab_order for size in rest)
        prim = is_primitive(G, orbit)
        reports.append(OrbitReport(
            points=orbit, representative=rep, size=m,
            subdegrees=tuple(sorted([1] + rest)), faithful=faithful,
            transitive=True, two_transitive=two_t, three_halves=three_halves,
            frobenius=frob, primitive=prim))
    classes = pair_class_profile(G)
    return ActionReport(
        degree=G.degree, order=order, orbit_reports=tuple(reports),
        pair_classes=classes, verdict=quasi_verdict(G))
