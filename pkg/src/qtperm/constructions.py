"""Concrete group actions: S_n/A_n, k-subsets, regular, affine, PSL2/PGammaL2."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .gf2 import GF2Field
from .group import PermGroup, build_chain
from .perm import Permutation

INFINITY = "inf"


class LabeledAction:
    """A permutation group together with a bijective point labeling."""

    def __init__(self, group: PermGroup, label: str, points: Sequence[object]):
        points = tuple(points)
        if len(points) != group.degree:
            raise ValueError("one domain object per point required")
        index = {obj: i for i, obj in enumerate(points)}
        if len(index) != len(points):
            raise ValueError("labeling must be a bijection")
        self.group = group
        self.label = label
        self.points = points
        self._index = index

    @property
    def degree(self) -> int:
        return self.group.degree

    def index_of(self, obj: object) -> int:
        return self._index[obj]

    def object_at(self, i: int) -> object:
        return self.points[i]

    def __repr__(self) -> str:
        return f"<LabeledAction {self.label!r} deg={self.degree}>"


def symmetric_group(n: int) -> LabeledAction:
    """Natural action of S_n on 0..n-1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        gens = [Permutation.identity(1)]
    elif n == 2:
        gens = [Permutation.from_cycles(2, [(0, 1)])]
    else:
        gens = [Permutation.from_cycles(n, [(0, 1)]),
                Permutation.from_cycles(n, [tuple(range(n))])]
    return LabeledAction(PermGroup(gens, n), f"S{n}-natural", range(n))


def alternating_group(n: int) -> LabeledAction:
    """Natural action of A_n on 0..n-1 (n >= 3)."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if n == 3:
        gens = [Permutation.from_cycles(3, [(0, 1, 2)])]
    elif n % 2 == 1:
        gens = [Permutation.from_cycles(n, [(0, 1, 2)]),
                Permutation.from_cycles(n, [tuple(range(n))])]
    else:
        # an (n-1)-cycle on 1..n-1 is even when n is even
        gens = [Permutation.from_cycles(n, [(0, 1, 2)]),
                Permutation.from_cycles(n, [tuple(range(1, n))])]
    return LabeledAction(PermGroup(gens, n), f"A{n}-natural", range(n))


def cyclic_group(n: int) -> LabeledAction:
    """C_n rotating 0..n-1; this is also its regular action."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        gens = [Permutation.identity(1)]
    else:
        gens = [Permutation.from_cycles(n, [tuple(range(n))])]
    return LabeledAction(PermGroup(gens, n), f"C{n}-regular", range(n))


def dihedral_group(n: int) -> LabeledAction:
    """D_n (order 2n) on the vertices of a regular n-gon."""
    if n < 3:
        raise ValueError("n must be at least 3")
    rot = Permutation.from_cycles(n, [tuple(range(n))])
    refl = Permutation(tuple((n - i) % n for i in range(n)))
    return LabeledAction(PermGroup([rot, refl], n), f"D{n}-gon", range(n))


def action_on_k_subsets(action: LabeledAction, k: int) -> LabeledAction:
    """Induced action on k-element subsets, labeled lexicographically."""
    n = action.degree
    if not 0 < k <= n:
        raise ValueError("k must be between 1 and the degree")
    subsets = list(combinations(range(n), k))
    index = {s: i for i, s in enumerate(subsets)}
    gens = []
    for g in action.group.generators:
        images = [index[tuple(sorted(g(x) for x in s))] for s in subsets]
        gens.append(Permutation(tuple(images)))
    group = PermGroup(gens, len(subsets))
    return LabeledAction(group, f"{action.label}-on-{k}-subsets", subsets)


def regular_action(action: LabeledAction, max_order: int = 10_000) -> LabeledAction:
    """Right-regular action of the group on its own elements."""
    order = action.group.order()
    if order > max_order:
        raise ValueError(f"group too large for regular action: {order} > {max_order}")
    elements = sorted(p.images for p in action.group.elements())
    index = {e: i for i, e in enumerate(elements)}
    perms = [Permutation._unchecked(e) for e in elements]
    gens = []
    for s in action.group.generators:
        images = [index[(p * s).images] for p in perms]
        gens.append(Permutation(tuple(images)))
    group = PermGroup(gens, order)
    return LabeledAction(group, f"{action.label}-regular", elements)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def affine_frobenius(p: int) -> LabeledAction:
    """AGL(1,p) acting on GF(p): all maps x -> ax + b with a != 0."""
    if not _is_prime(p) or p > 100:
        raise ValueError("p must be a prime <= 100")
    if p == 2:
        return LabeledAction(PermGroup([Permutation.from_cycles(2, [(0, 1)])], 2),
                             "AGL(1,2)-natural", range(2))
    shift = Permutation(tuple((x + 1) % p for x in range(p)))
    g = next(a for a in range(2, p)
             if all(pow(a, (p - 1) // q, p) != 1
                    for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)))
    scale = Permutation(tuple((g * x) % p for x in range(p)))
    return LabeledAction(PermGroup([shift, scale], p), f"AGL(1,{p})-natural", range(p))


def disjoint_sum(actions: Sequence[LabeledAction]) -> LabeledAction:
    """Action on the disjoint union; relies on positional generator matching."""
    if not actions:
        raise ValueError("need at least one action")
    ngens = len(actions[0].group.generators)
    if any(len(a.group.generators) != ngens for a in actions):
        raise ValueError("all summands must carry the same number of generators")
    degree = sum(a.degree for a in actions)
    gens = []
    for i in range(ngens):
        images: list[int] = []
        offset = 0
        for a in actions:
            images.extend(offset + x for x in a.group.generators[i].images)
            offset += a.degree
        gens.append(Permutation(tuple(images)))
    points = []
    for block, a in enumerate(actions):
        points.extend((block, obj) for obj in a.points)
    label = "sum(" + ", ".join(a.label for a in actions) + ")"
    return LabeledAction(PermGroup(gens, degree), label, points)


def gf2f(f: int) -> GF2Field:
    """The shipped GF(2^f) field structure (f in {3, 5})."""
    return GF2Field(f)


def _projective_points(field: GF2Field) -> list[object]:
    return list(field.elements()) + [INFINITY]


def _moebius_perm(field: GF2Field, fn) -> Permutation:
    """Permutation of PG(1,q) with finite points 0..q-1 and infinity last."""
    q = field.q
    images = []
    for x in list(range(q)) + [INFINITY]:
        y = fn(x)
        images.append(q if y == INFINITY else y)
    return Permutation(tuple(images))


def psl2(f: int) -> LabeledAction:
    """PSL2(q), q = 2^f, on the projective line (q+1 points)."""
    field = gf2f(f)
    q = field.q
    lam = field.primitive_element()

    def translate(x):
        return INFINITY if x == INFINITY else field.add(x, 1)

    def scale(x):
        return INFINITY if x == INFINITY else field.mul(lam, x)

    def invert(x):
        if x == INFINITY:
            return 0
        if x == 0:
            return INFINITY
        return field.inv(x)

    gens = [_moebius_perm(field, fn) for fn in (translate, scale, invert)]
    return LabeledAction(PermGroup(gens, q + 1), f"PSL2({q})-projective",
                         _projective_points(field))


def pgammal2(f: int) -> LabeledAction:
    """PGammaL2(q) = PSL2(q) extended by the Frobenius map x -> x^2."""
    base = psl2(f)
    field = gf2f(f)

    def frob(x):
        return INFINITY if x == INFINITY else field.mul(x, x)

    gens = list(base.group.generators) + [_moebius_perm(field, frob)]
    q = field.q
    return LabeledAction(PermGroup(gens, q + 1), f"PGammaL2({q})-projective",
                         _projective_points(field))


def _min_coset_rep(chain, g: Permutation) -> Permutation:
    """Lexicographically least element of H*g, for a chain with base 0..n-1."""
    cur = g
    for i, b in enumerate(chain.base):
        trans = chain.transversals[i]
        if len(trans) == 1:
            continue
        best = min(trans, key=lambda gamma: cur(gamma))
        cur = trans[best] * cur
    return cur


def coset_action(action: LabeledAction, H: PermGroup,
                 max_index: int = 10_000) -> LabeledAction:
    """Transitive action on right cosets of a subgroup H."""
    G = action.group
    if H.degree != G.degree:
        raise ValueError("subgroup degree mismatch")
    for h in H.generators:
        if not G.contains(h):
            raise ValueError("H is not a subgroup: generator outside the group")
    h_order = H.order()
    g_order = G.order()
    index, remainder = divmod(g_order, h_order)
    if remainder:
        raise AssertionError("subgroup order does not divide the group order")
    if index > max_index:
        raise ValueError(f"coset index too large: {index} > {max_index}")

    # A chain over the full point sequence makes the lex-least coset
    # representative computable greedily, one base point at a time.
    h_chain = build_chain(H.generators, H.degree, tuple(range(H.degree)))
    start = _min_coset_rep(h_chain, Permutation.identity(G.degree))
    reps = {start.images: start}
    queue = [start]
    for r in queue:
        for s in G.generators:
            img = _min_coset_rep(h_chain, r * s)
            if img.images not in reps:
                reps[img.images] = img
                queue.append(img)
    if len(reps) != index:
        raise AssertionError("coset enumeration does not match the index")
    ordered = sorted(reps)
    pos = {images: i for i, images in enumerate(ordered)}
    gens = []
    for s in G.generators:
        images = [pos[_min_coset_rep(h_chain, reps[r] * s).images]
                  for r in ordered]
        gens.append(Permutation(tuple(images)))
    points = [Permutation._unchecked(r) for r in ordered]
    return LabeledAction(PermGroup(gens, index),
                         f"{action.label}-cosets-index-{index}", points)


def dihedral_2q_plus_2_subgroup(action: LabeledAction) -> PermGroup:
    """Dihedral subgroup of order 2(q+1) inside PSL2(q) on the projective line.

    Finds an element of order q+1 (a non-split torus generator) and an
    involution inverting it, in deterministic chain-enumeration order.
    """
    q = action.degree - 1
    cyc = None
    for g in action.group.elements():
        if g.order() == q + 1:
            cyc = g
            break
    if cyc is None:
        raise AssertionError("no element of order q+1 found")
    cyc_inv = cyc.inverse()
    for j in action.group.elements():
        if j.order() == 2 and j * cyc * j == cyc_inv:
            D = PermGroup([cyc, j], action.degree)
            if D.order() != 2 * (q + 1):
                raise AssertionError("dihedral subgroup has unexpected order")
            return D
    raise AssertionError("no inverting involution found")


def subgroup_normalizer(action: LabeledAction, H: PermGroup) -> PermGroup:
    """Normalizer of H in the action's group, by full element enumeration."""
    h_elems = {p.images for p in H.elements()}
    gens = []
    for g in action.group.elements():
        g_inv = g.inverse()
        if all((g_inv * h * g).images in h_elems for h in H.generators):
            gens.append(g)
    return PermGroup(gens, action.degree)


def psl2_cosets(f: int) -> LabeledAction:
    """PSL2(q) on the q(q-1)/2 cosets of a dihedral subgroup of order 2(q+1)."""
    proj = psl2(f)
    D = dihedral_2q_plus_2_subgroup(proj)
    act = coset_action(proj, D)
    q = (1 << f)
    if act.degree != q * (q - 1) // 2:
        raise AssertionError("coset action has unexpected degree")
    return act


def pgammal2_cosets(f: int) -> LabeledAction:
    """PGammaL2(q) on the cosets of the normalizer of the dihedral subgroup."""
    proj = pgammal2(f)
    D = dihedral_2q_plus_2_subgroup(psl2(f))
    N = subgroup_normalizer(proj, D)
    q = 1 << f
    if N.order() != 2 * (q + 1) * f:
        raise AssertionError("normalizer has unexpected order")
    act = coset_action(proj, N)
    if act.degree != q * (q - 1) // 2:
        raise AssertionError("coset action has unexpected degree")
    return act


def gl32_subgroup() -> PermGroup:
    """GL(3,2) of order 168 acting on the 7 nonzero vectors of GF(2)^3.

    Point i corresponds to the vector with bits of i+1; the result is an
    index-15 subgroup of A_7 in its natural labeling.
    """
    mats = [
        ((1, 1, 0), (0, 1, 0), (0, 0, 1)),  # transvection
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),  # coordinate 3-cycle
    ]
    gens = []
    for m in mats:
        images = []
        for i in range(7):
            v = i + 1
            bits = [(v >> r) & 1 for r in range(3)]
            w = 0
            for r in range(3):
                val = sum(m[r][c] * bits[c] for c in range(3)) % 2
                w |= val << r
            images.append(w - 1)
        gens.append(Permutation(tuple(images)))
    G = PermGroup(gens, 7)
    if G.order() != 168:
        raise AssertionError("GL(3,2) construction has wrong order")
    return G


def a7_on_15(a7: LabeledAction | None = None) -> LabeledAction:
    """A_7 acting 2-transitively on the 15 cosets of a GL(3,2) subgroup."""
    if a7 is None:
        a7 = alternating_group(7)
    act = coset_action(a7, gl32_subgroup())
    if act.degree != 15:
        raise AssertionError("expected index 15")
    return act
