"""Arithmetic case analysis and the desk-scale sweep over intransitive sums."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from . import constructions as cons
from .analysis import (QUASI_TRANSITIVE, ActionReport, analyze, quasi_verdict)
from .constructions import LabeledAction
from .group import PermGroup
from .perm import Permutation


def step1_quadratic(t: int, group_order: int) -> set[int]:
    """Positive integer roots of t*x^2 - t*x - group_order = 0.

    The discriminant argument gives at most one such root; asserted.
    """
    if t < 1 or group_order < 1:
        raise ValueError("t and group order must be positive")
    disc = t * t + 4 * t * group_order
    s = math.isqrt(disc)
    roots = set()
    if s * s == disc and (t + s) % (2 * t) == 0:
        x = (t + s) // (2 * t)
        if x > 0:
            roots.add(x)
    assert len(roots) <= 1
    return roots


@dataclass(frozen=True)
class Step4Record:
    """The final contradiction, every number recomputed rather than quoted."""

    d1: int
    orbit1_size: int
    product: int
    quadratic_roots: frozenset[int]
    orbit2_size: int
    d2: int
    gcd: int
    contradiction: bool


def step4_check() -> Step4Record:
    """A_7/S_7-on-pairs vs a 2-transitive second orbit cannot coexist."""
    d1, orbit1 = 10, 21
    product = d1 * orbit1
    roots = step1_quadratic(1, product)
    (orbit2,) = roots
    d2 = product // orbit2
    g = math.gcd(d1, d2)
    return Step4Record(
        d1=d1, orbit1_size=orbit1, product=product,
        quadratic_roots=frozenset(roots), orbit2_size=orbit2, d2=d2,
        gcd=g, contradiction=(g != 1))


@dataclass(frozen=True)
class LemmaViolation:
    rule: str
    detail: str


def lemma_monitor(report: ActionReport) -> list[LemmaViolation]:
    """Consequences every quasi-transitive action must satisfy.

    Checks pairwise-coprime nontrivial subdegrees, pairwise-distinct orbit
    sizes, per-orbit faithfulness, and the order identity tying t, the
    subdegrees and the orbit sizes together.
    """
    if report.verdict.status != QUASI_TRANSITIVE:
        return []
    t = report.verdict.t
    violations = []
    ds = []
    for rep in report.orbit_reports:
        nontrivial = sorted(set(d for d in rep.subdegrees if d > 1))
        if len(nontrivial) > 1:
            violations.append(LemmaViolation(
                "constant-subdegree",
                f"orbit at {rep.representative} has subdegrees {rep.subdegrees}"))
        ds.append((rep, nontrivial[0] if nontrivial else 1))
        if not rep.faithful:
            violations.append(LemmaViolation(
                "faithful-orbits",
                f"kernel is nontrivial on the orbit at {rep.representative}"))
    for (ra, da), (rb, db) in combinations_with_replacement(ds, 2):
        if ra is rb:
            continue
        if math.gcd(da, db) != 1:
            violations.append(LemmaViolation(
                "coprime-subdegrees",
                f"gcd({da}, {db}) = {math.gcd(da, db)} for orbits at "
                f"{ra.representative} and {rb.representative}"))
        if ra.size == rb.size:
            violations.append(LemmaViolation(
                "distinct-orbit-sizes",
                f"orbits at {ra.representative} and {rb.representative} "
                f"both have size {ra.size}"))
    products = {rep.size * d for rep, d in ds}
    if len(products) > 1:
        violations.append(LemmaViolation(
            "orbit-size-product",
            f"d_i * orbit size is not constant: {sorted(products)}"))
    for rep, d in ds:
        if rep.size * d * t != report.order:
            violations.append(LemmaViolation(
                "order-identity",
                f"|G| != size * d * t at orbit {rep.representative}: "
                f"{rep.size} * {d} * {t} != {report.order}"))
    return violations


@dataclass(frozen=True)
class SweepConfig:
    max_total_degree: int = 600
    max_group_order: int = 200_000
    include_q32: bool = False
    include_triples: bool = False
    families: tuple[str, ...] | None = None  # None = all


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    actions: tuple[LabeledAction, ...]


@dataclass(frozen=True)
class SweepItem:
    label: str
    status: str
    t: int | None


@dataclass
class SweepResult:
    tested: int = 0
    skipped: int = 0
    items: list[SweepItem] = field(default_factory=list)
    findings: list[SweepItem] = field(default_factory=list)
    lemma_violations: list[LemmaViolation] = field(default_factory=list)


def _subgroup_closure(degree: int, gens: list[Permutation],
                      cap: int = 10_000) -> frozenset[tuple[int, ...]]:
    elems = {Permutation.identity(degree).images}
    queue = [Permutation.identity(degree)]
    for p in queue:
        for g in gens:
            npm = p * g
            if npm.images not in elems:
                if len(elems) >= cap:
                    raise ValueError("closure cap exceeded")
                elems.add(npm.images)
                queue.append(npm)
    return frozenset(elems)


def _faithful_coset_actions(action: LabeledAction) -> list[LabeledAction]:
    """All faithful transitive coset actions, one per conjugacy class.

    Enumerates subgroups generated by one or two elements, which covers
    every subgroup of the cyclic and dihedral groups this is used for.
    """
    G = action.group
    order = G.order()
    elements = sorted(G.elements(), key=lambda p: p.images)
    subgroups: set[frozenset[tuple[int, ...]]] = set()
    for i, a in enumerate(elements):
        subgroups.add(_subgroup_closure(G.degree, [a]))
        for b in elements[i + 1:]:
            subgroups.add(_subgroup_closure(G.degree, [a, b]))
    # one representative per conjugacy class of subgroups
    chosen: set[frozenset[tuple[int, ...]]] = set()
    for sub in subgroups:
        conjugates = []
        for g in elements:
            ginv = g.inverse()
            conj = frozenset(
                (ginv * Permutation._unchecked(h) * g).images for h in sub)
            conjugates.append(conj)
        chosen.add(min(conjugates, key=sorted))
    actions = []
    for sub in sorted(chosen, key=sorted):
        if len(sub) == order:
            continue  # whole group: degree-1 action, never faithful here
        gens = [Permutation._unchecked(h) for h in sorted(sub)]
        H = PermGroup(gens, G.degree)
        act = cons.coset_action(action, H)
        if act.group.order() == order:
            actions.append(act)
    return actions


def _symmetric_family() -> list[CatalogEntry]:
    entries = []
    for n in range(3, 8):
        for natural in (cons.symmetric_group(n), cons.alternating_group(n)):
            acts = [natural]
            for k in range(2, n // 2 + 1):
                sub = cons.action_on_k_subsets(natural, k)
                if sub.degree <= 120:
                    acts.append(sub)
            if natural.group.order() <= 120:
                acts.append(cons.regular_action(natural))
            if natural.label == "A7-natural":
                acts.append(cons.a7_on_15(natural))
            entries.append(CatalogEntry(natural.label.replace("-natural", ""),
                                        tuple(acts)))
    return entries


def _cyclic_family() -> list[CatalogEntry]:
    # proper subgroups of a cyclic group are normal, so the regular action
    # is the only faithful transitive one
    return [CatalogEntry(f"C{n}", (cons.cyclic_group(n),))
            for n in range(2, 21)]


def _dihedral_family() -> list[CatalogEntry]:
    entries = []
    for n in range(3, 21):
        gon = cons.dihedral_group(n)
        entries.append(CatalogEntry(f"D{n}",
                                    tuple(_faithful_coset_actions(gon))))
    return entries


def _affine_family() -> list[CatalogEntry]:
    entries = []
    for p in (3, 5, 7):
        natural = cons.affine_frobenius(p)
        entries.append(CatalogEntry(
            f"AGL(1,{p})", (natural, cons.regular_action(natural))))
    return entries


def _psl_family(include_q32: bool) -> list[CatalogEntry]:
    psl8 = cons.psl2(3)
    entries = [
        CatalogEntry("PSL2(8)", (psl8, cons.psl2_cosets(3),
                                 cons.regular_action(psl8))),
        CatalogEntry("PGammaL2(8)", (cons.pgammal2(3), cons.pgammal2_cosets(3))),
    ]
    if include_q32:
        entries.append(CatalogEntry("PSL2(32)", (cons.psl2(5),
                                                 cons.psl2_cosets(5))))
    return entries


FAMILY_BUILDERS = {
    "symmetric": lambda cfg: _symmetric_family(),
    "cyclic": lambda cfg: _cyclic_family(),
    "dihedral": lambda cfg: _dihedral_family(),
    "affine": lambda cfg: _affine_family(),
    "psl": lambda cfg: _psl_family(cfg.include_q32),
}


def default_catalog(config: SweepConfig | None = None) -> list[CatalogEntry]:
    config = config or SweepConfig()
    names = config.families or tuple(FAMILY_BUILDERS)
    entries = []
    for name in names:
        if name not in FAMILY_BUILDERS:
            raise ValueError(f"unknown catalog family {name!r}")
        entries.extend(FAMILY_BUILDERS[name](config))
    return entries


def sweep(config: SweepConfig | None = None) -> SweepResult:
    """Form disjoint sums of catalog actions and look for quasi-transitive ones.

    Every sum is intransitive by construction, so any quasi-transitive
    verdict is a counterexample to the transitivity theorem (none is
    expected).
    """
    config = config or SweepConfig()
    result = SweepResult()
    r_values = (2, 3) if config.include_triples else (2,)
    for entry in default_catalog(config):
        acts = entry.actions
        order = acts[0].group.order() if acts else 0
        for r in r_values:
            for shape in combinations_with_replacement(range(len(acts)), r):
                chosen = [acts[i] for i in shape]
                total_degree = sum(a.degree for a in chosen)
                if total_degree > config.max_total_degree or \
                        order > config.max_group_order:
                    result.skipped += 1
                    continue
                summed = cons.disjoint_sum(chosen)
                verdict = quasi_verdict(summed.group)
                item = SweepItem(summed.label, verdict.status, verdict.t)
                result.tested += 1
                result.items.append(item)
                if verdict.status == QUASI_TRANSITIVE:
                    result.findings.append(item)
                    result.lemma_violations.extend(
                        lemma_monitor(analyze(summed.group)))
    result.items.sort(key=lambda it: it.label)
    result.findings.sort(key=lambda it: it.label)
    return result
