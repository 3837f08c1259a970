import pytest

from oracles import brute_elements, brute_orbit, brute_order
from qtperm.constructions import alternating_group, psl2, symmetric_group
from qtperm.group import PermGroup, build_chain
from qtperm.perm import Permutation


def s4():
    return symmetric_group(4).group


def test_order_s4():
    assert s4().order() == 24


def test_order_matches_brute_closure_a4():
    gens = [Permutation.from_cycles(4, [(0, 1, 2)]),
            Permutation.from_cycles(4, [(1, 2, 3)])]
    G = PermGroup(gens, 4)
    assert G.order() == brute_order(gens, 4) == 12


def test_order_a7():
    assert alternating_group(7).group.order() == 2520


def test_order_psl2_8():
    assert psl2(3).group.order() == 504


def test_membership_matches_brute_force():
    gens = [Permutation.from_cycles(4, [(0, 1, 2)]),
            Permutation.from_cycles(4, [(1, 2, 3)])]
    G = PermGroup(gens, 4)
    elems = {p.images for p in brute_elements(gens, 4)}
    import itertools
    for images in itertools.permutations(range(4)):
        assert G.contains(Permutation(images)) == (images in elems)


def test_transposition_not_in_a4():
    G = alternating_group(4).group
    assert not G.contains(Permutation.from_cycles(4, [(0, 1)]))


def test_base_prefix_is_honored():
    G = s4()
    chain = G.chain((2, 0))
    assert chain.base[:2] == (2, 0)
    assert chain.order() == 24


def test_transversal_sizes_multiply_to_order():
    G = alternating_group(6).group
    chain = G.chain()
    prod = 1
    for size in chain.transversal_sizes():
        prod *= size
    assert prod == G.order() == 360


def test_orbit_matches_brute():
    gens = [Permutation.from_cycles(7, [(0, 1, 2)]),
            Permutation.from_cycles(7, [(4, 5)])]
    G = PermGroup(gens, 7)
    for p in range(7):
        assert sorted(G.orbit(p)) == brute_orbit(gens, p)


def test_point_stabilizer_orbit_stabilizer():
    G = s4()
    stab = G.point_stabilizer(1)
    assert stab.order() == 6
    assert all(g(1) == 1 for g in stab.elements())
    assert G.order() == stab.order() * len(G.orbit(1))


def test_pointwise_stabilizer():
    G = s4()
    fix = G.pointwise_stabilizer([0, 1])
    assert fix.order() == 2
    assert all(g(0) == 0 and g(1) == 1 for g in fix.elements())


def test_two_point_stabilizer_symmetry():
    G = alternating_group(5).group
    assert (G.two_point_stabilizer_order(0, 3)
            == G.two_point_stabilizer_order(3, 0) == 3)


def test_order_invariant_under_base_change():
    G = psl2(3).group
    assert G.chain((5, 2, 0)).order() == G.chain().order() == 504


def test_trivial_group():
    G = PermGroup([Permutation.identity(3)], 3)
    assert G.order() == 1
    assert list(G.elements()) == [Permutation.identity(3)]


def test_elements_enumeration_matches_brute():
    gens = [Permutation.from_cycles(5, [(0, 1, 2, 3, 4)]),
            Permutation.from_cycles(5, [(1, 4), (2, 3)])]
    G = PermGroup(gens, 5)
    assert sorted(p.images for p in G.elements()) == \
        sorted(p.images for p in brute_elements(gens, 5))


def test_build_chain_rejects_mismatched_degree():
    with pytest.raises(ValueError):
        build_chain([Permutation.identity(3), Permutation.identity(4)], 4)
