from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from hopfext.analysis import grouplikes
from hopfext.catalog import build_context, theta_for, zeta_value
from hopfext.exact_math import I, ONE, ZERO, is_invertible
from hopfext.groups import (InvalidBicharacter, NotAbelian, abelian_group, bicharacter_from_fundamental,
                            build_group, character_group, dihedral_group, dual_group_algebra,
                            group_algebra, quaternion_group, recognize_group, subgroups_of_order)
from hopfext.hopf_core import comm_flags, dual_hopf, verify_hopf

GROUPS = [build_group(s) for s in ([2], [4], [2, 2], [8], [4, 2], [2, 2, 2], "D8", "Q8", "trivial")]
ABELIAN_EXP4 = [build_group(s) for s in ([2], [4], [2, 2], [4, 2], [2, 2, 2], "trivial")]


def brute_force_subgroups(G, k):
    """Every k-subset closed under multiplication (oracle independent of generator closure)."""
    out = set()
    for subset in combinations(range(G.order), k):
        s = set(subset)
        if G.identity in s and all(G.mul(a, b) in s for a in s for b in s):
            out.add(tuple(sorted(s)))
    return sorted(out)


def test_klein_four_group():
    G = build_group([2, 2])
    assert G.order == 4 and G.is_abelian() and G.exponent() == 2


def test_dihedral_group_of_order_8():
    G = build_group("dihedral8")
    assert not G.is_abelian()
    assert sorted(G.element_order(g) for g in range(8)).count(4) == 2


def test_elementary_abelian_of_order_8():
    G = build_group([2, 2, 2])
    assert G.order == 8 and G.exponent() == 2


def test_group_algebras_of_z2():
    G = build_group([2])
    for H in (group_algebra(G), dual_group_algebra(G)):
        assert H.dim == 2 and verify_hopf(H).ok


def test_dual_group_algebra_of_d8_flags():
    assert comm_flags(dual_group_algebra(dihedral_group(8))) == {"commutative": True, "cocommutative": False}


def test_grouplikes_of_dual_klein_group_algebra():
    elems, _ = grouplikes(dual_group_algebra(build_group([2, 2])))
    assert len(elems) == 4


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.name)
def test_group_algebra_dualities(G):
    assert dual_hopf(group_algebra(G)).same_tensors(dual_group_algebra(G))
    assert verify_hopf(dual_group_algebra(G)).ok


def test_subgroup_counts():
    assert len(subgroups_of_order(build_group([2, 2, 2]), 4)) == 7
    assert len(subgroups_of_order(build_group([4]), 2)) == 1
    assert len(subgroups_of_order(dihedral_group(8), 4)) == 3


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.name)
def test_subgroups_match_brute_force(G):
    for k in range(1, G.order + 1):
        if G.order % k == 0:
            got = [h.element_indices for h in subgroups_of_order(G, k)]
            assert got == brute_force_subgroups(G, k)


def test_characters_of_klein_group_come_from_theta():
    zeta = zeta_value("i")
    G = build_group([2, 2])
    theta = theta_for(zeta, G)
    _, pairing = character_group(G)
    rows = {tuple(r) for r in pairing}
    assert rows == {tuple(theta(g, h) for h in range(4)) for g in range(4)}


def test_characters_of_z4():
    _, pairing = character_group(build_group([4]))
    assert {x for row in pairing for x in row} == {ONE, I, -ONE, -I}


def test_characters_of_trivial_group():
    D, pairing = character_group(build_group("trivial"))
    assert D.order == 1 and pairing == [[ONE]]


def test_character_group_needs_abelian():
    with pytest.raises(NotAbelian):
        character_group(dihedral_group(8))


@pytest.mark.parametrize("G", ABELIAN_EXP4, ids=lambda G: G.name)
def test_character_group_size_and_pairing(G):
    D, pairing = character_group(G)
    assert D.order == G.order
    assert is_invertible(pairing)


def test_recognition():
    ctx = build_context("A", "i")
    assert recognize_group(grouplikes(ctx.B)[1]) == "Z2xZ2xZ2"
    M2_dual = dual_hopf(ctx.hopf_subobject("M2"))
    assert recognize_group(grouplikes(M2_dual)[1]) == "D8"
    assert recognize_group(build_group([8])) == "Z8"
    assert recognize_group(quaternion_group()) == "Q8"


def test_fundamental_matrix_of_theta():
    G = build_group([2, 2])
    for zeta in (ONE, I, -ONE, -I):
        theta = bicharacter_from_fundamental(G, zeta ** 2, -1, -1, 1)
        assert theta.symmetric and theta.nondegenerate


def test_all_ones_is_degenerate():
    theta = bicharacter_from_fundamental(build_group([2, 2]), 1, 1, 1, 1)
    assert theta.symmetric and not theta.nondegenerate


def test_asymmetric_fundamental_matrix_rejected():
    with pytest.raises(InvalidBicharacter):
        bicharacter_from_fundamental(build_group([2, 2]), -1, -1, 1, 1)


@given(st.sampled_from([ONE, I, -ONE, -I]))
def test_theta_symmetric_and_nondegenerate(zeta):
    G = build_group([2, 2])
    theta = theta_for(zeta, G)
    assert all(theta(g, h) == theta(h, g) for g in range(4) for h in range(4))
    _, pairing = character_group(G)
    assert {tuple(theta.character(g)) for g in range(4)} == {tuple(r) for r in pairing}
