import pytest
from hypothesis import given, strategies as st

from hopfext.catalog import build_context, canonical_morphisms
from hopfext.exact_math import ONE, ZERO, identity
from hopfext.groups import abelian_group, dihedral_group, group_algebra, dual_group_algebra, quaternion_group
from hopfext.hopf_core import (HopfAlgebra, comm_flags, dual_hopf, extend_smash_algebra_map,
                               grouplike_check, integrals, monomial_span_check, morphism_from_images,
                               solve_antipode, verify_hopf, verify_morphism)
from hopfext.analysis import grouplikes

Z2 = abelian_group([2])
SMALL_GROUPS = [abelian_group([2]), abelian_group([4]), abelian_group([2, 2]), abelian_group([2, 2, 2]),
                dihedral_group(8), quaternion_group()]


def test_group_algebra_of_z2_passes():
    assert verify_hopf(group_algebra(Z2)).ok


def test_corrupted_multiplication_breaks_associativity():
    H = group_algebra(Z2)
    mult = [[list(c) for c in row] for row in H.mult]
    # changing g*g alone keeps a 2-dim algebra generated by g associative; 1*g = 0 does not
    mult[0][1] = [ZERO, ZERO]
    bad = HopfAlgebra(H.basis_labels, mult, H.unit, H.comult, H.counit)
    report = verify_hopf(bad)
    assert report["associativity"] is False
    assert not report.ok


def test_corrupted_table_fails_associativity():
    # x*y entries of K[Z2 x Z2] permuted so that the product is no longer associative
    H = group_algebra(abelian_group([2, 2]))
    mult = [[list(c) for c in row] for row in H.mult]
    mult[1][2], mult[1][3] = mult[1][3], mult[1][2]
    bad = HopfAlgebra(H.basis_labels, mult, H.unit, H.comult, H.counit)
    assert verify_hopf(bad)["associativity"] is False


def test_b_passes():
    assert verify_hopf(build_context("A", "i").B).ok


def test_antipode_of_z4_is_inverse():
    G = abelian_group([4])
    S = solve_antipode(group_algebra(G))
    for g in range(4):
        column = [S[k][g] for k in range(4)]
        assert column == [ONE if k == G.inverse[g] else ZERO for k in range(4)]


def test_antipode_on_b_generators():
    ctx = build_context("A", "i")
    B = ctx.B
    assert B.apply_antipode(ctx.eval("u")) == ctx.eval("(u + s*u + u**3 - s*u**3)/2")
    assert B.apply_antipode(ctx.eval("r")) == ctx.eval("r")
    assert B.apply_antipode(ctx.eval("s")) == ctx.eval("s")


@pytest.mark.parametrize("G", SMALL_GROUPS, ids=lambda G: G.name)
def test_antipode_on_grouplikes(G):
    H = group_algebra(G)
    for g in range(G.order):
        e = H.e(g)
        assert H.mul(H.apply_antipode(e), e) == H.unit


def test_dual_of_k_z2():
    assert dual_hopf(group_algebra(Z2)).same_tensors(dual_group_algebra(Z2))


def test_double_dual_of_b():
    B = build_context("A", "-1").B
    assert dual_hopf(dual_hopf(B)).same_tensors(B)


@pytest.mark.parametrize("G", SMALL_GROUPS, ids=lambda G: G.name)
def test_double_dual_of_group_algebras(G):
    H = group_algebra(G)
    assert dual_hopf(dual_hopf(H)).same_tensors(H)


def test_comm_flags():
    assert comm_flags(group_algebra(dihedral_group(8))) == {"commutative": False, "cocommutative": True}
    ctx = build_context("A", "i")
    assert comm_flags(ctx.A.as_algebra())["commutative"]
    assert comm_flags(ctx.N) == {"commutative": False, "cocommutative": False}


def test_integral_of_z2():
    data = integrals(group_algebra(Z2))
    assert data["left_integral_space"].contains([ONE, ONE])
    assert sum(data["integral"], ZERO) != ZERO
    assert data["semisimple"]


def test_b_semisimple_and_cosemisimple():
    B = build_context("A", "1").B
    assert integrals(B)["semisimple"]
    assert integrals(dual_hopf(B))["semisimple"]


def test_identity_morphism():
    B = build_context("A", "i").B
    f = morphism_from_images(B, B, identity(B.dim))
    assert all(verify_morphism(f).values())


def test_bprime_to_b_isomorphism():
    f = canonical_morphisms(build_context("A", "-i"))["f_BprimeB"]
    assert all(verify_morphism(f).values())


def test_killing_v_is_not_an_algebra_map():
    ctx = build_context("A", "i")
    B = ctx.B
    images = identity(B.dim)
    v = ctx.eval("v").index(ONE)
    images[v] = [ZERO] * B.dim
    assert verify_morphism(morphism_from_images(B, B, images))["algebra_map"] is False


def test_extension_of_inclusions_is_identity():
    B = build_context("A", "i").B
    sm = B.smash
    m = sm.h_algebra.dim
    fA = [[ONE if i == a * m else ZERO for a in range(sm.a_dim)] for i in range(B.dim)]
    fH = [[ONE if i == h else ZERO for h in range(m)] for i in range(B.dim)]
    f = extend_smash_algebra_map(fA, fH, B, B)
    assert f.matrix == identity(B.dim)


def test_monomial_span():
    ctx = build_context("A", "i")
    gens = [ctx.eval(g) for g in ("u", "v", "r", "s")]
    assert monomial_span_check(ctx.B, gens, (4, 2, 2, 2))
    prime = build_context("Aprime", "i")
    assert monomial_span_check(prime.B, [prime.eval(g) for g in ("u", "v", "r", "s")], (4, 2, 2, 2))
    assert not monomial_span_check(ctx.B, gens[2:], (2, 2))


@given(st.sampled_from(["1", "i", "-1", "-i"]))
def test_hopf_maps_send_grouplikes_to_grouplikes(token):
    f = canonical_morphisms(build_context("A", token))["f_BprimeB"]
    assert f.is_hopf_map()
    elems, _ = grouplikes(f.source)
    for g in elems:
        assert grouplike_check(f.target, f(list(g.vector)))
