import pytest
from hypothesis import given, settings, strategies as st

from hopfext import analysis as an
from hopfext.acceptance import study
from hopfext.catalog import build_context
from hopfext.exact_math import ONE, ZERO, Subspace, kernel
from hopfext.groups import (abelian_group, dihedral_group, dual_group_algebra, group_algebra,
                            quaternion_group, recognize_group)
from hopfext.hopf_core import HopfAlgebra, dual_hopf, morphism_from_images

SMALL_GROUPS = [abelian_group([2]), abelian_group([4]), abelian_group([2, 2]),
                abelian_group([2, 2, 2]), dihedral_group(8), quaternion_group()]


def conjugacy_classes(G) -> int:
    seen, count = set(), 0
    for g in range(G.order):
        if g in seen:
            continue
        count += 1
        seen |= {G.mul(G.mul(h, g), G.inverse[h]) for h in range(G.order)}
    return count


def subgroup_spans(G) -> list:
    """Brute force: all subsets closed under multiplication, as (elements, is_normal)."""
    found = set()
    for a in range(G.order):
        for b in range(G.order):
            elems = {G.identity, a, b}
            while True:
                more = {G.mul(x, y) for x in elems for y in elems} | elems
                if more == elems:
                    break
                elems = more
            found.add(frozenset(elems))
    out = []
    for S in found:
        normal = all(G.mul(G.mul(h, s), G.inverse[h]) in S for h in range(G.order) for s in S)
        out.append((sorted(S), normal))
    return out


def span_of(G, elems) -> Subspace:
    return Subspace(G.order, [[ONE if k == g else ZERO for k in range(G.order)] for g in elems])


def test_center_of_d8_group_algebra():
    G = dihedral_group(8)
    assert an.center(group_algebra(G)).dim == conjugacy_classes(G) == 5


def test_center_of_function_algebra_is_everything():
    assert an.center(dual_group_algebra(dihedral_group(8))).dim == 8


def test_characters_of_klein_four():
    chars = an.algebra_characters(group_algebra(abelian_group([2, 2])))
    assert len(chars) == 4
    assert all(x * x == ONE for c in chars for x in c)


def test_characters_of_N_take_sign_values_on_u():
    ctx = build_context("A", "i")
    P = ctx.subobjects["N"]
    u = P.coordinates(ctx.eval("u"))
    values = {sum((a * b for a, b in zip(c, u)), ZERO) for c in an.algebra_characters(ctx.N)}
    assert values == {ONE, -ONE}


def test_grouplikes_of_b_central_part():
    s = study("A", "i")
    elems, G = s.grouplikes
    assert recognize_group(G) == "Z2xZ2xZ2"
    assert [list(g.vector) for g in an.central_grouplikes(s.B, elems)] == [s.vec("1"), s.vec("c4")]


def test_wedderburn_examples():
    assert an.wedderburn(group_algebra(abelian_group([2, 2, 2]))).multiset() == {1: 8}
    W = an.wedderburn(group_algebra(dihedral_group(8)))
    assert W.multiset() == {1: 4, 2: 1} and W.split_certified
    assert an.wedderburn(group_algebra(quaternion_group())).multiset() == {1: 4, 2: 1}


def test_wedderburn_of_b():
    s = study("A", "1")
    assert s.wedderburn.multiset() == {1: 8, 2: 2, 4: 1}
    assert s.dual_wedderburn.multiset() == {1: 8, 2: 2, 4: 1}
    assert s.wedderburn.split_certified


def test_not_semisimple_dual_numbers():
    # K[x]/(x^2): the trace form vanishes on x
    mult = [[[ONE, ZERO], [ZERO, ONE]], [[ZERO, ONE], [ZERO, ZERO]]]
    comult = [[[ONE, ZERO], [ZERO, ZERO]], [[ZERO, ONE], [ONE, ZERO]]]
    H = HopfAlgebra(["1", "x"], mult, [ONE, ZERO], comult, [ONE, ZERO])
    assert an.trace_form_radical(H).dim == 1
    with pytest.raises(an.NotSemisimple):
        an.wedderburn(H)


def test_split_certification_failure(monkeypatch):
    monkeypatch.setattr(an, "_split_block", lambda H, e, size: None)
    H = group_algebra(dihedral_group(8))
    W = an.wedderburn(H)
    assert not W.split_certified
    with pytest.raises(an.SplitCertificationFailed):
        an.irreducible_characters(H, W)


def test_coalgebra_blocks():
    blocks = an.coalgebra_blocks(group_algebra(abelian_group([2, 2])))
    assert sorted(b.dim for b in blocks) == [1, 1, 1, 1]
    s = study("A", "-1")
    dims = sorted(b.dim for b in an.coalgebra_blocks(s.N))
    assert dims == [1] * 8 + [4, 4]
    assert sorted(b.dim for b in s.blocks) == [1] * 8 + [4, 4, 16]


@pytest.mark.parametrize("zeta", ["1", "i", "-1", "-i"])
def test_generated_by_u(zeta):
    s = study("A", zeta)
    P = an.generated_hopf_subalgebra(s.B, [s.vec("u")])
    # frozen from a naive closure under products, coproduct legs and antipode: dim 8, contains s
    assert P.dim == 8 and P.contains(s.vec("s"))
    assert P == s.sub("M2")


def test_hopf_ideals():
    H = group_algebra(abelian_group([2]))
    ideals = an.hopf_ideals_of_dim(H, 1)
    assert len(ideals) == 1
    assert ideals[0] == Subspace(2, [[ONE, -ONE]])
    s = study("A", "i")
    # the only 31-dimensional Hopf ideal is the augmentation ideal ker(eps)
    assert an.hopf_ideals_of_dim(s.B, 31, s.dual_blocks) == [kernel([s.B.counit], 32)]


def test_coinvariants_of_counit_map():
    H = group_algebra(abelian_group([4]))
    K = group_algebra(abelian_group([2]))
    # the trivial Hopf map K[Z4] -> K[Z2] sending every group element to 1
    images = [[ONE, ZERO] for _ in range(4)]
    pi = morphism_from_images(H, K, images)
    right, left = an.coinvariants(H, pi)
    assert right.dim == 4 and left.dim == 4


def test_coinvariants_of_group_quotient():
    G = abelian_group([4])
    H = group_algebra(G)
    P = span_of(G, [0, 2])
    Q, pi = an.quotient_hopf(H, P)
    right, left = an.coinvariants(H, pi)
    assert Q.dim == 2 and right == P == left


def test_irreducible_characters_of_z2():
    chars = an.irreducible_characters(group_algebra(abelian_group([2])))
    assert {tuple(c) for c, _ in chars} == {(ONE, ONE), (ONE, -ONE)}
    assert [d for _, d in chars] == [1, 1]


def test_regular_trace_decomposes():
    s = study("A", "i")
    chars = s.irreducible_characters
    for b in (0, 1, 5, 17, 31):
        L = s.B.left_mult_matrix([ONE if k == b else ZERO for k in range(32)])
        trace = sum((L[k][k] for k in range(32)), ZERO)
        assert sum((d * c[b] for c, d in chars), ZERO) == trace


def test_grothendieck_of_group_algebras():
    T = an.grothendieck_table(group_algebra(abelian_group([2, 2])))
    assert T.is_commutative() and T.dims == [1, 1, 1, 1]
    T = an.grothendieck_table(group_algebra(dihedral_group(8)))
    two = T.dims.index(2)
    assert T.product(two, two) == {k: 1 for k, d in enumerate(T.dims) if d == 1}


def test_grothendieck_of_b():
    T = study("A", "-i").grothendieck
    assert T.is_commutative()
    assert sorted(T.dims) == [1] * 8 + [2, 2, 4]


def test_recognize_hopf():
    assert an.recognize_hopf(group_algebra(dihedral_group(8))) == ("group_algebra", "D8")
    assert an.recognize_hopf(dual_group_algebra(dihedral_group(8))) == ("dual_group_algebra", "D8")
    assert an.recognize_hopf(build_context("A", "i").N)[0] == "unresolved"


def test_not_normal():
    G = dihedral_group(8)
    H = group_algebra(G)
    bad = next(S for S, normal in subgroup_spans(G) if not normal)
    with pytest.raises(an.NotNormal):
        an.quotient_hopf(H, span_of(G, bad))


def test_b_normality_pattern():
    s = study("A", "i")
    assert [s.is_normal(m) for m in ("M1", "M2", "M3")] == [False, True, False]
    assert s.is_normal("G1") and not s.is_normal("G2")


@settings(deadline=None, max_examples=20)
@given(st.sampled_from(SMALL_GROUPS), st.booleans())
def test_block_dims_fill_dimension(G, dual):
    H = dual_group_algebra(G) if dual else group_algebra(G)
    W = an.wedderburn(H)
    assert sum(s * s for s in W.block_dims) == H.dim


@settings(deadline=None, max_examples=20)
@given(st.sampled_from(SMALL_GROUPS))
def test_grouplikes_are_independent(G):
    elems, K = an.grouplikes(group_algebra(G))
    assert len(elems) == G.order == K.order
    assert Subspace(G.order, [g.vector for g in elems]).dim == G.order


@settings(deadline=None, max_examples=20)
@given(st.sampled_from(SMALL_GROUPS))
def test_dual_grouplikes_count_linear_blocks(G):
    H = group_algebra(G)
    elems, _ = an.grouplikes(dual_hopf(H))
    assert len(elems) == an.wedderburn(H).multiset().get(1, 0)


@settings(deadline=None, max_examples=20)
@given(st.sampled_from(SMALL_GROUPS))
def test_normal_subalgebras_give_quotients(G):
    H = group_algebra(G)
    for elems, normal in subgroup_spans(G):
        P = span_of(G, elems)
        assert an.is_normal_hopf_subalgebra(H, P) == normal
        if normal:
            Q, pi = an.quotient_hopf(H, P, check_normal=False)
            assert Q.dim * P.dim == H.dim
            assert an.coinvariants(H, pi)[0] == P
