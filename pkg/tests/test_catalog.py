import pytest

from hopfext.analysis import algebra_characters, grouplikes
from hopfext.catalog import (build_context, build_Hd11, canonical_morphisms, fixtures,
                             transported_context, yd_elements, zeta_value)
from hopfext.exact_math import HALF, I, ONE, ZERO, Subspace, matvec
from hopfext.groups import recognize_group
from hopfext.hopf_core import comm_flags, dual_hopf, verify_hopf, verify_morphism

ZETAS = ["1", "i", "-1", "-i"]


@pytest.mark.parametrize("variant", ["A", "Aprime"])
@pytest.mark.parametrize("zeta", ZETAS)
def test_presentation_relations(variant, zeta):
    ctx = build_context(variant, zeta)
    for lhs, rhs in fixtures(zeta)["relations"][variant]:
        assert ctx.eval(lhs) == ctx.eval(rhs), (lhs, rhs)


@pytest.mark.parametrize("zeta", ZETAS)
def test_basis_relations(zeta):
    ctx = build_context("A", zeta)
    for lhs, rhs in fixtures(zeta)["basis_relations"]:
        assert ctx.eval(lhs) == ctx.eval(rhs), (lhs, rhs)


def test_v_squared_at_i():
    ctx = build_context("A", "i")
    assert ctx.eval("v**2") == ctx.eval("(1 + i*u + u**2 - i*u**3)/2")


@pytest.mark.parametrize("zeta", ZETAS)
def test_c2h2_squared(zeta):
    ctx = build_context("A", zeta)
    assert ctx.eval("c2*h2*c2*h2") == ctx.eval("c4")


@pytest.mark.parametrize("zeta", ZETAS)
def test_omega2_times_eta1(zeta):
    ctx = build_context("A", zeta)
    A = ctx.A.as_algebra()
    e = yd_elements(ctx.A, zeta)
    alpha = I * zeta_value(zeta) ** 2
    # oracle: omega2 = ((1+alpha) x + (1-alpha) x^3)/2 and eta1 = y, so the product is a
    # combination of the monomials xy = eta4 and x^3 y = eta2
    expected = [HALF * (1 + alpha) * a + HALF * (1 - alpha) * b for a, b in zip(e["n4"], e["n2"])]
    assert A.mul(e["w2"], e["n1"]) == expected
    assert A.mul(e["x"], e["y"]) == e["n4"]


@pytest.mark.parametrize("zeta", ZETAS)
def test_omega4_relations(zeta):
    A = build_context("A", zeta).A.as_algebra()
    e = yd_elements(build_context("A", zeta).A, zeta)
    assert A.mul(e["w4"], e["n1"]) == e["n3"]
    assert A.mul(e["w4"], e["n2"]) == e["n4"]


def test_aprime_is_noncommutative_a_is_commutative():
    assert comm_flags(build_context("A", "i").A.as_algebra())["commutative"]
    assert not comm_flags(build_context("Aprime", "i").A.as_algebra())["commutative"]


def test_fixture_bundle():
    assert fixtures("i").center_dim == 11
    counts = fixtures("1").subalgebra_counts
    assert {d: counts[d] for d in (4, 8, 16)} == {4: 7, 8: 3, 16: 1}
    assert fixtures("-1").q_recognition == "Z2xZ2"
    assert fixtures("-i").zeta == "-i"


@pytest.mark.parametrize("zeta", ZETAS)
def test_coproduct_fixtures(zeta):
    ctx = build_context("A", zeta)
    for text, pairs in fixtures(zeta)["coproducts"].items():
        assert ctx.B.comul(ctx.eval(text)) == ctx.eval_tensor(pairs), text


@pytest.mark.parametrize("zeta", ZETAS)
def test_subobjects_are_hopf(zeta):
    ctx = build_context("A", zeta)
    dims = {"N": 16, "U": 2, "P": 4, "M1": 8, "M2": 8, "M3": 8}
    for name, d in dims.items():
        assert ctx.subobjects[name].dim == d
        assert verify_hopf(ctx.hopf_subobject(name)).ok
    for k in range(1, 8):
        assert ctx.subobjects[f"G{k}"].dim == 4


def test_m3_alternative_generators():
    ctx = build_context("A", "i")
    span = Subspace(32, [ctx.eval(e) for e in fixtures("i")["M3_span"]])
    assert span == ctx.subobjects["M3"]
    for g in fixtures("i")["M3_alternative_generators"]:
        assert span.contains(ctx.eval(g))


@pytest.mark.parametrize("zeta", ZETAS)
def test_pi_C_table(zeta):
    ctx = build_context("A", zeta)
    pi = canonical_morphisms(ctx)["pi_C"]
    labels = ("w1", "w2", "w3", "w4", "n1", "n2", "n3", "n4")
    for src, dst in fixtures(zeta)["pi_C"].items():
        column = [pi.matrix[k][labels.index(src)] for k in range(4)]
        assert column == [ONE if k == labels.index(dst) else ZERO for k in range(4)], src


@pytest.mark.parametrize("zeta", ZETAS)
def test_pi_N_values(zeta):
    ctx = build_context("A", zeta)
    pi = canonical_morphisms(ctx)["pi_N"]
    to_N = lambda v: ctx.subobjects["N"].coordinates(v)
    for src, dst in fixtures(zeta)["pi_N"].items():
        assert matvec(pi.matrix, ctx.eval(src)) == to_N(ctx.eval(dst)), src


def _character(chars, values, points):
    hits = [c for c in chars if [sum((a * b for a, b in zip(c, p)), ZERO) for p in points] == values]
    assert len(hits) == 1
    return hits[0]


@pytest.mark.parametrize("zeta", ["i", "1"])
def test_chi1_factors_through_pi_N(zeta):
    ctx = build_context("A", zeta)
    pi = canonical_morphisms(ctx)["pi_N"]
    N = ctx.N
    P = ctx.subobjects["N"]
    one, neg = ONE, -ONE
    chi1 = _character(algebra_characters(ctx.B), [one, neg, one, one],
                      [ctx.eval(x) for x in ("u", "v", "r", "s")])
    chi1p = _character(algebra_characters(N), [neg, one, one],
                       [P.coordinates(ctx.eval(x)) for x in ("u", "r", "s")])
    composed = [sum((chi1p[k] * pi.matrix[k][j] for k in range(N.dim)), ZERO) for j in range(32)]
    assert composed == chi1


@pytest.mark.parametrize("zeta", ZETAS)
def test_f_BprimeB(zeta):
    ctx = build_context("A", zeta)
    f = canonical_morphisms(ctx)["f_BprimeB"]
    assert all(verify_morphism(f).values())
    vprime = build_context("Aprime", zeta).eval("v")
    assert matvec(f.matrix, vprime) == ctx.eval("v*r")


def test_f_HdN_is_isomorphism():
    f = canonical_morphisms(build_context("A", "-i"))["f_HdN"]
    assert all(verify_morphism(f).values())


def test_hd11_grouplikes():
    H = build_Hd11()
    assert recognize_group(grouplikes(H)[1]) == "Z2xZ2xZ2"
    assert recognize_group(grouplikes(dual_hopf(H))[1]) == "Z2xZ2xZ2"
    assert comm_flags(H) == {"commutative": False, "cocommutative": False}


def test_hd11_coproduct_of_t():
    H = build_Hd11()
    labels = list(H.basis_labels)
    t, zt, xyt = labels.index("1#t"), labels.index("z#t"), labels.index("xy#t")
    expected = {(t, t): HALF, (zt, t): HALF, (t, xyt): HALF, (zt, xyt): -HALF}
    actual = {(p, q): H.comult[t][p][q] for p in range(16) for q in range(16) if H.comult[t][p][q]}
    assert actual == expected


@pytest.mark.parametrize("zeta", ["1", "-i"])
def test_transported_context(zeta):
    ctx = transported_context(zeta)
    base = build_context("A", zeta)
    f = ctx.cache["pullback"]
    for name in ("u", "v", "r", "s", "c2", "d1", "h3"):
        assert matvec(f.matrix, ctx.eval(name)) == base.eval(name)
    for lhs, rhs in fixtures(zeta)["relations"]["A"]:
        assert ctx.eval(lhs) == ctx.eval(rhs)
    assert ctx.subobjects["M2"].dim == 8


def test_unknown_variant():
    with pytest.raises(ValueError):
        build_context("C", "i")
