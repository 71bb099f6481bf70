from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfext.exact_math import (HALF, I, ONE, ZERO, GaussianRational, NonSplit, Polynomial,
                                Subspace, gaussian_roots, gq, identity, joint_eigensplit,
                                joint_eigensplit_with_values,
                                kernel, matvec, rank, solve, zeros)

small = st.integers(-6, 6)
nonzero_den = st.integers(1, 5)


@st.composite
def gaussians(draw, nonzero=False):
    a = Fraction(draw(small), draw(nonzero_den))
    b = Fraction(draw(small), draw(nonzero_den))
    if nonzero and a == 0 and b == 0:
        a = Fraction(1)
    return GaussianRational(a, b)


def test_inverse_of_i():
    assert I.inv() == -I


def test_inverse_of_one_plus_i():
    assert (ONE + I).inv() == GaussianRational(Fraction(1, 2), Fraction(-1, 2))


def test_product_with_zeta_squared_minus_one():
    zeta = I
    alpha = I * zeta ** 2
    assert (ONE + alpha) * (ONE - alpha) == gq(2)


def test_json_format():
    assert HALF.to_json() == "1/2+0/1*i"
    assert (-ONE).to_json() == "-1/1+0/1*i"


@given(gaussians())
def test_json_round_trip(a):
    assert GaussianRational.parse(a.to_json()) == a


@given(gaussians(), gaussians(), gaussians())
def test_multiplication_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(gaussians(nonzero=True))
def test_inverse(a):
    assert a * a.inv() == ONE


@given(gaussians(), gaussians())
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()


@given(gaussians(), gaussians())
def test_conjugation_is_a_ring_map(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()


def test_roots_of_x2_plus_1():
    assert set(gaussian_roots(Polynomial([1, 0, 1]))) == {I, -I}


def test_roots_of_x2_minus_2_are_absent():
    assert gaussian_roots(Polynomial([-2, 0, 1])) == []


def test_fourth_roots_of_unity():
    assert set(gaussian_roots(Polynomial([-1, 0, 0, 0, 1]))) == {ONE, I, -ONE, -I}


@given(st.lists(gaussians(), min_size=1, max_size=4), st.lists(gaussians(), max_size=2))
def test_roots_complete_for_known_factorizations(roots, extra):
    # (x^2 - 3) has no roots in Q(i); multiplying by it must not add or lose roots
    p = Polynomial.from_roots(roots)
    q = p * Polynomial([-3, 0, 1])
    found = gaussian_roots(q)
    assert sorted(found, key=GaussianRational.sort_key) == sorted(roots, key=GaussianRational.sort_key)
    assert all(not q(r) for r in found)


def test_kernel_of_identity_is_zero():
    assert kernel(identity(3), 3).dim == 0


def test_kernel_of_zero_is_everything():
    assert kernel(zeros(2, 2), 2).dim == 2


def test_solve_scalar():
    assert solve([[gq(2)]], [ONE]) == [HALF]


@st.composite
def matrices(draw):
    m, n = draw(st.integers(1, 4)), draw(st.integers(1, 4))
    return [[GaussianRational(draw(st.integers(-2, 2)), draw(st.integers(-1, 1))) for _ in range(n)]
            for _ in range(m)], n


@given(matrices())
def test_rank_nullity(data):
    M, n = data
    K = kernel(M, n)
    assert K.dim + rank(M) == n
    for v in K.basis:
        assert not any(matvec(M, v))


def test_eigensplit_diagonal():
    D = [[ONE, ZERO], [ZERO, -ONE]]
    assert [s.dim for s in joint_eigensplit([D], Subspace.full(2))] == [1, 1]


def test_eigensplit_rotation():
    R = [[ZERO, -ONE], [ONE, ZERO]]
    pieces = joint_eigensplit_with_values([R], Subspace.full(2))
    assert {values for values, _ in pieces} == {(I,), (-I,)}
    for (lam,), piece in pieces:
        v = piece.basis[0]
        assert matvec(R, v) == [lam * x for x in v]


def test_eigensplit_non_split():
    with pytest.raises(NonSplit):
        joint_eigensplit([[[ZERO, gq(2)], [ONE, ZERO]]], Subspace.full(2))


@given(st.lists(st.sampled_from([ONE, -ONE, I, -I]), min_size=2, max_size=4),
       st.lists(st.sampled_from([ONE, -ONE]), min_size=2, max_size=4))
def test_eigensplit_properties(d1, d2):
    n = min(len(d1), len(d2))
    ops = [[[d[i] if i == j else ZERO for j in range(n)] for i in range(n)] for d in (d1[:n], d2[:n])]
    pieces = joint_eigensplit(ops, Subspace.full(n))
    assert sum(p.dim for p in pieces) == n
    for p in pieces:
        for op in ops:
            assert all(p.contains(matvec(op, v)) for v in p.basis)
