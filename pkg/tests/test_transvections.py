import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from strategies import types
from symeichler import make_lattice
from symeichler.acceptance import random_isotropic_pair, random_witness
from symeichler.errors import (DimensionError, NotIntegralError,
                               NotIsotropicError, VerificationError)
from symeichler.intmat import identity, matmul
from symeichler.lattice_core import dual_class, plane_swap
from symeichler.transvections import (Transvection, Witness,
                                      acts_trivially_on_discriminant,
                                      apply_transvection, compose,
                                      compose_all, identity_witness, inverse,
                                      is_symplectic, matrix_witness,
                                      symplectic_inverse, transvection,
                                      transvection_matrix,
                                      verify_gamma_membership, witness_det)


def test_apply_examples(L112):
    e1, f1, e3, f3 = L112.e(1), L112.f(1), L112.e(3), L112.f(3)
    T = Transvection(L112, e1, e3)
    add = lambda a, b, k=1: tuple(x + k * y for x, y in zip(a, b))
    assert apply_transvection(T, f1) == add(f1, e3)
    assert apply_transvection(T, f3) == add(f3, e1, 2)
    assert apply_transvection(Transvection(L112, e1, e1), f1) == add(f1, e1, 2)


def test_matrix_in_gamma(L112):
    M = Transvection(L112, L112.e(1), L112.e(3)).matrix()
    assert verify_gamma_membership(L112, M)


def test_non_isotropic_rejected(L112):
    with pytest.raises(NotIsotropicError):
        Transvection(L112, L112.e(1), L112.f(1))


def test_zero_transvection_is_identity(L112):
    assert Transvection(L112, (0,) * 6, L112.e(1)).matrix() == identity(6)


def test_rational_data():
    L = make_lattice((1, 1, 2))
    half_e3 = (0, 0, 0, 0, Fraction(1, 2), 0)
    T = Transvection(L, L.e(3), half_e3)
    assert T.integral is False
    assert verify_gamma_membership(L, T.matrix())
    T2 = Transvection(L, L.e(1), half_e3)
    with pytest.raises(NotIntegralError):
        T2.matrix()
    with pytest.raises(NotIntegralError):
        apply_transvection(T2, L.f(1))


def test_compose_and_inverse(L112):
    W = transvection(L112, L112.e(1), L112.e(3))
    I = identity_witness(L112)
    assert compose(W, I).matrix == W.matrix
    assert compose(W, inverse(W)).matrix == identity(6)
    assert inverse(I).matrix == identity(6)
    assert inverse(W).matrix == Transvection(L112, L112.e(1),
                                             tuple(-x for x in L112.e(3))).matrix()
    assert inverse(inverse(W)).matrix == W.matrix
    V = transvection(L112, L112.f(2), L112.e(3))
    assert verify_gamma_membership(L112, (W @ V).matrix)
    assert (W @ V).matrix == matmul(W.matrix, V.matrix)


def test_discriminant_action_examples(L112):
    assert acts_trivially_on_discriminant(L112, identity(6))
    assert acts_trivially_on_discriminant(L112, plane_swap(L112))
    R = [list(r) for r in identity(6)]
    # e3 -> f3, f3 -> -e3
    R[4][4], R[5][4], R[4][5], R[5][5] = 0, 1, -1, 0
    assert is_symplectic(L112, R)
    assert not acts_trivially_on_discriminant(L112, R)
    assert not verify_gamma_membership(L112, R)
    with pytest.raises(VerificationError):
        matrix_witness(L112, R)


def test_witness_rejects_non_isometry(L112):
    M = [list(r) for r in identity(6)]
    M[0][0] = 2
    with pytest.raises(VerificationError):
        Witness(L112, M)
    with pytest.raises(DimensionError):
        Witness(L112, identity(4))


@given(st.data())
def test_random_transvections_in_gamma(data):
    L = make_lattice(data.draw(types))
    rng = random.Random(data.draw(st.integers(0, 2 ** 32)))
    l, m = random_isotropic_pair(L, rng)
    T = Transvection(L, l, m)
    M = T.matrix()
    assert verify_gamma_membership(L, M)
    assert matmul(M, T.inverse().matrix()) == identity(L.rank)


@given(st.data())
def test_class_invariance_under_gamma(data):
    from strategies import primitive_vectors
    L = make_lattice(data.draw(types))
    rng = random.Random(data.draw(st.integers(0, 2 ** 32)))
    W = random_witness(L, rng)
    v = data.draw(primitive_vectors(L))
    assert dual_class(L, W(v)) == dual_class(L, v)
    assert witness_det(W) == 1


@given(st.data())
def test_symplectic_inverse(data):
    L = make_lattice(data.draw(types))
    W = random_witness(L, random.Random(data.draw(st.integers(0, 2 ** 32))))
    assert matmul(W.matrix, symplectic_inverse(L, W.matrix)) == identity(L.rank)


def test_compose_all_order(L112):
    a = transvection(L112, L112.e(1), L112.e(3))
    b = transvection(L112, L112.f(1), L112.e(2))
    assert compose_all(L112, [a, b]).matrix == matmul(a.matrix, b.matrix)
    assert compose_all(L112, []).matrix == identity(6)
    assert transvection_matrix(Transvection(L112, L112.e(1), L112.e(3))).matrix \
        == a.matrix
