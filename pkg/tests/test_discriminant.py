from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from strategies import lattice_and_primitive, primitive_vectors, types
from symeichler import make_lattice
from symeichler.discriminant import (DiscGroup, all_splitting_type,
                                     disc_pair, failing_primes,
                                     is_splitting_element,
                                     is_splitting_element_oracle, order,
                                     p_part_profile, splitting_partner)
from symeichler.errors import (DimensionError, GroupTooLargeError,
                               HypothesisError, NotPrimeError,
                               NotSplittingError)
from symeichler.lattice_core import dual_class, pair_rational


def el(D, *pairs):
    return D.element(pairs)


def test_element_reduces_and_check_rejects():
    D = DiscGroup((1, 1, 4))
    assert el(D, (0, 0), (0, 0), (5, -1)).residues[2] == (1, 3)
    with pytest.raises(DimensionError):
        D.check(((0, 0), (0, 0), (4, 0)))
    with pytest.raises(DimensionError):
        D.element([(0, 0)])


def test_size_and_enumeration():
    D = DiscGroup((1, 2, 6))
    elems = list(D.elements())
    assert len(elems) == D.size == 4 * 36
    assert len(set(elems)) == D.size
    assert elems == sorted(elems, key=lambda x: x.residues)


def test_disc_pair_examples():
    D = DiscGroup((1, 1, 2))
    x, y = el(D, (0, 0), (0, 0), (1, 0)), el(D, (0, 0), (0, 0), (0, 1))
    assert disc_pair(D, x, y) == Fraction(1, 2)
    assert disc_pair(D, x, x) == 0
    D4 = DiscGroup((1, 1, 4))
    assert disc_pair(D4, el(D4, (0, 0), (0, 0), (2, 0)),
                     el(D4, (0, 0), (0, 0), (0, 2))) == 0


def test_order_examples():
    D4 = DiscGroup((1, 1, 4))
    assert order(D4, D4.zero()) == 1
    assert order(D4, el(D4, (0, 0), (0, 0), (2, 0))) == 2
    D = DiscGroup((1, 1, 2, 4))
    assert order(D, el(D, (0, 0), (0, 0), (1, 0), (2, 0))) == 2


def _brute_order(D, x):
    k = 1
    while D.scale(k, x) != D.zero():
        k += 1
    return k


@pytest.mark.parametrize("t", [(2, 6), (1, 3, 9), (4, 4)])
def test_order_against_repeated_addition(t):
    D = DiscGroup(t)
    for x in D.elements():
        assert order(D, x) == _brute_order(D, x)


@given(st.data())
def test_disc_pair_alternating_bilinear(data):
    D = DiscGroup(data.draw(types))
    draw = lambda: D.element([(data.draw(st.integers(0, d - 1)),
                               data.draw(st.integers(0, d - 1)))
                              for d in D.divisors])
    x, y, z = draw(), draw(), draw()
    assert disc_pair(D, x, x) == 0
    assert disc_pair(D, x, y) == (-disc_pair(D, y, x)) % 1
    assert disc_pair(D, x, D.add(y, z)) == (disc_pair(D, x, y)
                                            + disc_pair(D, x, z)) % 1


@given(st.data())
def test_disc_pair_matches_lattice_pairing(data):
    # (v*, w*) mod 1 computed in the lattice agrees with the group formula
    L, v = data.draw(lattice_and_primitive())
    w = data.draw(primitive_vectors(L))
    D = DiscGroup(L.lattice_type)
    from symeichler.lattice_core import divisor
    vs = [Fraction(c, divisor(L, v)) for c in v]
    ws = [Fraction(c, divisor(L, w)) for c in w]
    expected = pair_rational(L, vs, ws) % 1
    assert disc_pair(D, dual_class(L, v), dual_class(L, w)) == expected


def test_p_part_profile_examples():
    D = DiscGroup((1, 1, 12))
    x = el(D, (0, 0), (0, 0), (6, 0))
    p2 = p_part_profile(D, x, 2)
    assert p2.e[2] == 2 and p2.f[2] == 1 and p2.f_max == 1
    p3 = p_part_profile(D, x, 3)
    assert p3.e[2] == 1 and p3.f[2] == 0 and p3.f_max == 0
    z = p_part_profile(D, D.zero(), 5)
    assert z.f == (0, 0, 0)
    with pytest.raises(NotPrimeError):
        p_part_profile(D, x, 4)


def test_p_parts_recombine():
    # the p-components of x sum back to x
    D = DiscGroup((1, 6, 60))
    for x in list(D.elements())[::97]:
        total = D.zero()
        for p in (2, 3, 5):
            total = D.add(total, D.element(p_part_profile(D, x, p).components))
        assert total == x


def test_is_splitting_examples():
    D2 = DiscGroup((1, 1, 2))
    assert is_splitting_element(D2, el(D2, (0, 0), (0, 0), (1, 0)))
    assert is_splitting_element_oracle(D2, el(D2, (0, 0), (0, 0), (0, 1)))
    D4 = DiscGroup((1, 1, 4))
    x = el(D4, (0, 0), (0, 0), (2, 0))
    assert not is_splitting_element(D4, x)
    assert not is_splitting_element_oracle(D4, x)
    assert failing_primes(D4, x) == [2]
    D = DiscGroup((1, 1, 2, 4))
    assert is_splitting_element(D, el(D, (0, 0), (0, 0), (1, 0), (2, 0)))
    assert is_splitting_element(D, D.zero())
    assert is_splitting_element_oracle(D, D.zero())


@pytest.mark.parametrize("t", [(1, 1, 4), (1, 1, 12), (1, 2, 4), (2, 2, 4),
                               (1, 1, 2, 6), (1, 1, 3, 9), (1, 1, 8)])
def test_splitting_formula_matches_oracle(t):
    D = DiscGroup(t)
    assert D.size <= 4096
    for x in D.elements():
        assert is_splitting_element(D, x) == is_splitting_element_oracle(D, x)


def test_oracle_guard():
    D = DiscGroup((1, 1, 64, 64))
    with pytest.raises(GroupTooLargeError):
        is_splitting_element_oracle(D, D.zero())


def test_splitting_partner_examples():
    D2 = DiscGroup((1, 1, 2))
    assert splitting_partner(D2, el(D2, (0, 0), (0, 0), (1, 0))) == \
        el(D2, (0, 0), (0, 0), (0, 1))
    D6 = DiscGroup((1, 1, 6))
    y = splitting_partner(D6, el(D6, (0, 0), (0, 0), (1, 0)))
    assert y == el(D6, (0, 0), (0, 0), (0, 1))
    D4 = DiscGroup((1, 1, 4))
    with pytest.raises(NotSplittingError) as exc:
        splitting_partner(D4, el(D4, (0, 0), (0, 0), (2, 0)))
    assert list(exc.value.failing_primes) == [2]


@pytest.mark.parametrize("t", [(1, 1, 12), (1, 2, 6), (1, 1, 2, 6), (3, 3)])
def test_splitting_partner_postconditions(t):
    D = DiscGroup(t)
    for x in D.elements():
        if x == D.zero() or not is_splitting_element(D, x):
            continue
        y = splitting_partner(D, x)
        d = order(D, x)
        assert order(D, y) == d
        assert disc_pair(D, x, y) == Fraction(1, d)


def test_all_splitting_type_examples():
    assert all_splitting_type((1, 1, 2))
    assert not all_splitting_type((1, 1, 4))
    assert all_splitting_type((1, 1, 2, 6))
    assert not all_splitting_type((1, 1, 2, 4))
    with pytest.raises(HypothesisError):
        all_splitting_type((1, 2))


@pytest.mark.parametrize("t", [(1, 1, 1), (1, 1, 6), (1, 1, 9), (1, 1, 2, 2),
                               (1, 1, 2, 6), (1, 1, 3, 6), (1, 1, 2, 10)])
def test_all_splitting_type_by_enumeration(t):
    D = DiscGroup(t)
    assert all_splitting_type(t) == all(is_splitting_element(D, x)
                                        for x in D.elements())
