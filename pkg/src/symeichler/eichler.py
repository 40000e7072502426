"""Constructive classification of primitive vectors.

For lattices of type ``(1, 1, d3, ..., dg)`` two primitive vectors are
equivalent under the congruence subgroup exactly when their classes
``[v / div(v)]`` agree, and every class is attained.  The functions here
build the vectors and the isometries explicitly, and every returned object
is checked before it leaves the module.

Conventions: ``e1, f1`` span the first hyperbolic plane ``U1``, and
``L'`` is the orthogonal complement of ``U1`` (coordinates 2 onwards).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from ._arith import bezout, content
from .discriminant import (DiscGroup, failing_primes, order,
                           splitting_partner)
from .errors import (ClassMismatchError, DimensionError, HypothesisError,
                     NotPrimitiveError, NotSplittingError, VerificationError)
from .intmat import det, from_columns, identity, kernel_basis
from .lattice_core import (Lattice, LatticeType, divisor, dual_class,
                           gram_of, is_primitive, make_lattice,
                           normalize_gram, pair, pairings_with_basis,
                           symplectic_complete)
from .transvections import (Witness, compose_all, identity_witness, inverse,
                            matrix_witness, transvection)


@dataclass(frozen=True)
class EquivalenceResult:
    witness: Witness
    check: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SplitResult:
    """``L = <v, partner> + complement`` with ``<v, partner> = U(summand_type)``.

    ``complement_basis`` is already in canonical form for
    ``complement_type`` (None when the lattice has rank 2).
    """

    partner: tuple
    summand_type: int
    complement_basis: tuple
    complement_type: LatticeType = None


def _require_d1(L: Lattice):
    if L.divisors[0] != 1:
        raise HypothesisError(f"type {L.lattice_type} does not satisfy d1 = 1")


def _require_d1_d2(L: Lattice):
    if L.g < 2 or L.divisors[0] != 1 or L.divisors[1] != 1:
        raise HypothesisError(
            f"type {L.lattice_type} does not satisfy d1 = d2 = 1")


def _require_primitive(L: Lattice, v):
    v = L.check_vector(v)
    if not is_primitive(L, v):
        raise NotPrimitiveError(f"{v} is not primitive")
    return v


def _lift_to_dual(L: Lattice, x):
    """Representative of ``x`` in ``(L')^dual`` with coordinates
    ``alpha_i / d_i, beta_i / d_i`` taken from residues in ``[0, d_i)``."""
    coords = []
    for i, ((a, b), d) in enumerate(zip(x, L.divisors)):
        if i == 0:
            coords += [Fraction(0), Fraction(0)]
        else:
            coords += [Fraction(a, d), Fraction(b, d)]
    return coords


def _integral(coords):
    if any(c.denominator != 1 for c in coords):
        raise VerificationError("expected an integral vector")
    return tuple(int(c) for c in coords)


def construct_primitive_from_class(L: Lattice, x):
    """Primitive ``v = d e1 + d w`` whose class is ``x``, ``d = ord(x)``."""
    _require_d1(L)
    D = DiscGroup(L.lattice_type)
    x = D.check(x)
    d = order(D, x)
    w = _lift_to_dual(L, x)
    v = list(_integral([d * c for c in w]))
    v[0] += d
    v = tuple(v)
    if not (is_primitive(L, v) and divisor(L, v) == d and dual_class(L, v) == x):
        raise VerificationError(f"construction for {x} failed its checks")
    return v


def save_U(L: Lattice, v):
    """Move ``v`` off the first hyperbolic plane.

    Returns ``(gamma, gamma(v))`` with ``gamma`` acting on ``U1 + U2`` only
    and ``gamma(v)`` having zero ``U1`` coordinates.
    """
    _require_d1_d2(L)
    v = L.check_vector(v)
    head = v[:4]
    if not any(head[:2]):
        return identity_witness(L), v
    alpha = content(head)
    prim = tuple(c // alpha for c in head) + (0,) * (L.rank - 4)
    W = matrix_witness(L, symplectic_complete(L, prim))
    image = W(v)
    if any(image[:2]):
        raise VerificationError("save_U left a U1 component")
    return W, image


def _pairing_partner(L: Lattice, vt, d):
    """``v' in L'`` with ``(v', vt) = d``, by Bezout over basis pairings."""
    # (b_j, vt) = -(vt, b_j)
    cs = [-c for c in pairings_with_basis(L, vt)[2:]]
    g, coeffs = bezout(cs)
    if g != d:
        raise VerificationError(f"pairings of {vt} with L' have gcd {g}, not {d}")
    vp = (0, 0) + tuple(coeffs)
    assert pair(L, vp, vt) == d
    return vp


def _shear(L: Lattice, alpha):
    """``e1 -> e1 - alpha f1``, identity elsewhere."""
    M = [list(r) for r in identity(L.rank)]
    M[1][0] = -alpha
    return matrix_witness(L, M)


def equivalence_witness(L: Lattice, v, w) -> EquivalenceResult:
    """Isometry ``gamma`` in the congruence subgroup with ``gamma(v) = w``.

    Raises :class:`ClassMismatchError` when the classes differ, in which
    case no such isometry exists.
    """
    _require_d1_d2(L)
    v = _require_primitive(L, v)
    w = _require_primitive(L, w)
    xv, xw = dual_class(L, v), dual_class(L, w)
    if xv != xw:
        raise ClassMismatchError(f"classes differ: {xv.residues} vs {xw.residues}")
    d = divisor(L, v)
    e1, f1 = L.e(1), L.f(1)

    ga, vt = save_U(L, v)
    gb, wt = save_U(L, w)
    # v~ -> v~ + d e1 and w~ -> w~ + d e1
    g1 = transvection(L, e1, _pairing_partner(L, vt, d))
    g2 = transvection(L, e1, _pairing_partner(L, wt, d))
    # v~ + d e1 -> w~ + d e1 + d alpha f1
    z = tuple((a - b) // d for a, b in zip(vt, wt))
    if any((a - b) % d for a, b in zip(vt, wt)):
        raise VerificationError("equal classes but (v - w)/d is not integral")
    g3 = transvection(L, f1, z)
    vw = pair(L, wt, vt)
    if vw % (d * d):
        raise VerificationError(f"d^2 = {d * d} does not divide (w, v) = {vw}")
    alpha = -vw // (d * d)
    g4 = _shear(L, alpha)

    gamma = compose_all(L, [inverse(compose_all(L, [g2, gb])), g4, g3, g1, ga])
    check = {
        "symplectic": True,  # enforced by Witness
        "trivial_on_discriminant": True,
        "maps_v_to_w": gamma(v) == w,
    }
    if not check["maps_v_to_w"]:
        raise VerificationError("assembled witness does not map v to w")
    return EquivalenceResult(gamma, check)


def split_lattice(L: Lattice, v, w) -> SplitResult:
    """Decompose ``L = <v, w> + <v, w>^perp``."""
    v = _require_primitive(L, v)
    w = _require_primitive(L, w)
    d = divisor(L, v)
    if divisor(L, w) != d or pair(L, v, w) != d:
        raise HypothesisError(
            "need (v, w) = div(v) = div(w); got "
            f"(v, w) = {pair(L, v, w)}, div = {d}, {divisor(L, w)}")
    comp = kernel_basis([pairings_with_basis(L, v), pairings_with_basis(L, w)],
                        L.rank)
    if abs(det(from_columns([v, w] + comp))) != 1:
        raise VerificationError("<v, w> and its complement do not span L")
    if not comp:
        return SplitResult(w, d, (), None)
    ctype, P = normalize_gram(gram_of(L, comp))
    basis = tuple(
        tuple(sum(P[j][k] * comp[j][r] for j in range(len(comp)))
              for r in range(L.rank))
        for k in range(len(comp)))
    if gram_of(L, basis) != make_lattice(ctype).gram:
        raise VerificationError("complement basis is not canonical")
    return SplitResult(w, d, basis, ctype)


def splitting_witness(L: Lattice, v) -> SplitResult:
    """Find ``w`` with ``(v, w) = div(w) = div(v)`` and split ``L`` along
    ``<v, w>``; raises :class:`NotSplittingError` when ``[v*]`` is not a
    splitting element."""
    _require_d1_d2(L)
    v = _require_primitive(L, v)
    D = DiscGroup(L.lattice_type)
    x = dual_class(L, v)
    bad = failing_primes(D, x)
    if bad:
        raise NotSplittingError(
            f"class {x.residues} is not splitting at primes {bad}", bad)
    d = divisor(L, v)

    ga, vt = save_U(L, v)
    gb = transvection(L, L.f(1), _pairing_partner(L, vt, d))
    y = D.zero() if d == 1 else splitting_partner(D, x)
    dw = _integral([d * c for c in _lift_to_dual(L, y)])
    r = pair(L, vt, dw) - d
    if r % (d * d):
        raise VerificationError("(v, d w') is not d mod d^2")
    alpha = r // (d * d)
    wt = list(dw)
    wt[0] += alpha * d
    gamma = compose_all(L, [gb, ga])
    w = inverse(gamma)(tuple(wt))
    if pair(L, v, w) != d or divisor(L, w) != d:
        raise VerificationError("splitting partner failed its checks")
    return split_lattice(L, v, w)
