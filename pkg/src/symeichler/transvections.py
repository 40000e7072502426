"""Transvections and verified isometries of the congruence subgroup.

The congruence subgroup is the kernel of ``Sp(L) -> Sp(D)``: integer
isometries that fix every class of ``L^dual / L``.  A :class:`Witness` is an
integer matrix known to lie in it, together with the factors it was built
from.  Witnesses re-check both properties whenever they are created.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (DimensionError, NotIntegralError, NotIsotropicError,
                     VerificationError)
from .intmat import (as_matrix, det, from_columns, identity, matmul, matvec,
                     transpose)
from .lattice_core import (Lattice, is_isometry, pair_rational,
                           pairings_with_basis)


def _rational(v):
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class Transvection:
    """``T(v) = v + (l, v) m + (m, v) l`` for ``(l, m) = 0``."""

    lattice: Lattice
    l: tuple
    m: tuple

    def __post_init__(self):
        l, m = _rational(self.l), _rational(self.m)
        if len(l) != self.lattice.rank or len(m) != self.lattice.rank:
            raise DimensionError("transvection vectors have the wrong length")
        if pair_rational(self.lattice, l, m) != 0:
            raise NotIsotropicError(f"(l, m) = {pair_rational(self.lattice, l, m)} != 0")
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "m", m)

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for x in self.l + self.m)

    def inverse(self) -> "Transvection":
        # the nilpotent part squares to zero, so T_{l,-m} undoes T_{l,m}
        return Transvection(self.lattice, self.l, tuple(-x for x in self.m))

    def apply_rational(self, v):
        L = self.lattice
        v = _rational(v)
        lv = pair_rational(L, self.l, v)
        mv = pair_rational(L, self.m, v)
        return tuple(x + lv * b + mv * a for x, a, b in zip(v, self.l, self.m))

    def matrix(self):
        L = self.lattice
        if self.integral:
            l = tuple(int(x) for x in self.l)
            m = tuple(int(x) for x in self.m)
            # column j is b_j + (l, b_j) m + (m, b_j) l
            pl, pm = pairings_with_basis(L, l), pairings_with_basis(L, m)
            return tuple(
                tuple(int(i == j) + pl[j] * m[i] + pm[j] * l[i]
                      for j in range(L.rank))
                for i in range(L.rank))
        cols = [self.apply_rational(L.basis(j)) for j in range(L.rank)]
        if any(x.denominator != 1 for c in cols for x in c):
            raise NotIntegralError("transvection matrix is not integral")
        return from_columns([tuple(int(x) for x in c) for c in cols])


def apply_transvection(T: Transvection, v):
    v = T.lattice.check_vector(v)
    out = T.apply_rational(v)
    if any(x.denominator != 1 for x in out):
        raise NotIntegralError("transvection image is not a lattice vector")
    return tuple(int(x) for x in out)


def is_symplectic(L: Lattice, M) -> bool:
    return is_isometry(L, M)


def acts_trivially_on_discriminant(L: Lattice, M) -> bool:
    """``M u - u`` is integral for every dual generator ``u = b_j / d_j``,
    i.e. column ``j`` of ``M - I`` is divisible by ``d_j``."""
    for j, d in enumerate(L.coordinate_divisors):
        if d == 1:
            continue
        for i in range(L.rank):
            if (M[i][j] - (i == j)) % d:
                return False
    return True


def verify_gamma_membership(L: Lattice, M) -> bool:
    M = as_matrix(M)
    if len(M) != L.rank or any(len(r) != L.rank for r in M):
        raise DimensionError(f"expected a {L.rank}x{L.rank} matrix")
    return is_symplectic(L, M) and acts_trivially_on_discriminant(L, M)


@dataclass(frozen=True)
class Witness:
    """A verified element of the congruence subgroup.

    ``factors`` are Transvections or explicit integer matrices, written in
    the order of the matrix product (the last factor acts first).
    """

    lattice: Lattice
    matrix: tuple
    factors: tuple = field(default=())

    def __post_init__(self):
        M = as_matrix(self.matrix)
        object.__setattr__(self, "matrix", M)
        object.__setattr__(self, "factors", tuple(self.factors))
        L = self.lattice
        if len(M) != L.rank or any(len(r) != L.rank for r in M):
            raise DimensionError(f"expected a {L.rank}x{L.rank} matrix")
        if not is_symplectic(L, M):
            raise VerificationError("witness matrix is not an isometry")
        if not acts_trivially_on_discriminant(L, M):
            raise VerificationError("witness matrix moves a discriminant class")

    def __call__(self, v):
        return matvec(self.matrix, self.lattice.check_vector(v))

    def __matmul__(self, other):
        return compose(self, other)


def identity_witness(L: Lattice) -> Witness:
    return Witness(L, identity(L.rank), ())


def matrix_witness(L: Lattice, M) -> Witness:
    """Single explicit-matrix factor; raises if M is not in the subgroup."""
    M = as_matrix(M)
    return Witness(L, M, (M,))


def transvection_matrix(T: Transvection) -> Witness:
    return Witness(T.lattice, T.matrix(), (T,))


def transvection(L: Lattice, l, m) -> Witness:
    return transvection_matrix(Transvection(L, l, m))


def compose(a: Witness, b: Witness) -> Witness:
    """``a * b`` (apply ``b`` first)."""
    if a.lattice != b.lattice:
        raise DimensionError("witnesses live on different lattices")
    return Witness(a.lattice, matmul(a.matrix, b.matrix), a.factors + b.factors)


def compose_all(L: Lattice, witnesses) -> Witness:
    """Product ``w[0] * w[1] * ...``."""
    out = identity_witness(L)
    for w in witnesses:
        out = compose(out, w)
    return out


def _invert_factor(L, f):
    if isinstance(f, Transvection):
        return f.inverse()
    return symplectic_inverse(L, f)


def symplectic_inverse(L: Lattice, M):
    """``J^-1 M^T J`` for an isometry ``M``; exact and integral."""
    A = matmul(transpose(M), L.gram)
    out = []
    for i, d in enumerate(L.divisors):
        # rows of J^-1 A: -A[2i+1] / d and A[2i] / d
        for row, sign in ((A[2 * i + 1], -1), (A[2 * i], 1)):
            if any(x % d for x in row):
                raise VerificationError("matrix is not an integral isometry")
            out.append(tuple(sign * x // d for x in row))
    return tuple(out)


def inverse(a: Witness) -> Witness:
    Minv = symplectic_inverse(a.lattice, a.matrix)
    factors = tuple(_invert_factor(a.lattice, f) for f in reversed(a.factors))
    return Witness(a.lattice, Minv, factors)


def witness_det(a: Witness) -> int:
    return det(a.matrix)
