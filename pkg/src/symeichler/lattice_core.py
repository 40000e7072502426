"""Symplectic lattices in canonical coordinates.

A lattice of type ``(d1, ..., dg)`` is ``U(d1) + ... + U(dg)`` with basis
ordered ``(e1, f1, ..., eg, fg)`` and ``(ei, fi) = di``.  Vectors are tuples
of ``2g`` Python ints in that basis.
"""

from dataclasses import dataclass
from functools import cached_property

from ._arith import bezout, content
from .errors import (DimensionError, DivisorChainError, HypothesisError,
                     NotAlternatingError, NotPrimitiveError,
                     SingularGramError, ZeroVectorError)
from .intmat import (as_matrix, from_columns, identity, kernel_basis,
                     matmul, matvec, transpose)


@dataclass(frozen=True)
class LatticeType:
    """Divisor chain ``(d1, ..., dg)`` with ``d_i | d_{i+1}``."""

    divisors: tuple

    def __post_init__(self):
        ds = tuple(int(d) for d in self.divisors)
        object.__setattr__(self, "divisors", ds)
        if not ds:
            raise DivisorChainError("a lattice type needs g >= 1 divisors")
        if any(d < 1 for d in ds):
            raise DivisorChainError(f"non-positive divisor in {ds}")
        for a, b in zip(ds, ds[1:]):
            if b % a:
                raise DivisorChainError(
                    f"divisor chain violation: {a} does not divide {b}")

    @property
    def g(self) -> int:
        return len(self.divisors)

    @property
    def rank(self) -> int:
        return 2 * len(self.divisors)

    def __iter__(self):
        return iter(self.divisors)

    def __str__(self):
        return "(" + ",".join(map(str, self.divisors)) + ")"


@dataclass(frozen=True)
class Lattice:
    lattice_type: LatticeType
    gram: tuple

    @property
    def divisors(self):
        return self.lattice_type.divisors

    @property
    def g(self) -> int:
        return self.lattice_type.g

    @property
    def rank(self) -> int:
        return self.lattice_type.rank

    def basis(self, j: int):
        """The j-th standard basis vector (0-based, e1 = 0, f1 = 1, ...)."""
        return tuple(int(i == j) for i in range(self.rank))

    def e(self, i: int):
        """``e_i`` with the 1-based block index used in the literature."""
        return self.basis(2 * (i - 1))

    def f(self, i: int):
        return self.basis(2 * (i - 1) + 1)

    @cached_property
    def coordinate_divisors(self):
        """``d`` of the block owning each coordinate."""
        return tuple(d for d in self.divisors for _ in range(2))

    def check_vector(self, v):
        v = tuple(int(x) for x in v)
        if len(v) != self.rank:
            raise DimensionError(
                f"vector of length {len(v)} in a lattice of rank {self.rank}")
        return v


def make_lattice(t) -> Lattice:
    """Canonical lattice of the given type (a LatticeType or a sequence)."""
    if not isinstance(t, LatticeType):
        t = LatticeType(tuple(t))
    n = t.rank
    J = [[0] * n for _ in range(n)]
    for i, d in enumerate(t.divisors):
        J[2 * i][2 * i + 1] = d
        J[2 * i + 1][2 * i] = -d
    return Lattice(t, as_matrix(J))


def pair(L: Lattice, u, v) -> int:
    """``(u, v) = sum_i d_i (a_i b'_i - b_i a'_i)``."""
    u = L.check_vector(u)
    v = L.check_vector(v)
    return sum(d * (u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i])
               for i, d in enumerate(L.divisors))


def pair_rational(L: Lattice, u, v):
    """Same formula, for vectors with Fraction (or int) coordinates."""
    if len(u) != L.rank or len(v) != L.rank:
        raise DimensionError("vector length does not match the lattice")
    return sum(d * (u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i])
               for i, d in enumerate(L.divisors))


def pairings_with_basis(L: Lattice, v):
    """``[(v, b_j) for b_j in the standard basis]``."""
    v = L.check_vector(v)
    out = []
    for i, d in enumerate(L.divisors):
        a, b = v[2 * i], v[2 * i + 1]
        out += [-d * b, d * a]
    return out


def _nonzero(L, v):
    v = L.check_vector(v)
    if not any(v):
        raise ZeroVectorError("the zero vector has no divisor or class")
    return v


def is_primitive(L: Lattice, v) -> bool:
    v = _nonzero(L, v)
    return content(v) == 1


def divisor(L: Lattice, v) -> int:
    """Positive generator of the pairing ideal ``(v, L)``."""
    v = _nonzero(L, v)
    return content(pairings_with_basis(L, v))


def dual_class(L: Lattice, v):
    """Class of ``v / div(v)`` in the discriminant group."""
    from .discriminant import DiscElement

    v = _nonzero(L, v)
    if content(v) != 1:
        raise NotPrimitiveError(f"{v} is not primitive")
    d = divisor(L, v)
    residues = []
    for i, di in enumerate(L.divisors):
        a, b = v[2 * i] * di, v[2 * i + 1] * di
        assert a % d == 0 and b % d == 0
        residues.append(((a // d) % di, (b // d) % di))
    return DiscElement(tuple(residues))


def gram_of(L: Lattice, vectors):
    return tuple(tuple(pair(L, u, w) for w in vectors) for u in vectors)


def is_isometry(L: Lattice, M) -> bool:
    return matmul(matmul(transpose(M), L.gram), M) == L.gram


# --- normalization of arbitrary alternating Gram matrices ------------------

def _validate_gram(G):
    G = as_matrix(G)
    n = len(G)
    if any(len(row) != n for row in G):
        raise DimensionError("Gram matrix must be square")
    if n == 0 or n % 2:
        raise DimensionError(f"Gram matrix dimension {n} is not even and positive")
    for i in range(n):
        if G[i][i] != 0:
            raise NotAlternatingError(f"diagonal entry ({i},{i}) is nonzero")
        for j in range(i + 1, n):
            if G[i][j] != -G[j][i]:
                raise NotAlternatingError(f"entries ({i},{j}) and ({j},{i}) "
                                          "are not negatives of each other")
    return G


def normalize_gram(G):
    """Bring an alternating Gram matrix to canonical block form.

    Returns ``(t, P)`` with ``P^T G P == make_lattice(t).gram`` and
    ``det P == +-1``.  The columns of ``P`` are the new basis vectors in
    the old coordinates.
    """
    G = _validate_gram(G)
    n = len(G)
    A = [list(row) for row in G]
    P = [list(row) for row in identity(n)]

    def swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in P:
            row[i], row[j] = row[j], row[i]

    def negate(i):
        A[i] = [-x for x in A[i]]
        for row in A:
            row[i] = -row[i]
        for row in P:
            row[i] = -row[i]

    def add(target, source, q):
        # basis vector b_target += q * b_source
        if q == 0:
            return
        A[target] = [x + q * y for x, y in zip(A[target], A[source])]
        for row in A:
            row[target] += q * row[source]
        for row in P:
            row[target] += q * row[source]

    divisors = []
    for k in range(0, n, 2):
        while True:
            best = None
            for i in range(k, n):
                for j in range(k, n):
                    x = abs(A[i][j])
                    if x and (best is None or x < best[0]):
                        best = (x, i, j)
            if best is None:
                raise SingularGramError("Gram matrix is degenerate")
            _, i, j = best
            # ties go to the lexicographically first position, hence i < j
            swap(k, i)
            swap(k + 1, j)
            if A[k][k + 1] < 0:
                negate(k + 1)
            p = A[k][k + 1]
            clean = True
            for l in range(k + 2, n):
                add(l, k + 1, -(A[k][l] // p))
                add(l, k, A[k + 1][l] // p)
                if A[k][l] or A[k + 1][l]:
                    clean = False
            if not clean:
                continue
            bad = next(((r, s) for r in range(k + 2, n) for s in range(k + 2, n)
                        if A[r][s] % p), None)
            if bad is None:
                break
            # merge: e_k += b_r brings the offending entry into the pivot row
            add(k, bad[0], 1)
        divisors.append(A[k][k + 1])

    t = LatticeType(tuple(divisors))
    P = as_matrix(P)
    if matmul(matmul(transpose(P), G), P) != make_lattice(t).gram:
        raise AssertionError("normalize_gram produced a wrong basis change")
    return t, P


# --- hyperbolic plane moves inside U1 + U2 ---------------------------------

def _require_two_unimodular(L: Lattice):
    if L.g < 2 or L.divisors[0] != 1 or L.divisors[1] != 1:
        raise HypothesisError(
            f"type {L.lattice_type} does not satisfy d1 = d2 = 1")


def plane_swap(L: Lattice):
    """Isometry exchanging the first two hyperbolic planes."""
    _require_two_unimodular(L)
    perm = [2, 3, 0, 1] + list(range(4, L.rank))
    return from_columns([L.basis(perm[j]) for j in range(L.rank)])


def symplectic_complete(L: Lattice, v):
    """Isometry of ``U1 + U2`` (identity elsewhere) moving ``v`` into ``U2``.

    ``v`` must be supported on the first four coordinates and primitive
    there.  Returns the matrix ``M`` with ``M v == e2``, except that a
    vector already in ``U2`` gets the identity and a vector in ``U1`` gets
    the plane swap.
    """
    _require_two_unimodular(L)
    v = L.check_vector(v)
    if any(v[4:]):
        raise HypothesisError("vector must lie in U1 + U2")
    if content(v[:4]) != 1:
        raise NotPrimitiveError(f"{v[:4]} is not primitive in U1 + U2")
    n = L.rank
    if not any(v[:2]):
        return identity(n)
    if not any(v[2:4]):
        return plane_swap(L)

    J4 = ((0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0))
    x = v[:4]
    # u with (x, u) = 1
    coeffs = [sum(x[r] * J4[r][c] for r in range(4)) for c in range(4)]
    g, bz = bezout(coeffs)
    assert g == 1
    u = tuple(bz)
    # orthogonal complement of the hyperbolic pair (x, u)
    constraint = [[sum(y[r] * J4[r][c] for r in range(4)) for c in range(4)]
                  for y in (x, u)]
    c1, c2 = kernel_basis(constraint, 4)
    if sum(c1[r] * J4[r][c] * c2[c] for r in range(4) for c in range(4)) < 0:
        c2 = tuple(-a for a in c2)
    # B sends the standard symplectic basis to (c1, c2, x, u)
    B = from_columns([c1, c2, x, u])
    # B^-1 = J4^-1 B^T J4 = -J4 B^T J4
    Binv = matmul(matmul(J4, transpose(B)), J4)
    Binv = tuple(tuple(-a for a in row) for row in Binv)
    M = [list(row) for row in identity(n)]
    for r in range(4):
        for c in range(4):
            M[r][c] = Binv[r][c]
    M = as_matrix(M)
    assert is_isometry(L, M) and matvec(M, v) == L.e(2)
    return M
