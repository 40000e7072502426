"""The discriminant group ``D = L^dual / L`` and its splitting elements.

For a lattice of type ``(d1, ..., dg)`` an element of ``D`` is a tuple of
residue pairs ``(alpha_i, beta_i)`` modulo ``d_i``, the class of
``sum alpha_i e_i/d_i + beta_i f_i/d_i``.  Pairing values live in Q/Z and
are represented as Fractions in ``[0, 1)``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import gcd

import numpy as np

from ._arith import (is_prime, is_squarefree, lcm_all, prime_factors,
                     valuation, xgcd)
from .errors import (DimensionError, GroupTooLargeError, HypothesisError,
                     NotPrimeError, NotSplittingError, VerificationError)
from .lattice_core import LatticeType

ORACLE_GUARD = 2 ** 20


def qmodz(x) -> Fraction:
    """Reduce a rational number into ``[0, 1)``."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class DiscElement:
    residues: tuple

    def __post_init__(self):
        object.__setattr__(self, "residues",
                           tuple((int(a), int(b)) for a, b in self.residues))

    def __iter__(self):
        return iter(self.residues)


@dataclass(frozen=True)
class DiscGroup:
    lattice_type: LatticeType

    def __post_init__(self):
        if not isinstance(self.lattice_type, LatticeType):
            object.__setattr__(self, "lattice_type",
                               LatticeType(tuple(self.lattice_type)))

    @property
    def divisors(self):
        return self.lattice_type.divisors

    @property
    def size(self) -> int:
        n = 1
        for d in self.divisors:
            n *= d * d
        return n

    @property
    def exponent(self) -> int:
        return self.divisors[-1]

    def element(self, residues) -> DiscElement:
        """Build an element, reducing each residue into ``[0, d_i)``."""
        residues = list(residues)
        if len(residues) != len(self.divisors):
            raise DimensionError(
                f"{len(residues)} residue pairs for g = {len(self.divisors)}")
        return DiscElement(tuple((a % d, b % d)
                                 for (a, b), d in zip(residues, self.divisors)))

    def zero(self) -> DiscElement:
        return DiscElement(tuple((0, 0) for _ in self.divisors))

    def add(self, x, y) -> DiscElement:
        return self.element((a + c, b + e) for (a, b), (c, e) in zip(x, y))

    def scale(self, k: int, x) -> DiscElement:
        return self.element((k * a, k * b) for a, b in x)

    def elements(self):
        """All elements, in lexicographic order of the residue tuple."""
        ranges = [range(d) for d in self.divisors for _ in range(2)]
        for flat in product(*ranges):
            yield DiscElement(tuple(zip(flat[::2], flat[1::2])))

    def check(self, x) -> DiscElement:
        if not isinstance(x, DiscElement):
            x = DiscElement(tuple(x))
        if len(x.residues) != len(self.divisors):
            raise DimensionError("element does not belong to this group")
        for (a, b), d in zip(x, self.divisors):
            if not (0 <= a < d and 0 <= b < d):
                raise DimensionError(f"residues {(a, b)} not reduced mod {d}")
        return x

    @cached_property
    def _table(self):
        # every element as a row of 2g residues, plus its order
        ranges = [np.arange(d) for d in self.divisors for _ in range(2)]
        grids = np.meshgrid(*ranges, indexing="ij")
        flat = np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)
        dvec = np.repeat(np.array(self.divisors, dtype=np.int64), 2)
        comp = np.gcd(np.gcd(flat[:, 0::2], flat[:, 1::2]), dvec[0::2])
        orders = np.lcm.reduce(dvec[0::2] // comp, axis=1)
        return flat, orders


def disc_pair(D: DiscGroup, x, y) -> Fraction:
    x, y = D.check(x), D.check(y)
    total = sum(Fraction(a * bb - b * aa, d)
                for (a, b), (aa, bb), d in zip(x, y, D.divisors))
    return qmodz(total)


def order(D: DiscGroup, x) -> int:
    x = D.check(x)
    return lcm_all(d // gcd(d, a, b) for (a, b), d in zip(x, D.divisors))


@dataclass(frozen=True)
class PPartProfile:
    """p-primary data of an element.

    ``e[i]`` is the p-adic valuation of ``d_i``, ``f[i]`` the exponent of
    the order of the i-th p-component ``components[i]`` (residues modulo
    ``d_i`` lying in the p-primary part), ``f_max`` the exponent of the
    order of the whole p-component.
    """

    p: int
    e: tuple
    f: tuple
    f_max: int
    components: tuple


def _primary_idempotent(d: int, p: int) -> int:
    # eps = 1 mod p^e, 0 mod d/p^e
    pe = p ** valuation(d, p)
    m = d // pe
    _, s, t = xgcd(pe, m)
    return (t * m) % d


def p_part_profile(D: DiscGroup, x, p: int) -> PPartProfile:
    x = D.check(x)
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    es, fs, comps = [], [], []
    for (a, b), d in zip(x, D.divisors):
        e = valuation(d, p)
        eps = _primary_idempotent(d, p)
        pa, pb = (eps * a) % d, (eps * b) % d
        ordr = d // gcd(d, pa, pb)
        f = valuation(ordr, p) if ordr > 1 else 0
        assert p ** f == ordr
        es.append(e)
        fs.append(f)
        comps.append((pa, pb))
    return PPartProfile(p, tuple(es), tuple(fs), max(fs), tuple(comps))


def failing_primes(D: DiscGroup, x):
    """Primes p dividing ord(x) whose p-component fails the splitting test."""
    bad = []
    for p in prime_factors(order(D, x)):
        prof = p_part_profile(D, x, p)
        if not any(f == prof.f_max and f == e for f, e in zip(prof.f, prof.e)):
            bad.append(p)
    return bad


def is_splitting_element(D: DiscGroup, x) -> bool:
    """Splitting test through the p-part profiles.

    The zero element counts as splitting (order 1, trivial subgroup).
    """
    return not failing_primes(D, x)


def is_splitting_element_oracle(D: DiscGroup, x, guard: int = ORACLE_GUARD) -> bool:
    """Exhaustive search for ``y`` with ``ord(y) = ord(x) = d`` and
    ``(x, y) = 1/d``."""
    x = D.check(x)
    if D.size > guard:
        raise GroupTooLargeError(f"|D| = {D.size} exceeds the guard {guard}")
    d = order(D, x)
    if d == 1:
        return True
    flat, orders = D._table
    N = D.exponent
    xa = np.array([a for a, _ in x], dtype=np.int64)
    xb = np.array([b for _, b in x], dtype=np.int64)
    w = N // np.array(D.divisors, dtype=np.int64)
    # N * (x, y) modulo N
    num = ((xa * flat[:, 1::2] - xb * flat[:, 0::2]) * w).sum(axis=1) % N
    hit = (orders == d) & (num == N // d)
    return bool(hit.any())


def splitting_partner(D: DiscGroup, x) -> DiscElement:
    """An element ``y`` with ``ord(y) = ord(x) = d`` and ``(x, y) = 1/d``."""
    x = D.check(x)
    d = order(D, x)
    if d == 1:
        raise NotSplittingError("the zero element has no partner of order > 1")
    bad = failing_primes(D, x)
    if bad:
        raise NotSplittingError(
            f"element is not splitting at primes {bad}", failing_primes=bad)
    y = D.zero()
    for p in prime_factors(d):
        prof = p_part_profile(D, x, p)
        i = next(i for i, (f, e) in enumerate(zip(prof.f, prof.e))
                 if f == prof.f_max == e)
        q = p ** prof.f_max
        di = D.divisors[i]
        a, b = x.residues[i][0] % q, x.residues[i][1] % q
        # a*delta - b*gamma = 1 mod q; one of a, b is a unit since ord = q
        if a % p:
            delta, gamma = pow(a, -1, q), 0
        else:
            delta, gamma = 0, -pow(b, -1, q)
        m = di // q
        block = [(0, 0)] * len(D.divisors)
        block[i] = (gamma * m, delta * m)
        y = D.add(y, D.element(block))
    k = disc_pair(D, x, y) * d
    assert k.denominator == 1 and gcd(int(k), d) == 1
    y = D.scale(pow(int(k), -1, d), y)
    if order(D, y) != d or disc_pair(D, x, y) != Fraction(1, d):
        raise VerificationError("splitting_partner postcondition failed")
    return y


def all_splitting_type(t) -> bool:
    """Whether every element of the discriminant group is splitting, read
    off the type: ``d3, d4/d3, ..., dg/d(g-1)`` square-free and pairwise
    coprime."""
    if not isinstance(t, LatticeType):
        t = LatticeType(tuple(t))
    ds = t.divisors
    if len(ds) < 2 or ds[0] != 1 or ds[1] != 1:
        raise HypothesisError(f"type {t} does not satisfy d1 = d2 = 1")
    quotients = [b // a for a, b in zip(ds[1:], ds[2:])]
    if not all(is_squarefree(q) for q in quotients):
        return False
    return all(gcd(a, b) == 1 for i, a in enumerate(quotients)
               for b in quotients[i + 1:])
