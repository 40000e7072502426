"""Small integer helpers shared by the modules."""

from functools import reduce
from math import gcd, lcm

from sympy import factorint
from sympy import isprime as _isprime


def content(values) -> int:
    """gcd of all entries (0 for an all-zero sequence)."""
    return reduce(gcd, (abs(x) for x in values), 0)


def xgcd(a: int, b: int):
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def bezout(values):
    """Bezout coefficients for a whole sequence.

    Returns ``(g, coeffs)`` with ``sum(c * v) == g == gcd(values)``.  The
    coefficients are accumulated left to right, so the choice is
    deterministic.
    """
    g = 0
    coeffs = []
    for v in values:
        g_new, s, t = xgcd(g, v)
        coeffs = [c * s for c in coeffs]
        coeffs.append(t)
        g = g_new
    return g, coeffs


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    n = abs(n)
    if n == 0:
        raise ValueError("valuation of 0")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def prime_factors(n: int):
    return sorted(factorint(n))


def is_prime(n: int) -> bool:
    return n >= 2 and bool(_isprime(n))


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(n).values())


def lcm_all(values) -> int:
    return reduce(lcm, values, 1)
