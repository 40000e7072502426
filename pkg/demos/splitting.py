"""Which primitive vectors split off a hyperbolic plane U(d)?

In U + U + U(4) the class of 2e1 + e3 has order 2 but lives in a Z/4
block, so no partner exists.  In U + U + U(2) + U(6) every class splits.
"""

from symeichler import DiscGroup, make_lattice, splitting_witness
from symeichler.errors import NotSplittingError
from symeichler.discriminant import all_splitting_type
from symeichler.oracle import splitting_bruteforce

L = make_lattice((1, 1, 4))
v = (2, 0, 0, 0, 1, 0)
try:
    splitting_witness(L, v)
except NotSplittingError as exc:
    print("no partner for", v, "- failing primes", exc.failing_primes)
print("brute force up to 8:", splitting_bruteforce(L, v, 8))

L = make_lattice((1, 1, 2, 6))
v = (6, 0, 0, 0, 1, 0, 1, 1)
s = splitting_witness(L, v)
print("partner of", v, "is", s.partner)
print("complement type", s.complement_type.divisors)
for b in s.complement_basis:
    print("  ", b)

for t in [(1, 1, 2), (1, 1, 4), (1, 1, 2, 6), (1, 1, 2, 4), (1, 1, 6, 6)]:
    D = DiscGroup(t)
    print(t, "every class splits:", all_splitting_type(t), f"(|D| = {D.size})")
