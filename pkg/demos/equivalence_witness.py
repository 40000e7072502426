"""Build an explicit isometry between two vectors of the same class and
check it by hand."""

import random

from symeichler import dual_class, equivalence_witness, make_lattice
from symeichler.acceptance import random_witness
from symeichler.errors import ClassMismatchError
from symeichler.intmat import matmul, transpose

L = make_lattice((1, 1, 2, 6))
v = (0, 0, 0, 0, 1, 0, 3, 0)
# scramble v by a random product of transvections; the class cannot change
w = random_witness(L, random.Random(3), max_factors=3, bound=1)(v)
print("v =", v, " w =", w)
print("class of both:", dual_class(L, v).residues, dual_class(L, w).residues)

res = equivalence_witness(L, v, w)
M = res.witness.matrix

print("gamma =")
for row in M:
    print("  ", " ".join(f"{c:>5}" for c in row))
print("gamma(v) =", res.witness(v))
print("preserves the form:", matmul(matmul(transpose(M), L.gram), M) == L.gram)
print("number of factors:", len(res.witness.factors))

# a vector of another class is refused
try:
    equivalence_witness(L, v, L.e(3))
except ClassMismatchError as exc:
    print(type(exc).__name__, "-", exc)
