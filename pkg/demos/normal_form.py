"""Recover the type of a disguised alternating Gram matrix."""

import random

from symeichler import make_lattice, normalize_gram
from symeichler.acceptance import random_unimodular
from symeichler.intmat import matmul, transpose

rng = random.Random(1)
J = make_lattice((1, 2, 6)).gram
Q = random_unimodular(6, rng)
G = matmul(matmul(transpose(Q), J), Q)

print("G =")
for row in G:
    print("  ", " ".join(f"{c:>6}" for c in row))

t, P = normalize_gram(G)
print("type:", t.divisors)
print("P^T G P is canonical:", matmul(matmul(transpose(P), G), P) == J)

# U(2) + U(3) is not in normal form: 2 does not divide 3
t, _ = normalize_gram([[0, 2, 0, 0], [-2, 0, 0, 0], [0, 0, 0, 3], [0, 0, -3, 0]])
print("U(2) + U(3) has type", t.divisors)
