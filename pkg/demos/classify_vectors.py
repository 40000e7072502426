"""Divisor and discriminant class of a few vectors in U + U + U(2).

Vectors with the same class are the ones a congruence-subgroup isometry
can carry into each other, so the table below is really a list of orbits.
"""

from symeichler import DiscGroup, divisor, dual_class, is_splitting_element, make_lattice

L = make_lattice((1, 1, 2))
D = DiscGroup(L.lattice_type)

vectors = {
    "e1": L.e(1),
    "e3": L.e(3),
    "f3": L.f(3),
    "2e1 + e3": (2, 0, 0, 0, 1, 0),
    "e1 + e3": (1, 0, 0, 0, 1, 0),
    "e3 + f3": (0, 0, 0, 0, 1, 1),
}

print(f"{'vector':>10}  div  class                 splitting")
for name, v in vectors.items():
    x = dual_class(L, v)
    print(f"{name:>10}  {divisor(L, v):>3}  {str(x.residues):<22} {is_splitting_element(D, x)}")

# e3 and 2e1 + e3 share a class; e1 + e3 has divisor 1 and falls in the zero class
