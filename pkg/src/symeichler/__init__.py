"""Primitive vectors in symplectic lattices: classes, witnesses, splittings."""

from .discriminant import (DiscElement, DiscGroup, disc_pair, failing_primes,
                           is_splitting_element, order, p_part_profile,
                           splitting_partner)
from .eichler import (construct_primitive_from_class, equivalence_witness,
                      save_U, split_lattice, splitting_witness)
from .errors import SymplecticError, VerificationError
from .lattice_core import (Lattice, LatticeType, divisor, dual_class,
                           is_primitive, make_lattice, normalize_gram, pair)
from .transvections import Transvection, Witness, verify_gamma_membership

__version__ = "0.1.0"

__all__ = [
    "DiscElement", "DiscGroup", "Lattice", "LatticeType", "SymplecticError",
    "Transvection", "VerificationError", "Witness",
    "construct_primitive_from_class", "disc_pair", "divisor", "dual_class",
    "equivalence_witness", "failing_primes", "is_primitive",
    "is_splitting_element", "make_lattice", "normalize_gram", "order",
    "p_part_profile", "pair", "save_U", "split_lattice", "splitting_partner",
    "splitting_witness", "verify_gamma_membership",
]
