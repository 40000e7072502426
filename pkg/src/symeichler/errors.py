"""Exception hierarchy.

Every error carries a short machine-readable ``code`` so the command line
front end can report it without string matching.
"""


class SymplecticError(ValueError):
    """Invalid input or an unmet precondition."""

    code = "invalid_input"


class DivisorChainError(SymplecticError):
    code = "divisor_chain"


class DimensionError(SymplecticError):
    code = "dimension_mismatch"


class NotAlternatingError(SymplecticError):
    code = "not_alternating"


class SingularGramError(SymplecticError):
    code = "singular"


class ZeroVectorError(SymplecticError):
    code = "zero_vector"


class NotPrimitiveError(SymplecticError):
    code = "not_primitive"


class HypothesisError(SymplecticError):
    """The lattice type does not satisfy the hypothesis of a construction
    (for example ``d1 = d2 = 1``)."""

    code = "hypothesis"


class NotPrimeError(SymplecticError):
    code = "not_prime"


class NotIsotropicError(SymplecticError):
    """Transvection data with ``(l, m) != 0``."""

    code = "not_isotropic"


class NotIntegralError(SymplecticError):
    code = "not_integral"


class GroupTooLargeError(SymplecticError):
    code = "group_too_large"


class ClassMismatchError(SymplecticError):
    """Two primitive vectors have different discriminant classes, so they
    are not equivalent under the congruence subgroup."""

    code = "class_mismatch"


class NotSplittingError(SymplecticError):
    """The element (or vector) is not splitting.

    ``failing_primes`` lists the primes at which the p-part test fails.
    """

    code = "not_splitting"

    def __init__(self, message, failing_primes=()):
        super().__init__(message)
        self.failing_primes = tuple(failing_primes)


class BudgetExhaustedError(RuntimeError):
    """An oracle search hit its state cap before finishing."""

    code = "budget_exhausted"


class VerificationError(RuntimeError):
    """A constructed object failed its own postcondition check.

    This signals a bug, never bad input.
    """

    code = "verification_failure"
