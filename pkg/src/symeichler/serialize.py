"""JSON encodings.

Integers are written as decimal strings so arbitrary precision survives any
JSON reader; readers accept either strings or plain JSON integers.  Rational
transvection data uses ``"p/q"`` strings.
"""

from fractions import Fraction

from .discriminant import DiscElement
from .errors import SymplecticError
from .lattice_core import LatticeType
from .transvections import Transvection, Witness

SCHEMA_VERSION = "1"


class MalformedInputError(SymplecticError):
    code = "malformed_input"


def int_to_json(n) -> str:
    return str(int(n))


def int_from_json(x) -> int:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise MalformedInputError(f"expected an integer, got {x!r}")
    try:
        return int(x)
    except ValueError:
        raise MalformedInputError(f"not a decimal integer: {x!r}") from None


def vector_to_json(v):
    return [int_to_json(x) for x in v]


def vector_from_json(data):
    if not isinstance(data, list):
        raise MalformedInputError("a vector must be a JSON array")
    return tuple(int_from_json(x) for x in data)


def matrix_to_json(M):
    return [vector_to_json(row) for row in M]


def matrix_from_json(data):
    if not isinstance(data, list):
        raise MalformedInputError("a matrix must be a JSON array of rows")
    return tuple(vector_from_json(row) for row in data)


def type_to_json(t: LatticeType):
    return {"type": vector_to_json(t.divisors)}


def type_from_json(data) -> LatticeType:
    if isinstance(data, dict):
        data = data.get("type")
    return LatticeType(vector_from_json(data))


def element_to_json(x: DiscElement):
    return {"residues": [vector_to_json(p) for p in x.residues]}


def element_from_json(data) -> DiscElement:
    try:
        pairs = data["residues"]
    except (TypeError, KeyError):
        raise MalformedInputError("expected {\"residues\": [[a, b], ...]}") from None
    out = []
    for p in pairs:
        p = vector_from_json(p)
        if len(p) != 2:
            raise MalformedInputError("each residue entry must be a pair")
        out.append(p)
    return DiscElement(tuple(out))


def qmodz_to_json(q: Fraction):
    return {"num": int_to_json(q.numerator), "den": int_to_json(q.denominator)}


def qmodz_from_json(data) -> Fraction:
    return Fraction(int_from_json(data["num"]), int_from_json(data["den"]))


def _rational_to_json(v):
    return [str(Fraction(x)) for x in v]


def _rational_from_json(data):
    try:
        return tuple(Fraction(x) for x in data)
    except (TypeError, ValueError):
        raise MalformedInputError("bad rational vector") from None


def witness_to_json(W: Witness):
    factors = []
    for f in W.factors:
        if isinstance(f, Transvection):
            factors.append({"l": _rational_to_json(f.l), "m": _rational_to_json(f.m)})
        else:
            factors.append({"matrix": matrix_to_json(f)})
    return {"matrix": matrix_to_json(W.matrix), "factors": factors}


def witness_from_json(L, data) -> Witness:
    """Rebuild a witness; the product of the factors must equal the stored
    matrix, and the usual membership checks run again."""
    from .transvections import compose_all, matrix_witness, transvection_matrix

    M = matrix_from_json(data["matrix"])
    parts = []
    for f in data.get("factors", []):
        if "matrix" in f:
            parts.append(matrix_witness(L, matrix_from_json(f["matrix"])))
        else:
            T = Transvection(L, _rational_from_json(f["l"]), _rational_from_json(f["m"]))
            parts.append(transvection_matrix(T))
    W = Witness(L, M, tuple(p.factors[0] for p in parts))
    if parts and compose_all(L, parts).matrix != W.matrix:
        raise MalformedInputError("witness factors do not multiply to its matrix")
    return W
