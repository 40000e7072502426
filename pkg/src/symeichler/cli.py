"""Command line front end.

Every command prints one JSON document on stdout.  Exit status: 0 on
success (a "not equivalent" or "not splitting" answer is a success), 1 on
bad input, 2 when a constructed object fails its own verification.
"""

import argparse
import json
import os
import sys

from . import acceptance
from .discriminant import DiscGroup, is_splitting_element, order
from .eichler import equivalence_witness, splitting_witness
from .errors import (BudgetExhaustedError, ClassMismatchError,
                     NotSplittingError, SymplecticError, VerificationError)
from .lattice_core import (LatticeType, divisor, dual_class, is_primitive,
                           make_lattice, normalize_gram)
from .oracle import SearchBudget, class_coverage, orbit_bfs_search
from .serialize import (SCHEMA_VERSION, MalformedInputError, element_to_json,
                        int_from_json, int_to_json, matrix_from_json, matrix_to_json,
                        type_to_json, vector_from_json,
                        vector_to_json, witness_from_json, witness_to_json)
from .transvections import (acts_trivially_on_discriminant, is_symplectic,
                            verify_gamma_membership)

BUDGET_ENV = "SYMEICHLER_BUDGET"


class UsageError(SymplecticError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _csv_ints(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise MalformedInputError(f"expected comma-separated integers: {text!r}") from None


def _json_arg(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"malformed JSON: {exc}") from None


class _Inputs:
    """Flag values with fall-back to an ``--input`` JSON file."""

    def __init__(self, args):
        self.args = args
        self.file = {}
        if getattr(args, "input", None):
            try:
                with open(args.input, encoding="utf-8") as fh:
                    self.file = json.load(fh)
            except OSError as exc:
                raise MalformedInputError(f"cannot read {args.input}: {exc}") from None
            except json.JSONDecodeError as exc:
                raise MalformedInputError(f"malformed JSON in {args.input}: {exc}") from None
            if not isinstance(self.file, dict):
                raise MalformedInputError("input file must hold a JSON object")

    def raw(self, name):
        value = getattr(self.args, name, None)
        if value is not None:
            return value
        return self.file.get(name)

    def required(self, name):
        value = self.raw(name)
        if value is None:
            raise UsageError(f"missing --{name}")
        return value

    def vector(self, name):
        value = self.required(name)
        if isinstance(value, str):
            return _csv_ints(value)
        return vector_from_json(value)

    def lattice(self):
        value = self.required("type")
        if isinstance(value, str):
            return make_lattice(LatticeType(_csv_ints(value)))
        if isinstance(value, dict):
            value = value.get("type")
        return make_lattice(LatticeType(vector_from_json(value)))

    def matrix(self, name):
        value = self.required(name)
        if isinstance(value, str):
            value = _json_arg(value)
        return matrix_from_json(value)

    def budget(self):
        block = {}
        path = os.environ.get(BUDGET_ENV)
        if path:
            try:
                with open(path, encoding="utf-8") as fh:
                    block.update(json.load(fh))
            except (OSError, json.JSONDecodeError) as exc:
                raise MalformedInputError(f"bad budget file {path}: {exc}") from None
        extra = self.raw("budget")
        if isinstance(extra, str):
            extra = _json_arg(extra)
        if extra:
            block.update(extra)
        try:
            return SearchBudget.from_json(block)
        except (TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad budget block: {exc}") from None


def cmd_normalize(inp):
    t, P = normalize_gram(inp.matrix("gram"))
    return {"type": type_to_json(t)["type"], "basis_change": matrix_to_json(P)}


def cmd_classify(inp):
    L = inp.lattice()
    v = L.check_vector(inp.vector("vector"))
    out = {"type": type_to_json(L.lattice_type)["type"], "vector": vector_to_json(v),
           "primitive": is_primitive(L, v)}
    if not out["primitive"]:
        return out
    D = DiscGroup(L.lattice_type)
    x = dual_class(L, v)
    out.update({"div": int_to_json(divisor(L, v)), "class": element_to_json(x),
                "order": int_to_json(order(D, x)),
                "splitting": is_splitting_element(D, x)})
    return out


def cmd_witness(inp):
    L = inp.lattice()
    v, w = inp.vector("v"), inp.vector("w")
    method = inp.raw("method") or "constructive"
    if method == "bfs":
        budget = inp.budget()
        if dual_class(L, v) != dual_class(L, w):
            return {"equivalent": False, "reason": "class_mismatch"}
        try:
            r = orbit_bfs_search(L, v, w, budget)
        except BudgetExhaustedError as exc:
            print(f"symeichler: {exc}", file=sys.stderr)
            return {"equivalent": None, "status": "inconclusive",
                    "reason": "budget exhausted",
                    "budget": {k: int_to_json(x) for k, x in budget.to_json().items()}}
        out = {"equivalent": True if r.status == "connected" else None,
               "status": r.status, "depth": int_to_json(r.depth),
               "states": int_to_json(r.states),
               "budget": {k: int_to_json(x) for k, x in budget.to_json().items()}}
        if r.witness is not None:
            out["witness"] = witness_to_json(r.witness)
        if r.reason:
            out["reason"] = r.reason
        return out
    try:
        res = equivalence_witness(L, v, w)
    except ClassMismatchError as exc:
        return {"equivalent": False, "reason": "class_mismatch", "message": str(exc)}
    return {"equivalent": True, "witness": witness_to_json(res.witness),
            "check": res.check}


def cmd_split(inp):
    L = inp.lattice()
    v = inp.vector("vector")
    try:
        s = splitting_witness(L, v)
    except NotSplittingError as exc:
        return {"splitting": False,
                "failing_primes": [int_to_json(p) for p in exc.failing_primes]}
    return {"splitting": True, "partner": vector_to_json(s.partner),
            "summand_type": int_to_json(s.summand_type),
            "complement_basis": [vector_to_json(c) for c in s.complement_basis],
            "complement_type": (type_to_json(s.complement_type)["type"]
                                if s.complement_type else [])}


def cmd_verify(inp):
    L = inp.lattice()
    if inp.raw("witness") is not None:
        data = inp.raw("witness")
        if isinstance(data, str):
            data = _json_arg(data)
        M = witness_from_json(L, data).matrix
    else:
        M = inp.matrix("matrix")
    out = {"symplectic": is_symplectic(L, M),
           "trivial_on_discriminant": acts_trivially_on_discriminant(L, M),
           "in_gamma": verify_gamma_membership(L, M)}
    if inp.raw("v") is not None and inp.raw("w") is not None:
        v, w = L.check_vector(inp.vector("v")), L.check_vector(inp.vector("w"))
        out["maps_v_to_w"] = tuple(sum(a * b for a, b in zip(r, v)) for r in M) == w
    return out


def cmd_coverage(inp):
    L = inp.lattice()
    B = int_from_json(inp.required("bound"))
    if B < 1:
        raise MalformedInputError("bound must be at least 1")
    rep = class_coverage(L, B)
    counts = sorted(rep.counts.items(), key=lambda kv: kv[0].residues)
    return {"bound": int_to_json(B), "complete": rep.complete,
            "counts": [{"class": element_to_json(x), "count": int_to_json(c)}
                       for x, c in counts],
            "missing": [element_to_json(x) for x in rep.missing]}


def cmd_selftest(inp):
    raw = inp.raw("criteria")
    numbers = _csv_ints(raw) if raw else None
    if numbers and any(k not in acceptance.CRITERIA for k in numbers):
        raise UsageError(f"unknown criterion in {raw}")
    results = acceptance.run_all(numbers, stream=sys.stderr)
    return {"passed": all(r.passed for r in results),
            "criteria": [{"number": r.number, "name": r.name, "passed": r.passed,
                          "seconds": round(r.seconds, 3), "failures": r.failures}
                         for r in results]}


COMMANDS = {"normalize": cmd_normalize, "classify": cmd_classify,
            "witness": cmd_witness, "split": cmd_split, "verify": cmd_verify,
            "coverage": cmd_coverage, "selftest": cmd_selftest}


def build_parser():
    p = _Parser(prog="symeichler", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command")

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--input", help="JSON file supplying any of the flags")
        return sp

    sp = add("normalize", "canonical type and basis change of a Gram matrix")
    sp.add_argument("--gram", help="JSON matrix")
    sp = add("classify", "divisor and discriminant class of a vector")
    sp.add_argument("--type")
    sp.add_argument("--vector")
    sp = add("witness", "isometry in the congruence subgroup mapping v to w")
    sp.add_argument("--type")
    sp.add_argument("--v")
    sp.add_argument("--w")
    sp.add_argument("--method", choices=["constructive", "bfs"])
    sp.add_argument("--budget", help='JSON {"bound":..,"gen_bound":..,...}')
    sp = add("split", "splitting partner and complement of a vector")
    sp.add_argument("--type")
    sp.add_argument("--vector")
    sp = add("verify", "check a matrix or witness against the congruence subgroup")
    sp.add_argument("--type")
    sp.add_argument("--matrix")
    sp.add_argument("--witness")
    sp.add_argument("--v")
    sp.add_argument("--w")
    sp = add("coverage", "tally classes of primitive vectors in a box")
    sp.add_argument("--type")
    sp.add_argument("--bound")
    sp = add("selftest", "run the acceptance checks")
    sp.add_argument("--criteria", help="comma-separated criterion numbers")
    return p


def _emit(doc, stream=None):
    doc = {"schema_version": SCHEMA_VERSION, **doc}
    print(json.dumps(doc), file=stream or sys.stdout)


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("no command given")
        doc = COMMANDS[args.command](_Inputs(args))
    except VerificationError as exc:
        _emit({"error": {"code": exc.code, "message": str(exc)}})
        print(f"symeichler: {exc}", file=sys.stderr)
        return 2
    except SymplecticError as exc:
        _emit({"error": {"code": exc.code, "message": str(exc)}})
        print(f"symeichler: {exc}", file=sys.stderr)
        return 1
    _emit(doc)
    if args.command == "selftest" and not doc["passed"]:
        return 2
    return 0


def main():
    sys.exit(run())
