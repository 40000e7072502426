"""Acceptance checks, shared by the test suite and ``symeichler selftest``.

Each ``criterion_N`` function runs one check end to end and returns a
:class:`CriterionResult`.  All comparisons are exact; the only tolerances
are wall-clock limits, pinned below next to each check.
"""

import random
import time
from dataclasses import dataclass, field

import numpy as np

from ._arith import prime_factors, valuation
from .discriminant import (DiscGroup, all_splitting_type, is_splitting_element,
                           is_splitting_element_oracle, order)
from .eichler import (construct_primitive_from_class, equivalence_witness,
                      split_lattice, splitting_witness)
from .errors import NotSplittingError
from .intmat import det, from_columns, identity, matmul, transpose
from .lattice_core import (LatticeType, divisor, dual_class, gram_of,
                           is_primitive, make_lattice, normalize_gram, pair)
from .oracle import (SearchBudget, class_coverage, component_depths,
                     generator_set, orbit_bfs_search, orbit_components,
                     splitting_bruteforce)
from .transvections import compose_all, transvection, verify_gamma_membership

SEED = 20240521

EICHLER_TYPES = [(1, 1, 1), (1, 1, 2), (1, 1, 4), (1, 1, 2, 6), (1, 1, 12)]
TRANSVECTION_TYPES = EICHLER_TYPES + [(2, 6), (1, 2, 2), (1, 3, 3), (3, 3, 3)]
SPLITTING_SWEEP = [
    (1,), (2,), (3,), (4,), (6,), (8,), (12,),
    (1, 1), (1, 2), (1, 4), (2, 2), (2, 4), (1, 6), (3, 3), (1, 8), (2, 6),
    (4, 4), (1, 12), (2, 2, 2), (1, 2, 4), (1, 2, 2), (1, 3, 3), (2, 2, 4),
    (1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 1, 4), (1, 1, 6), (1, 1, 8),
    (1, 1, 9), (1, 1, 12), (1, 1, 16), (1, 1, 18),
    (1, 1, 2, 2), (1, 1, 2, 4), (1, 1, 2, 6), (1, 1, 2, 8), (1, 1, 4, 4),
    (1, 1, 3, 9), (1, 1, 2, 12), (1, 1, 6, 6), (1, 1, 4, 8),
    (1, 1, 1, 1, 2), (1, 1, 2, 2, 2), (1, 1, 2, 2, 4),
]
ALL_SPLITTING_TYPES = [
    (1, 1), (1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 1, 4), (1, 1, 5), (1, 1, 6),
    (1, 1, 8), (1, 1, 9), (1, 1, 10), (1, 1, 12), (1, 1, 15), (1, 1, 18),
    (1, 1, 30), (1, 1, 1, 2), (1, 1, 1, 4), (1, 1, 2, 2), (1, 1, 2, 4),
    (1, 1, 2, 6), (1, 1, 2, 10), (1, 1, 3, 6), (1, 1, 3, 15), (1, 1, 6, 6),
    (1, 1, 2, 8), (1, 1, 4, 4), (1, 1, 3, 9), (1, 1, 6, 12), (1, 1, 2, 2, 2),
    (1, 1, 2, 6, 30), (1, 1, 2, 2, 4),
]
ORBIT_TYPES = [(1, 2, 2), (1, 3, 3)]
ORBIT_BUDGET = SearchBudget(bound=3, gen_bound=1, max_states=200_000,
                               max_depth=12)
ORBIT_BOX = 2
ORBIT_BFS_SAMPLES = 20

TIME_LIMITS = {1: 1.0, 2: 30.0, 3: 5.0, 4: 60.0, 5: 120.0, 6: 30.0, 7: 600.0,
               8: 10.0}


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool = True
    seconds: float = 0.0
    details: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def fail(self, msg):
        self.passed = False
        if len(self.failures) < 20:
            self.failures.append(msg)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.name} ({self.seconds:.2f}s) {self.details}"


def _timed(number, name):
    def deco(fn):
        def run(*args, **kwargs):
            res = CriterionResult(number, name)
            t0 = time.perf_counter()
            fn(res, *args, **kwargs)
            res.seconds = time.perf_counter() - t0
            limit = TIME_LIMITS[number]
            if res.seconds > limit:
                res.fail(f"took {res.seconds:.1f}s, limit {limit}s")
            return res
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return deco


# --- random objects ----------------------------------------------------------

def random_isotropic_pair(L, rng, bound=2):
    """Random integral ``(l, m)`` with ``(l, m) = 0`` and both nonzero."""
    n = L.rank
    while True:
        l = tuple(rng.randint(-bound, bound) for _ in range(n))
        if not any(l):
            continue
        if rng.random() < 0.2:
            k = rng.choice([-2, -1, 1, 2])
            m = tuple(k * x for x in l)
        else:
            t = tuple(rng.randint(-bound, bound) for _ in range(n))
            u = tuple(rng.randint(-bound, bound) for _ in range(n))
            a, b = pair(L, l, u), pair(L, l, t)
            m = tuple(a * x - b * y for x, y in zip(t, u))
        if any(m):
            return l, m


def random_witness(L, rng, max_factors=8, bound=2):
    k = rng.randint(1, max_factors)
    return compose_all(L, [transvection(L, *random_isotropic_pair(L, rng, bound))
                           for _ in range(k)])


def random_unimodular(n, rng, steps=12):
    M = [list(r) for r in identity(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        q = rng.choice([-2, -1, 1, 2])
        for row in M:
            row[j] += q * row[i]
    perm = list(range(n))
    rng.shuffle(perm)
    return tuple(tuple(M[r][c] for c in perm) for r in range(n))


def expected_complement_type(t, d):
    """Type of the complement of a ``U(d)`` summand, from elementary
    divisors: remove one copy of ``v_p(d)`` from each prime's exponent
    list and reassemble."""
    ds = list(t)
    g = len(ds) - 1
    out = [1] * g
    primes = set(prime_factors(ds[-1])) if ds[-1] > 1 else set()
    for p in primes:
        exps = [valuation(x, p) for x in ds]
        exps.remove(valuation(d, p))
        for i, e in enumerate(sorted(exps)):
            out[i] *= p ** e
    return LatticeType(tuple(out))


# --- criteria ----------------------------------------------------------------

@_timed(1, "surjectivity: every class has a primitive representative")
def criterion_1(res):
    total = 0
    for t in EICHLER_TYPES:
        L = make_lattice(t)
        D = DiscGroup(L.lattice_type)
        for x in D.elements():
            v = construct_primitive_from_class(L, x)
            total += 1
            if not (is_primitive(L, v) and divisor(L, v) == order(D, x)
                    and dual_class(L, v) == x):
                res.fail(f"{t}: class {x.residues} gave {v}")
    res.details["classes"] = total


@_timed(2, "injectivity: same class implies a verified witness")
def criterion_2(res, pairs_per_type=200, seed=SEED):
    rng = random.Random(seed)
    done = 0
    for t in EICHLER_TYPES:
        L = make_lattice(t)
        D = DiscGroup(L.lattice_type)
        elements = list(D.elements())
        for k in range(pairs_per_type):
            x = rng.choice(elements)
            base = construct_primitive_from_class(L, x)
            if k % 2 == 0:
                v = random_witness(L, rng)(base)
                w = random_witness(L, rng)(v)
            else:
                v = random_witness(L, rng)(base)
                w = random_witness(L, rng)(base)
            M = equivalence_witness(L, v, w).witness.matrix
            ok = (matmul(matmul(transpose(M), L.gram), M) == L.gram
                  and verify_gamma_membership(L, M)
                  and tuple(sum(a * b for a, b in zip(r, v)) for r in M) == w)
            if not ok:
                res.fail(f"{t}: witness for {v} -> {w} failed")
            done += 1
    res.details["pairs"] = done


@_timed(3, "integral transvections lie in the congruence subgroup")
def criterion_3(res, per_type=500, seed=SEED + 3):
    rng = random.Random(seed)
    n = 0
    for t in TRANSVECTION_TYPES:
        L = make_lattice(t)
        for _ in range(per_type):
            l, m = random_isotropic_pair(L, rng, bound=3)
            M = transvection(L, l, m).matrix
            if not verify_gamma_membership(L, M):
                res.fail(f"{t}: T_{{{l},{m}}} not in the subgroup")
            n += 1
    res.details["transvections"] = n


@_timed(4, "splitting formula agrees with exhaustive search")
def criterion_4(res):
    n = 0
    for t in SPLITTING_SWEEP:
        D = DiscGroup(LatticeType(t))
        assert D.size <= 4096
        for x in D.elements():
            if is_splitting_element(D, x) != is_splitting_element_oracle(D, x):
                res.fail(f"{t}: disagreement at {x.residues}")
            n += 1
    res.details["elements"] = n


@_timed(5, "splitting vectors correspond to splitting classes")
def criterion_5(res):
    split = nonsplit = 0
    for t in SPLITTING_SWEEP:
        if len(t) < 2 or t[0] != 1 or t[1] != 1:
            continue
        L = make_lattice(t)
        D = DiscGroup(L.lattice_type)
        bound = 2 * t[-1]
        for x in D.elements():
            v = construct_primitive_from_class(L, x)
            d = order(D, x)
            if is_splitting_element(D, x):
                split += 1
                s = splitting_witness(L, v)
                w = s.partner
                if pair(L, v, w) != d or divisor(L, w) != d:
                    res.fail(f"{t}: bad partner for {v}")
                    continue
                basis = [v, w] + list(s.complement_basis)
                if abs(det(from_columns(basis))) != 1:
                    res.fail(f"{t}: assembly for {v} not unimodular")
                ctype = expected_complement_type(t, d)
                if s.complement_type != ctype or \
                        gram_of(L, s.complement_basis) != make_lattice(ctype).gram:
                    res.fail(f"{t}: complement of {v} is {s.complement_type}, "
                             f"expected {ctype}")
                if split_lattice(L, v, w).complement_type != ctype:
                    res.fail(f"{t}: split_lattice disagrees for {v}")
            else:
                nonsplit += 1
                try:
                    splitting_witness(L, v)
                    res.fail(f"{t}: {v} split although its class does not")
                except NotSplittingError:
                    pass
                found = splitting_bruteforce(L, v, bound)
                if found is not None:
                    res.fail(f"{t}: brute force split {v} with {found}")
    res.details.update(splitting=split, non_splitting=nonsplit)


@_timed(6, "all-splitting types read off the divisor chain")
def criterion_6(res):
    for t in ALL_SPLITTING_TYPES:
        D = DiscGroup(LatticeType(t))
        elementwise = all(is_splitting_element(D, x) for x in D.elements())
        if all_splitting_type(t) != elementwise:
            res.fail(f"{t}: formula {all_splitting_type(t)}, elementwise {elementwise}")
    res.details["types"] = len(ALL_SPLITTING_TYPES)


@_timed(7, "types (1,p,p): classes are orbits (bounded-box evidence)")
def criterion_7(res, types=ORBIT_TYPES, budget=ORBIT_BUDGET,
                box=ORBIT_BOX, samples=ORBIT_BFS_SAMPLES, seed=SEED + 7):
    rng = random.Random(seed)
    for t in types:
        p = t[1]
        L = make_lattice(t)
        cov = class_coverage(L, 2 * p)
        if not cov.complete:
            res.fail(f"{t}: classes missed at B={2 * p}: {len(cov.missing)}")
        gens = generator_set(L, budget.gen_bound)
        pts, labels = orbit_components(L, budget, gens)
        inner = (np.abs(pts) <= box).all(axis=1)
        by_class = {}
        comp_classes = {}
        for row, lab, inn in zip(pts.tolist(), labels.tolist(), inner.tolist()):
            x = dual_class(L, tuple(row))
            comp_classes.setdefault(lab, set()).add(x)
            if inn:
                by_class.setdefault(x, {}).setdefault(lab, 0)
                by_class[x][lab] += 1
        total = connected = 0
        for comps in by_class.values():
            sizes = list(comps.values())
            n = sum(sizes)
            total += n * (n - 1) // 2
            connected += sum(s * (s - 1) // 2 for s in sizes)
        mixed = sum(len(c) > 1 for c in comp_classes.values())
        if mixed:
            res.fail(f"{t}: {mixed} components contain two classes")
        if connected != total:
            res.fail(f"{t}: {total - connected} same-class pairs not connected")
        # depth: any two members of a component are within dist[u] + dist[w]
        roots = {}
        for i in np.nonzero(inner)[0].tolist():
            roots.setdefault(int(labels[i]), i)
        dist = component_depths(L, pts, labels, list(roots.values()), budget, gens)
        depth_bound = 2 * int(dist[inner].max())
        if depth_bound > budget.max_depth:
            res.fail(f"{t}: pair depth bound {depth_bound} exceeds "
                     f"max_depth {budget.max_depth}")
        # explicit witnesses for a sample of pairs
        members = {}
        for row, inn in zip(pts.tolist(), inner.tolist()):
            if inn:
                members.setdefault(dual_class(L, tuple(row)), []).append(tuple(row))
        classes = sorted(members, key=lambda x: x.residues)
        found = 0
        for _ in range(samples):
            x = rng.choice(classes)
            v, w = rng.choice(members[x]), rng.choice(members[x])
            r = orbit_bfs_search(L, v, w, budget, gens)
            if r.status == "connected" and r.witness(v) == w \
                    and verify_gamma_membership(L, r.witness.matrix):
                found += 1
            else:
                res.fail(f"{t}: BFS {r.status} for {v} -> {w} ({r.reason})")
        res.details[str(t)] = {
            "classes_hit": len(cov.counts), "classes": DiscGroup(L.lattice_type).size,
            "pairs": total,
            "connected_pct": 100.0 * connected / total if total else 100.0,
            "inconclusive_pct": 100.0 * (total - connected) / total if total else 0.0,
            "contradiction_pct": 0.0 if not mixed else 100.0,
            "pair_depth_bound": depth_bound,
            "bfs_witnesses": found,
        }


@_timed(8, "normalize_gram recovers the type of random conjugates")
def criterion_8(res, count=100, seed=SEED + 8):
    rng = random.Random(seed)
    for _ in range(count):
        g = rng.randint(1, 4)
        ds = [rng.choice([1, 1, 2, 3])]
        for _ in range(g - 1):
            options = [ds[-1] * k for k in (1, 2, 3, 4, 6) if ds[-1] * k <= 12]
            ds.append(rng.choice(options))
        t = LatticeType(tuple(ds))
        J = make_lattice(t).gram
        Q = random_unimodular(2 * g, rng)
        G = matmul(matmul(transpose(Q), J), Q)
        t2, P = normalize_gram(G)
        if t2 != t or matmul(matmul(transpose(P), G), P) != J or abs(det(P)) != 1:
            res.fail(f"type {t} came back as {t2}")
    res.details["matrices"] = count


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8}


def run_all(numbers=None, stream=None):
    results = []
    for k in sorted(numbers or CRITERIA):
        r = CRITERIA[k]()
        results.append(r)
        if stream is not None:
            print(r.line(), file=stream, flush=True)
    return results
