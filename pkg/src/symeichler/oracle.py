"""Brute-force verifiers.

Nothing in here uses the classification theory: searches enumerate boxes of
vectors and test definitions directly, so they can serve as independent
ground truth for :mod:`symeichler.eichler`.  Where a search is incomplete
the answer is reported as inconclusive, never as a disproof.

Vectorized paths use int64 numpy arrays; boxes are kept small enough that
no intermediate value comes near overflow (asserted where it matters).
"""

import itertools
import warnings
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ._arith import content
from .discriminant import DiscElement, DiscGroup
from .errors import BudgetExhaustedError, NotPrimitiveError, VerificationError
from .intmat import identity
from .lattice_core import (Lattice, divisor, dual_class, is_primitive, pair,
                           pairings_with_basis, plane_swap)
from .transvections import (Transvection, Witness, compose_all, inverse,
                            matrix_witness, transvection_matrix)

CONNECTED = "connected"
INCONCLUSIVE = "inconclusive"
CONTRADICTION = "contradiction"


@dataclass(frozen=True)
class SearchBudget:
    bound: int = 3
    gen_bound: int = 1
    max_states: int = 200_000
    max_depth: int = 12

    def __post_init__(self):
        for name in ("bound", "gen_bound", "max_states", "max_depth"):
            if int(getattr(self, name)) < 1:
                raise ValueError(f"budget field {name} must be positive")

    @classmethod
    def from_json(cls, block):
        keys = ("bound", "gen_bound", "max_states", "max_depth")
        return cls(**{k: int(v) for k, v in block.items() if k in keys})

    def to_json(self):
        return {"bound": self.bound, "gen_bound": self.gen_bound,
                "max_states": self.max_states, "max_depth": self.max_depth}


# --- enumeration -----------------------------------------------------------

def enumerate_primitive(L: Lattice, B: int):
    """Every primitive vector with all coordinates in ``[-B, B]``, once,
    in lexicographic order."""
    if B < 1:
        raise ValueError("bound must be at least 1")
    for v in itertools.product(range(-B, B + 1), repeat=L.rank):
        if content(v) == 1:
            yield v


def _box(n, B, lead=None):
    # all vectors of [-B, B]^n (optionally with a fixed first coordinate)
    r = np.arange(-B, B + 1, dtype=np.int64)
    if lead is None:
        grids = np.meshgrid(*([r] * n), indexing="ij")
        return np.stack([g.ravel() for g in grids], axis=1)
    rest = _box(n - 1, B)
    return np.hstack([np.full((len(rest), 1), lead, dtype=np.int64), rest])


def _classes_np(L: Lattice, V):
    """Divisors and residue arrays for a block of primitive vectors."""
    dv = np.array(L.coordinate_divisors, dtype=np.int64)
    P = V * dv
    # (v, e_i) = -d_i b_i and (v, f_i) = d_i a_i, so div is the gcd of |P|
    div = np.gcd.reduce(np.abs(P), axis=1)
    res = (P // div[:, None]) % dv
    return div, res


def class_coverage(L: Lattice, B: int):
    """Tally the classes of all primitive vectors in the box ``[-B, B]``."""
    D = DiscGroup(L.lattice_type)
    counts = Counter()
    for lead in range(-B, B + 1):
        V = _box(L.rank, B, lead)
        V = V[np.gcd.reduce(np.abs(V), axis=1) == 1]
        if not len(V):
            continue
        _, res = _classes_np(L, V)
        keys, cnt = np.unique(res, axis=0, return_counts=True)
        for k, c in zip(keys.tolist(), cnt.tolist()):
            counts[DiscElement(tuple(zip(k[0::2], k[1::2])))] += c
    missing = [x for x in D.elements() if x not in counts]
    return CoverageReport(dict(counts), missing)


@dataclass(frozen=True)
class CoverageReport:
    counts: dict
    missing: list = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.missing


# --- generators of the move graph ------------------------------------------

def _unit_shears(L: Lattice):
    """Elementary shears of every unimodular hyperbolic plane."""
    out = []
    for i, d in enumerate(L.divisors):
        if d != 1:
            continue
        for r, c in ((2 * i + 1, 2 * i), (2 * i, 2 * i + 1)):
            for s in (1, -1):
                M = [list(row) for row in identity(L.rank)]
                M[r][c] = s
                out.append(matrix_witness(L, M))
    return out


@lru_cache(maxsize=16)
def generator_set(L: Lattice, gen_bound: int = 1):
    """Moves used by the searches, as verified witnesses.

    Integral transvections ``T_{l,m}`` with ``l`` a standard basis vector
    and ``m`` any nonzero vector with coordinates in ``[-gen_bound,
    gen_bound]`` orthogonal to ``l``; the unit shears of each unimodular
    plane; and the swap of the first two planes when both are unimodular.
    Duplicated matrices are dropped; the set is closed under inverses.
    """
    seen = set()
    out = []

    def add(W):
        if W.matrix not in seen and W.matrix != identity(L.rank):
            seen.add(W.matrix)
            out.append(W)

    rng = range(-gen_bound, gen_bound + 1)
    for j in range(L.rank):
        l = L.basis(j)
        for m in itertools.product(rng, repeat=L.rank):
            if any(m) and pair(L, l, m) == 0:
                add(transvection_matrix(Transvection(L, l, m)))
    for W in _unit_shears(L):
        add(W)
    if L.g >= 2 and L.divisors[0] == L.divisors[1] == 1:
        add(matrix_witness(L, plane_swap(L)))
    return tuple(out)


def _gen_tensor(gens):
    return np.array([W.matrix for W in gens], dtype=np.int64)


# --- bidirectional BFS -----------------------------------------------------

@dataclass(frozen=True)
class SearchResult:
    status: str
    witness: Witness = None
    depth: int = 0
    states: int = 0
    reason: str = ""


def orbit_bfs_search(L: Lattice, v, w, budget: SearchBudget = SearchBudget(),
                     gens=None) -> SearchResult:
    """Connect ``v`` to ``w`` by generator moves inside the coordinate box.

    A found path becomes a verified :class:`Witness` mapping ``v`` to ``w``.
    Failing to meet is reported as ``inconclusive``.  Overrunning
    ``budget.max_states`` raises :class:`BudgetExhaustedError`.
    """
    v, w = L.check_vector(v), L.check_vector(w)
    if not (is_primitive(L, v) and is_primitive(L, w)):
        raise NotPrimitiveError("orbit search needs primitive vectors")
    if gens is None:
        gens = generator_set(L, budget.gen_bound)
    if v == w:
        return SearchResult(CONNECTED, compose_all(L, []), 0, 1)
    T = _gen_tensor(gens)
    B = budget.bound
    if max(map(abs, v + w)) > B:
        return SearchResult(INCONCLUSIVE, reason="endpoint outside the box")

    # parent[state] = (previous state, generator index) on each side
    parents = ({v: None}, {w: None})
    frontiers = ([v], [w])
    depth = 0
    meet = None
    while meet is None and depth < budget.max_depth:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        if not frontiers[side]:
            break
        here, there = parents[side], parents[1 - side]
        frontier = frontiers[side]
        nxt = []
        for start in range(0, len(frontier), 256):
            F = np.array(frontier[start:start + 256], dtype=np.int64)
            images = np.einsum("gij,sj->sgi", T, F)
            ok = (np.abs(images) <= B).all(axis=2)
            for s_idx, g_idx in zip(*np.nonzero(ok)):
                u = tuple(int(c) for c in images[s_idx, g_idx])
                if u in here:
                    continue
                here[u] = (frontier[start + s_idx], int(g_idx))
                nxt.append(u)
                if u in there:
                    meet = u
                    break
            if meet is not None:
                break
        frontiers = (nxt, frontiers[1]) if side == 0 else (frontiers[0], nxt)
        depth += 1
        if len(parents[0]) + len(parents[1]) > budget.max_states:
            raise BudgetExhaustedError(
                f"orbit search visited more than {budget.max_states} states")
    states = len(parents[0]) + len(parents[1])
    if meet is None:
        reason = "box exhausted" if not all(frontiers) else "depth limit"
        return SearchResult(INCONCLUSIVE, None, depth, states, reason)

    def path(parent, u):
        # generators applied from the root to u, in order of application
        steps = []
        while parent[u] is not None:
            u, g = parent[u]
            steps.append(g)
        return steps[::-1]

    forward = [gens[i] for i in path(parents[0], meet)]
    backward = [gens[i] for i in path(parents[1], meet)]
    to_meet = compose_all(L, reversed(forward))
    from_w = compose_all(L, reversed(backward))
    gamma = compose_all(L, [inverse(from_w), to_meet])
    if gamma(v) != w:
        raise VerificationError("BFS path does not map v to w")
    if dual_class(L, v) != dual_class(L, w):
        raise VerificationError("BFS connected vectors of different classes")
    return SearchResult(CONNECTED, gamma, len(forward) + len(backward), states)


def orbit_components(L: Lattice, budget: SearchBudget = SearchBudget(), gens=None,
                     batch: int = 64):
    """Connected components of the move graph on primitive vectors of the
    box ``[-bound, bound]``.

    Returns ``(points, labels)``: an ``(N, 2g)`` array and the component
    label of each row.  Two rows share a label iff a chain of generator
    moves staying inside the box joins them.
    """
    if gens is None:
        gens = generator_set(L, budget.gen_bound)
    B, n = budget.bound, L.rank
    pts = _box(n, B)
    pts = pts[np.gcd.reduce(np.abs(pts), axis=1) == 1]
    if len(pts) > budget.max_states:
        raise BudgetExhaustedError(
            f"{len(pts)} box states exceed max_states = {budget.max_states}")
    W = 2 * B + 1
    weights = W ** np.arange(n - 1, -1, -1, dtype=np.int64)
    index = np.full(W ** n, -1, dtype=np.int64)
    index[(pts + B) @ weights] = np.arange(len(pts))
    labels = np.arange(len(pts))
    T = _gen_tensor(gens)
    for start in range(0, len(T), batch):
        rows, cols = [], []
        for M in T[start:start + batch]:
            Q = pts @ M.T
            ok = (np.abs(Q) <= B).all(axis=1)
            rows.append(labels[np.nonzero(ok)[0]])
            cols.append(labels[index[(Q[ok] + B) @ weights]])
        r, c = np.concatenate(rows), np.concatenate(cols)
        keep = r != c
        if not keep.any():
            continue
        g = coo_matrix((np.ones(keep.sum(), dtype=np.int8), (r[keep], c[keep])),
                       shape=(len(pts), len(pts)))
        _, comp = connected_components(g, directed=False)
        labels = comp[labels]
    return pts, labels


def component_depths(L: Lattice, pts, labels, roots, budget: SearchBudget = SearchBudget(),
                     gens=None):
    """Move distance from each row of ``pts`` to the root of its component.

    ``roots`` holds one row index per component of interest; rows of other
    components keep distance -1.  With a generator set closed under
    inverses, two rows of a component are at most ``dist[u] + dist[w]``
    moves apart.
    """
    if gens is None:
        gens = generator_set(L, budget.gen_bound)
    B, n = budget.bound, L.rank
    W = 2 * B + 1
    weights = W ** np.arange(n - 1, -1, -1, dtype=np.int64)
    index = np.full(W ** n, -1, dtype=np.int64)
    index[(pts + B) @ weights] = np.arange(len(pts))
    dist = np.full(len(pts), -1, dtype=np.int64)
    frontier = np.asarray(roots, dtype=np.int64)
    dist[frontier] = 0
    T = _gen_tensor(gens)
    step = 0
    while len(frontier):
        step += 1
        F = pts[frontier]
        found = []
        for M in T:
            Q = F @ M.T
            ok = (np.abs(Q) <= B).all(axis=1)
            nb = index[(Q[ok] + B) @ weights]
            nb = nb[dist[nb] < 0]
            dist[nb] = step
            found.append(nb)
        frontier = np.unique(np.concatenate(found)) if found else frontier[:0]
    return dist


# --- splitting partners ----------------------------------------------------

def _half_sums(coeffs, ranges):
    if not ranges:
        return np.zeros((1, 0), dtype=np.int64), np.zeros(1, dtype=np.int64)
    grids = np.meshgrid(*ranges, indexing="ij")
    X = np.stack([g.ravel() for g in grids], axis=1)
    return X, X @ np.array(coeffs, dtype=np.int64)


def splitting_candidates(L: Lattice, v, B: int):
    """All primitive ``w`` in the box with ``div(w) = div(v) = (v, w)``.

    Exhaustive over the box.  Two necessary conditions prune the
    enumeration: ``div(w) = d`` forces each coordinate of block ``i`` to be
    a multiple of ``d / gcd(d, d_i)``, and ``(v, w) = d`` is linear, solved
    by a meet-in-the-middle match of two half sums.  Every survivor is then
    re-checked with the exact definitions.
    """
    v = L.check_vector(v)
    d = divisor(L, v)
    coeffs = pairings_with_basis(L, v)
    assert max(map(abs, coeffs)) * B * L.rank < 2 ** 62
    ranges = []
    for di in L.coordinate_divisors:
        step = d // gcd(d, di)
        ranges.append(np.arange(-(B // step) * step, B + 1, step, dtype=np.int64))
    # balance the two halves by enumeration size
    halves = ([], [])
    sizes = [1, 1]
    for j in sorted(range(L.rank), key=lambda j: -len(ranges[j])):
        k = 0 if sizes[0] <= sizes[1] else 1
        halves[k].append(j)
        sizes[k] *= len(ranges[j])
    ia_idx, ib_idx = sorted(halves[0]), sorted(halves[1])
    XA, SA = _half_sums([coeffs[j] for j in ia_idx], [ranges[j] for j in ia_idx])
    XB, SB = _half_sums([coeffs[j] for j in ib_idx], [ranges[j] for j in ib_idx])
    order_b = np.argsort(SB, kind="stable")
    SB_sorted = SB[order_b]
    need = d - SA
    lo = np.searchsorted(SB_sorted, need, side="left")
    hi = np.searchsorted(SB_sorted, need, side="right")
    found = []
    for ia in np.nonzero(hi > lo)[0]:
        for ib in order_b[lo[ia]:hi[ia]]:
            cand = [0] * L.rank
            for j, x in zip(ia_idx, XA[ia].tolist()):
                cand[j] = x
            for j, x in zip(ib_idx, XB[ib].tolist()):
                cand[j] = x
            cand = tuple(cand)
            if (content(cand) == 1 and pair(L, v, cand) == d
                    and divisor(L, cand) == d):
                found.append(cand)
    return found


def splitting_bruteforce(L: Lattice, v, B: int):
    """Shortest (then lexicographically first) ``w`` with ``|w_j| <= B``,
    ``div(w) = div(v)`` and ``(v, w) = div(v)``; None if the box has none.
    None means inconclusive at this bound."""
    found = splitting_candidates(L, v, B)
    if not found:
        return None
    return min(found, key=lambda w: (sum(map(abs, w)), w))


def splitting_status(L: Lattice, v, B: int, criterion: bool):
    """Compare a brute-force search with the predicted answer.

    Returns ``(status, w)`` where status is ``connected`` (found, as
    predicted), ``inconclusive`` (nothing found) or ``contradiction`` (a
    partner exists although the criterion says none can).
    """
    w = splitting_bruteforce(L, v, B)
    if w is not None:
        return (CONNECTED if criterion else CONTRADICTION), w
    if criterion:
        warnings.warn(f"no splitting partner of {v} within bound {B} although "
                      "its class is splitting", RuntimeWarning, stacklevel=2)
    return INCONCLUSIVE, None
