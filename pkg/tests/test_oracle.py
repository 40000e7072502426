import pytest

from symeichler import make_lattice
from symeichler.discriminant import DiscGroup
from symeichler.errors import BudgetExhaustedError, NotPrimitiveError
from symeichler.lattice_core import divisor, dual_class, pair
from symeichler.oracle import (CONNECTED, CONTRADICTION, INCONCLUSIVE,
                               SearchBudget, class_coverage,
                               enumerate_primitive, generator_set,
                               orbit_bfs_search, orbit_components,
                               splitting_bruteforce, splitting_candidates,
                               splitting_status)
from symeichler.transvections import verify_gamma_membership


def test_coverage_examples(L112, L114):
    assert class_coverage(L112, 2).complete
    assert len(class_coverage(L112, 2).counts) == 4
    rep = class_coverage(make_lattice((1,)), 3)
    assert list(rep.counts) == [DiscGroup((1,)).zero()]
    rep = class_coverage(L114, 4)
    assert rep.complete and len(rep.counts) == 16


def test_coverage_counts_match_enumeration(L112):
    rep = class_coverage(L112, 1)
    assert sum(rep.counts.values()) == sum(1 for _ in enumerate_primitive(L112, 1))


def test_generators_in_gamma():
    for t in [(1, 1, 2), (1, 2, 2), (2, 6)]:
        L = make_lattice(t)
        for W in generator_set(L, 1):
            assert verify_gamma_membership(L, W.matrix)


def test_bfs_examples(L112):
    r = orbit_bfs_search(L112, L112.e(3), L112.e(3))
    assert r.status == CONNECTED and r.depth == 0
    v, w = L112.e(3), (2, 0, 0, 0, 1, 0)
    r = orbit_bfs_search(L112, v, w, SearchBudget(bound=3))
    assert r.status == CONNECTED and r.witness(v) == w
    assert verify_gamma_membership(L112, r.witness.matrix)


def test_bfs_never_crosses_classes(L112):
    r = orbit_bfs_search(L112, L112.e(1), L112.e(3), SearchBudget(bound=2))
    assert r.status == INCONCLUSIVE and r.witness is None


def test_bfs_budget(L112):
    with pytest.raises(BudgetExhaustedError):
        orbit_bfs_search(L112, L112.e(1), L112.e(3),
                         SearchBudget(bound=3, max_states=50))
    with pytest.raises(NotPrimitiveError):
        orbit_bfs_search(L112, (2, 0, 0, 0, 0, 0), L112.e(1))


def test_budget_json_round_trip():
    b = SearchBudget(bound=4, gen_bound=2, max_states=10, max_depth=3)
    assert SearchBudget.from_json(b.to_json()) == b
    assert SearchBudget.from_json({"bound": "5"}).bound == 5


def test_components_respect_classes():
    L = make_lattice((1, 2, 2))
    pts, labels = orbit_components(L, SearchBudget(bound=2))
    classes = {}
    for p, lab in zip(pts, labels):
        x = dual_class(L, tuple(int(c) for c in p))
        classes.setdefault(int(lab), set()).add(x)
    assert all(len(s) == 1 for s in classes.values())


def test_splitting_bruteforce_examples(L112, L114):
    assert splitting_bruteforce(L112, L112.e(3), 1) == L112.f(3)
    assert splitting_bruteforce(L112, L112.e(1), 1) == L112.f(1)
    assert splitting_bruteforce(L114, (2, 0, 0, 0, 1, 0), 6) is None


def _naive_candidates(L, v, B):
    d = divisor(L, v)
    return sorted(w for w in enumerate_primitive(L, B)
                  if pair(L, v, w) == d and divisor(L, w) == d)


@pytest.mark.parametrize("t,v", [((1, 1, 2), (0, 0, 0, 0, 1, 0)),
                                 ((1, 1, 2), (1, 0, 1, 0, 1, 1)),
                                 ((1, 1, 4), (2, 0, 0, 0, 1, 0)),
                                 ((2, 6), (0, 0, 1, 0)),
                                 ((1, 6), (0, 1, 2, 3))])
def test_candidates_match_naive_scan(t, v):
    L = make_lattice(t)
    assert sorted(splitting_candidates(L, v, 2)) == _naive_candidates(L, v, 2)


def test_splitting_status(L112, L114):
    assert splitting_status(L112, L112.e(3), 1, True)[0] == CONNECTED
    assert splitting_status(L112, L112.e(3), 1, False)[0] == CONTRADICTION
    assert splitting_status(L114, (2, 0, 0, 0, 1, 0), 3, False)[0] == INCONCLUSIVE
    with pytest.warns(RuntimeWarning):
        splitting_status(L114, (2, 0, 0, 0, 1, 0), 2, True)


@pytest.mark.parametrize("t", [(1, 1, 2), (1, 2, 2), (2, 6)])
def test_generators_closed_under_inverse(t):
    from symeichler.transvections import symplectic_inverse
    L = make_lattice(t)
    mats = {W.matrix for W in generator_set(L, 1)}
    assert all(symplectic_inverse(L, M) in mats for M in mats)


def test_component_depths_match_bfs():
    from symeichler.oracle import component_depths
    L = make_lattice((1, 2))
    b = SearchBudget(bound=2)
    pts, labels = orbit_components(L, b)
    root = 0
    dist = component_depths(L, pts, labels, [root], b)
    v = tuple(int(c) for c in pts[root])
    for i in range(0, len(pts), 7):
        if labels[i] != labels[root]:
            assert dist[i] == -1
            continue
        r = orbit_bfs_search(L, v, tuple(int(c) for c in pts[i]), b)
        assert r.status == CONNECTED and r.depth >= dist[i]
