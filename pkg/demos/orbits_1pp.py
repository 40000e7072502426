"""Bounded-box look at U + U(p) + U(p) for p = 2, 3.

Only one unimodular plane, so the constructive witness does not apply.
Instead: connected components of the move graph on primitive vectors of
a small box, compared with the discriminant classes.
"""

import numpy as np

from symeichler import DiscGroup, dual_class, make_lattice
from symeichler.oracle import (SearchBudget, class_coverage, orbit_bfs_search,
                               orbit_components)

budget = SearchBudget(bound=3, gen_bound=1)

for p in (2, 3):
    L = make_lattice((1, p, p))
    cov = class_coverage(L, 2 * p)
    print(f"(1,{p},{p}): {len(cov.counts)} of {DiscGroup(L.lattice_type).size} classes hit at B={2 * p}")

    pts, labels = orbit_components(L, budget)
    per_class = {}
    for row, lab in zip(pts.tolist(), labels.tolist()):
        per_class.setdefault(dual_class(L, tuple(row)), set()).add(lab)
    split = [x for x, labs in per_class.items() if len(labs) > 1]
    print(f"  {len(pts)} primitive vectors, {len(np.unique(labels))} components, "
          f"{len(split)} classes spread over several components")

    v, w = (1, 0, 0, 0, 0, 0), (1, 1, p, 0, 0, -p)
    r = orbit_bfs_search(L, v, w, budget)
    print(f"  {v} -> {w}: {r.status}, path length {r.depth}")
