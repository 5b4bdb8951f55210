"""Offline learning of k fixed predictions (k-medians over solution samples).

Two learners are provided: an exact subset-enumeration ERM (feasible only at
desk scale, guarded by an enumeration cap) and a single-swap local search
fallback for larger samples.  Also houses the 1-median subroutines used by
the partition-learning module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import CapExceeded, DimensionMismatch
from .metric import L1, L2, LINF, Point, distance, origin
from .oracle import HiddenInstance, run_parallel_k

ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class CenterSet:
    """An ordered set of k centers (not necessarily distinct)."""

    centers: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "centers", tuple(self.centers))
        if not self.centers:
            raise ValueError("a center set needs at least one center")
        dims = {c.dim for c in self.centers}
        if len(dims) != 1:
            raise DimensionMismatch("centers must share one dimension")

    @property
    def k(self) -> int:
        return len(self.centers)

    def __getitem__(self, i: int) -> Point:
        return self.centers[i]

    def __iter__(self):
        return iter(self.centers)


def nearest_center_distance(x: Point, C: CenterSet, norm: str) -> float:
    return min(distance(c, x, norm) for c in C)


def cost_of_centers(C: CenterSet, X: Sequence[Point], norm: str) -> float:
    """Mean distance from each sample to its closest center."""
    if not X:
        raise ValueError("empty sample set")
    total = 0.0
    for x in X:
        total += nearest_center_distance(x, C, norm)
    return total / len(X)


def learn_centers_subset_erm(X: Sequence[Point], k: int, norm: str) -> CenterSet:
    """Exact ERM over all k-subsets of the sample.

    Ties are broken toward the lexicographically first subset of sorted
    member indices, which is the order ``itertools.combinations`` yields.
    """
    m = len(X)
    if k > m:
        raise ValueError(f"k={k} exceeds sample size m={m}")
    if math.comb(m, k) > ENUMERATION_CAP:
        raise CapExceeded(
            f"C({m},{k}) subsets exceed the cap {ENUMERATION_CAP}; "
            "use learn_centers_local_search"
        )
    best_cost = math.inf
    best: tuple[int, ...] | None = None
    for idxs in combinations(range(m), k):
        C = CenterSet(tuple(X[i] for i in idxs))
        c = cost_of_centers(C, X, norm)
        if c < best_cost:
            best_cost = c
            best = idxs
    assert best is not None
    return CenterSet(tuple(X[i] for i in best))


def learn_centers_local_search(
    X: Sequence[Point], k: int, norm: str, max_sweeps: int = 100
) -> CenterSet:
    """Single-swap local search over centers restricted to the sample.

    Starts from the k lexicographically first sample points and stops when no
    swap improves the cost or ``max_sweeps`` full sweeps have run.  The result
    never costs more than the initialization.
    """
    m = len(X)
    if k > m:
        raise ValueError(f"k={k} exceeds sample size m={m}")
    current = list(range(k))
    cost = cost_of_centers(CenterSet(tuple(X[i] for i in current)), X, norm)
    for _ in range(max_sweeps):
        improved = False
        for slot in range(k):
            for cand in range(m):
                if cand in current:
                    continue
                trial = list(current)
                trial[slot] = cand
                c = cost_of_centers(CenterSet(tuple(X[i] for i in trial)), X, norm)
                if c < cost - 1e-12:
                    current, cost = trial, c
                    improved = True
        if not improved:
            break
    return CenterSet(tuple(X[i] for i in current))


def solve_with_learned_centers(
    inst: HiddenInstance, C: CenterSet
) -> tuple[Point, int]:
    """Solve an instance by running the learned centers in parallel."""
    return run_parallel_k(inst, list(C.centers))


def median_point(points: Sequence[Point], norm: str) -> Point:
    """Empirical 1-median of a nonempty point set under the given norm.

    Conventions: coordinate-wise lower median under L1 (exact), geometric
    median by iteratively reweighted averaging under L2, coordinate-wise
    midpoint of extremes under Linf.
    """
    if not points:
        raise ValueError("empty point set")
    dim = points[0].dim
    if norm == L1:
        coords = []
        for j in range(dim):
            col = sorted(p[j] for p in points)
            coords.append(col[(len(col) - 1) // 2])
        return Point(tuple(coords))
    if norm == LINF:
        coords = []
        for j in range(dim):
            col = [p[j] for p in points]
            coords.append((min(col) + max(col)) / 2.0)
        return Point(tuple(coords))
    if norm == L2:
        return _geometric_median(points)
    raise ValueError(f"unknown norm {norm!r}")


def _geometric_median(
    points: Sequence[Point], tol: float = 1e-9, max_iter: int = 1000
) -> Point:
    n = len(points)
    est = [sum(p[j] for p in points) / n for j in range(points[0].dim)]
    for _ in range(max_iter):
        num = [0.0] * len(est)
        denom = 0.0
        for p in points:
            d = distance(Point(tuple(est)), p, L2)
            w = 1.0 / max(d, 1e-12)
            denom += w
            for j in range(len(est)):
                num[j] += w * p[j]
        new = [v / denom for v in num]
        shift = max(abs(a - b) for a, b in zip(new, est))
        est = new
        if shift < tol:
            break
    return Point(tuple(est))


def origin_center(dim: int) -> Point:
    return origin(dim)
