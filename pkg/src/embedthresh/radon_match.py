"""Radon matches: (2d+2)-subsets whose Radon partition is two faces of X.

A linear embedding of X in R^2d can have no Radon match, so one match under
a configuration rules that vertex placement out.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from . import exact
from .complex import SimplicialComplex
from .errors import BudgetExceededError, DegeneracyError, PreconditionError
from .geometry import PointConfiguration

DEFAULT_BUDGET = 10 ** 8


@dataclass(frozen=True)
class MatchReport:
    checked: int
    matches: int
    mode: str  # "exhaustive" | "sampled" | "census"
    population: int | None = None
    balanced_checked: int | None = None
    balanced_hits: int | None = None

    @property
    def density(self) -> float:
        return self.matches / self.checked if self.checked else 0.0

    @property
    def estimate(self) -> float:
        """Matches scaled to the whole subset population."""
        if self.population is None:
            return float(self.matches)
        return self.density * self.population

    def __add__(self, other: "MatchReport") -> "MatchReport":
        def add(a, b):
            return None if a is None and b is None else (a or 0) + (b or 0)
        if self.mode != other.mode:
            raise ValueError("cannot merge reports of different modes")
        return MatchReport(self.checked + other.checked, self.matches + other.matches, self.mode,
                           self.population, add(self.balanced_checked, other.balanced_checked),
                           add(self.balanced_hits, other.balanced_hits))

    def to_json(self) -> str:
        obj = {k: v for k, v in asdict(self).items() if v is not None}
        if self.mode == "sampled":
            obj["estimate"] = self.estimate
        return json.dumps(obj, separators=(",", ":"))


def _check_inputs(X, config, d):
    if d < 1:
        raise PreconditionError("d must be >= 1")
    if config.m != 2 * d:
        raise PreconditionError(f"configuration must live in R^{2 * d}")
    if config.n < X.n:
        raise PreconditionError("configuration places fewer points than X has vertices")


def _sign_parts(config, subset):
    """Labels with positive / negative affine-dependence coefficient."""
    mu = exact.null_vector_by_minors([config.lifted[i] for i in subset])
    if any(x == 0 for x in mu):
        raise DegeneracyError(f"points {tuple(subset)} are not in general position", subset)
    a = tuple(v for v, x in zip(subset, mu) if x > 0)
    b = tuple(v for v, x in zip(subset, mu) if x < 0)
    return a, b


def _is_match(X, config, subset) -> bool:
    a, b = _sign_parts(config, subset)
    fs = X.face_set
    return a in fs and b in fs


def _count_range(X, config, k, firsts):
    matches = checked = 0
    n = X.n
    for first in firsts:
        for rest in combinations(range(first + 1, n), k - 1):
            checked += 1
            if _is_match(X, config, (first,) + rest):
                matches += 1
    return checked, matches


def count_radon_matches(X: SimplicialComplex, config: PointConfiguration, d: int,
                        budget: int = DEFAULT_BUDGET, workers: int = 1) -> MatchReport:
    """Examine every (2d+2)-subset in lexicographic order."""
    _check_inputs(X, config, d)
    k = 2 * d + 2
    total = comb(X.n, k)
    if total > budget:
        raise BudgetExceededError(
            f"C({X.n}, {k}) = {total} subsets exceeds the budget {budget}; use sampled mode")
    if workers <= 1 or X.n - k < 1:
        checked, matches = _count_range(X, config, k, range(X.n - k + 1))
        return MatchReport(checked, matches, "exhaustive", total)
    # split by leading vertex; round-robin keeps the chunks balanced
    chunks = [list(range(X.n - k + 1))[w::workers] for w in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_count_range, [X] * workers, [config] * workers,
                              [k] * workers, chunks))
    return MatchReport(sum(c for c, _ in parts), sum(m for _, m in parts), "exhaustive", total)


def _face_pairs(X, d):
    """Unordered pairs of disjoint faces with 2d+2 vertices in total.

    Balanced pairs (two d-faces) come first since they dominate in practice.
    """
    for small in range(d + 1, 0, -1):
        big = 2 * d + 2 - small
        A = X.faces_of_dim(small - 1)
        if small == big:
            for i, f in enumerate(A):
                fs = set(f)
                for g in A[i + 1:]:
                    if fs.isdisjoint(g):
                        yield f, g
        else:
            B = X.faces_of_dim(big - 1)
            if not B:
                continue
            for f in A:
                fs = set(f)
                for g in B:
                    if fs.isdisjoint(g):
                        yield f, g


def iter_radon_matches(X: SimplicialComplex, config: PointConfiguration, d: int):
    """Yield every Radon match as a pair of faces, by walking face pairs.

    Each match is one unordered pair of disjoint faces whose union has the
    pair as its Radon partition, so this agrees with the exhaustive count.
    """
    _check_inputs(X, config, d)
    for f, g in _face_pairs(X, d):
        subset = tuple(sorted(f + g))
        a, b = _sign_parts(config, subset)
        if {a, b} == {f, g}:
            yield f, g


def has_radon_match(X: SimplicialComplex, config: PointConfiguration, d: int) -> bool:
    return next(iter_radon_matches(X, config, d), None) is not None


def sample_radon_matches(X: SimplicialComplex, config: PointConfiguration, d: int,
                         trials: int, seed: int) -> MatchReport:
    """Hit fraction over uniform random (2d+2)-subsets."""
    _check_inputs(X, config, d)
    if trials < 1:
        raise PreconditionError("trials must be >= 1")
    k = 2 * d + 2
    if X.n < k:
        return MatchReport(trials, 0, "sampled", 0)
    rng = np.random.default_rng(seed)
    hits = 0
    for _ in range(trials):
        subset = tuple(sorted(rng.choice(X.n, size=k, replace=False).tolist()))
        if _is_match(X, config, subset):
            hits += 1
    return MatchReport(trials, hits, "sampled", comb(X.n, k))


def balanced_split_census(config: PointConfiguration, budget: int = DEFAULT_BUDGET) -> MatchReport:
    """Count (m+2)-subsets whose Radon parts have sizes floor/ceil of (m+2)/2.

    With n >= m+3 the count is at least C(n, m+2)/(m+3) for every generic
    configuration; a violation raises.
    """
    m, n = config.m, config.n
    k = m + 2
    if n < k:
        raise PreconditionError("census needs at least m+2 points")
    total = comb(n, k)
    if total > budget:
        raise BudgetExceededError(f"C({n}, {k}) = {total} subsets exceeds the budget {budget}")
    want = k // 2
    hits = 0
    for subset in combinations(range(n), k):
        a, _ = _sign_parts(config, subset)
        if len(a) in (want, k - want):
            hits += 1
    if n >= m + 3 and Fraction(hits, total) < Fraction(1, m + 3):
        raise AssertionError(f"balanced fraction {hits}/{total} below 1/{m + 3}")
    return MatchReport(total, hits, "census", total, total, hits)
