"""Exact geometric predicates on labelled rational point configurations.

Orientation signs, order types and Radon partitions all come from maximal
minors of the lifted matrix whose columns are ``(p_i, 1)``.  For m+2 points
in R^m the signed minors give the (unique up to scale) affine dependence, so
its sign pattern is the Radon partition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from . import exact
from .errors import DegeneracyError, PreconditionError


@dataclass(frozen=True)
class PointConfiguration:
    m: int
    points: tuple  # tuple of tuples of Fraction
    lifted: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        try:
            pts = tuple(tuple(exact.to_fraction(c) for c in p) for p in self.points)
        except (TypeError, ValueError) as exc:
            raise PreconditionError(f"bad coordinate: {exc}") from None
        for p in pts:
            if len(p) != self.m:
                raise PreconditionError(f"point {p} is not in R^{self.m}")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "lifted", tuple(exact.lift(p) for p in pts))

    @property
    def n(self) -> int:
        return len(self.points)

    def to_json(self) -> str:
        def fmt(c):
            return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        return json.dumps({"m": self.m, "points": [[fmt(c) for c in p] for p in self.points]},
                          separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "PointConfiguration":
        obj = json.loads(text)
        try:
            return cls(int(obj["m"]), tuple(tuple(p) for p in obj["points"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise PreconditionError(f"malformed configuration JSON: {exc}") from None


@dataclass(frozen=True)
class RadonPartition:
    """Disjoint parts whose convex hulls meet.

    ``weights`` maps every label to a positive Fraction; the weights of each
    part sum to 1, so both weighted averages are the same point.
    """

    part_a: tuple
    part_b: tuple
    weights: dict = field(compare=False)

    def as_pair(self) -> frozenset:
        return frozenset((frozenset(self.part_a), frozenset(self.part_b)))

    def sizes(self) -> tuple:
        return tuple(sorted((len(self.part_a), len(self.part_b))))

    def common_point(self, config: PointConfiguration, part: str = "a") -> tuple:
        labels = self.part_a if part == "a" else self.part_b
        pt = [Fraction(0)] * config.m
        for lab in labels:
            w = self.weights[lab]
            for i, c in enumerate(config.points[lab]):
                pt[i] += w * c
        return tuple(pt)


@dataclass(frozen=True)
class OrderType:
    n: int
    m: int
    signs: tuple


def orientation(points: Sequence) -> int:
    """Sign of det [[p_1 ... p_{m+1}], [1 ... 1]]."""
    pts = [tuple(exact.to_fraction(c) for c in p) for p in points]
    m = len(pts) - 1
    if any(len(p) != m for p in pts):
        raise PreconditionError("orientation needs m+1 points in R^m")
    return exact.sign(exact.det([exact.lift(p) for p in pts]))


def _orient_rows(rows) -> int:
    return exact.sign(exact.det(list(rows)))


def order_type(config: PointConfiguration) -> OrderType:
    m = config.m
    if config.n < m + 1:
        raise PreconditionError("order type needs at least m+1 points")
    signs = []
    for sub in combinations(range(config.n), m + 1):
        s = _orient_rows(config.lifted[i] for i in sub)
        if s == 0:
            raise DegeneracyError(f"points {sub} are affinely dependent", sub)
        signs.append(s)
    return OrderType(config.n, m, tuple(signs))


def _radon_from_lifted(rows, labels) -> RadonPartition:
    mu = exact.null_vector_by_minors(list(rows))
    if all(x == 0 for x in mu):
        raise DegeneracyError(f"points {tuple(labels)} do not affinely span", labels)
    if any(x == 0 for x in mu):
        raise DegeneracyError(f"points {tuple(labels)} are not in general position", labels)
    # undo the row scaling: lambda_i = mu_i * L_i, L_i > 0
    lam = [x * r[-1] for x, r in zip(mu, rows)]
    if lam[0] < 0:
        lam = [-x for x in lam]
    pos = [(lab, x) for lab, x in zip(labels, lam) if x > 0]
    neg = [(lab, -x) for lab, x in zip(labels, lam) if x < 0]
    total = sum(x for _, x in pos)
    weights = {lab: Fraction(x, total) for lab, x in pos + neg}
    return RadonPartition(tuple(lab for lab, _ in pos), tuple(lab for lab, _ in neg), weights)


def radon_partition(points: Sequence, labels: Sequence | None = None) -> RadonPartition:
    """Unique Radon partition of m+2 generic points in R^m.

    Parts are labelled by ``labels`` (default 0..m+1); ``part_a`` holds the
    first label.
    """
    pts = [tuple(exact.to_fraction(c) for c in p) for p in points]
    m = len(pts) - 2
    if m < 1 or any(len(p) != m for p in pts):
        raise PreconditionError("radon_partition needs m+2 points in R^m")
    labels = tuple(range(len(pts))) if labels is None else tuple(labels)
    return _radon_from_lifted([exact.lift(p) for p in pts], labels)


def config_radon(config: PointConfiguration, subset: Sequence[int]) -> RadonPartition:
    """Radon partition of the labelled points ``subset`` (length m+2)."""
    if len(subset) != config.m + 2:
        raise PreconditionError("subset must have m+2 labels")
    return _radon_from_lifted([config.lifted[i] for i in subset], tuple(subset))


def hulls_intersect(A: Sequence[int], B: Sequence[int], config: PointConfiguration) -> bool:
    """conv(A) meets conv(B) for disjoint label sets with |A| + |B| = m + 2."""
    a, b = frozenset(A), frozenset(B)
    if a & b:
        raise PreconditionError("A and B must be disjoint")
    if len(a) + len(b) != config.m + 2:
        raise PreconditionError("|A| + |B| must equal m + 2")
    part = config_radon(config, sorted(a | b))
    return part.as_pair() == frozenset((a, b))


def simplices_intersect(A: Sequence[int], B: Sequence[int], config: PointConfiguration) -> bool:
    """Do the d-simplices on A and B (d+1 labels each) meet in R^2d?"""
    if len(A) != len(B):
        raise PreconditionError("A and B must have the same size d+1")
    if config.m != 2 * (len(A) - 1):
        raise PreconditionError(f"configuration must live in R^{2 * (len(A) - 1)}")
    return hulls_intersect(A, B, config)


def affinely_independent(config: PointConfiguration, labels: Sequence[int]) -> bool:
    return exact.affinely_independent([config.lifted[i] for i in labels])


def random_configuration(n: int, m: int, coord_bound: int, seed: int) -> PointConfiguration:
    """n points with integer coordinates uniform in [0, coord_bound)."""
    if n < 1 or m < 1:
        raise PreconditionError("need n >= 1 and m >= 1")
    if coord_bound < n * m:
        raise PreconditionError("coord_bound must be at least n*m")
    rng = np.random.default_rng(seed)
    coords = rng.integers(0, coord_bound, size=(n, m), dtype=np.int64).tolist()
    return PointConfiguration(m, tuple(tuple(Fraction(c) for c in p) for p in coords))


def resample_seed(seed: int) -> int:
    """Seed used for the single retry after a degenerate configuration."""
    return int(np.random.SeedSequence([seed & ((1 << 64) - 1), 0x5EED]).generate_state(1, np.uint64)[0])


def with_generic_configuration(n, m, coord_bound, seed, fn):
    """Run ``fn(config)`` on a random configuration, resampling once on degeneracy."""
    try:
        return fn(random_configuration(n, m, coord_bound, seed))
    except DegeneracyError:
        return fn(random_configuration(n, m, coord_bound, resample_seed(seed)))


def affine_image(config: PointConfiguration, matrix, shift) -> PointConfiguration:
    """Apply p -> matrix @ p + shift exactly (integer or Fraction entries)."""
    mat = [[exact.to_fraction(x) for x in row] for row in matrix]
    sh = [exact.to_fraction(x) for x in shift]
    pts = tuple(tuple(sum(r[j] * p[j] for j in range(config.m)) + sh[i] for i, r in enumerate(mat))
                for p in config.points)
    return PointConfiguration(config.m, pts)


def moment_curve(n: int, m: int, start: int = 1) -> PointConfiguration:
    """Points (t, t^2, ..., t^m) for t = start..start+n-1 (convex position)."""
    return PointConfiguration(m, tuple(tuple(Fraction(t ** k) for k in range(1, m + 1))
                                       for t in range(start, start + n)))
