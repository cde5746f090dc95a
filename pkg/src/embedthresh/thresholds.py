"""Exponent arithmetic for X(n; n^-alpha) and numeric checks of its lemmas.

The expected number of (s-1)-faces is Theta(n^(s - alpha . v_s)) with
``v_s = (C(s, 2), C(s, 3), ...)``.  Embeddability in R^2d flips where the
d-face exponent crosses 1.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .complex import AlphaVector
from .errors import PreconditionError

CRITICAL_TOL = 1e-12


class Regime(str, enum.Enum):
    SPARSE = "Sparse"
    DENSE = "Dense"
    CRITICAL = "Critical"


@dataclass(frozen=True)
class ExponentReport:
    s: int
    exponent: float
    regime: Regime | None = None


@dataclass(frozen=True)
class JansonReport:
    d: int
    min_exponent: float
    argmin: tuple


def binom_vector(s: int) -> tuple:
    """(C(s, i+1)) for i >= 1, cut after the last nonzero entry."""
    if s < 1:
        raise PreconditionError("s must be >= 1")
    return tuple(comb(s, i + 1) for i in range(1, s))


def face_exponent(s: int, alpha: AlphaVector) -> float:
    """s - alpha . v_s; -inf as soon as an infinite alpha_i has C(s, i+1) > 0."""
    return s - alpha.dot(binom_vector(s))


def exponent_report(d: int, alpha: AlphaVector) -> ExponentReport:
    e = face_exponent(d + 1, alpha)
    return ExponentReport(d + 1, e, classify(d, alpha))


def classify(d: int, alpha: AlphaVector) -> Regime:
    """Which side of the R^2d embedding threshold alpha lies on."""
    if d < 1:
        raise PreconditionError("d must be >= 1")
    e = face_exponent(d + 1, alpha)
    if abs(e - 1.0) <= CRITICAL_TOL:
        return Regime.CRITICAL
    return Regime.SPARSE if e < 1.0 else Regime.DENSE


def janson_exponent(d: int, alpha: AlphaVector) -> JansonReport:
    """Minimise sum_i (m_i - alpha . v_{m_i}) over overlap tuples.

    Each m_i ranges over 1..d+1 and at least one is >= 2.  Ties keep the
    lexicographically first tuple.
    """
    if d < 1:
        raise PreconditionError("d must be >= 1")
    per_size = {m: face_exponent(m, alpha) for m in range(1, d + 2)}
    best, arg = math.inf, None
    for tup in itertools.product(range(1, d + 2), repeat=4):
        if max(tup) < 2:
            continue
        val = math.fsum(per_size[m] for m in tup)
        if arg is None or val < best - CRITICAL_TOL:
            best, arg = val, tup
    return JansonReport(d, best, arg)


def g_count(t: int, d: int, k: int) -> int:
    """k-faces of the d-simplex meeting both a fixed t-set and its complement."""
    if not (1 <= t <= d + 1 and 0 <= k <= d):
        raise PreconditionError("need 1 <= t <= d+1 and 0 <= k <= d")
    return comb(d + 1, k + 1) - comb(t, k + 1) - comb(d + 1 - t, k + 1)


def gamma_bound(t: int, d: int, alpha: AlphaVector) -> float:
    """Upper bound on the change of f_0 - sum alpha_i f_i when a d-face
    brings t new vertices to a weakly connected complex.

    The sum runs over k = 1..d; for k = d the bracket equals 1 (the new
    d-face itself).
    """
    if not 1 <= t <= d:
        raise PreconditionError("need 1 <= t <= d")
    coeffs = [comb(t, k + 1) + g_count(t, d, k) for k in range(1, d + 1)]
    return t - alpha.dot(coeffs)


def simplex_grid(k: int, resolution: int) -> np.ndarray:
    """Barycentric lattice on the (k-1)-simplex: rows of k weights in
    multiples of 1/resolution summing to 1.  Includes every vertex."""
    if k == 1:
        return np.ones((1, 1))
    rows = []
    for bars in itertools.combinations(range(resolution + k - 1), k - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(resolution + k - 2 - prev)
        rows.append(parts)
    return np.asarray(rows, dtype=np.float64) / resolution


def _constraint_points(coeffs, total, resolution):
    """alpha >= 0 with sum_j coeffs[j] alpha_j == total, sampled on a grid.

    The feasible region is a simplex whose vertices put all weight on one
    coordinate; grid points are convex combinations of those vertices.
    """
    w = simplex_grid(len(coeffs), resolution)
    return w * (total / np.asarray(coeffs, dtype=np.float64))


def lemma_vertex_value(s: int, eps, j: int) -> Fraction:
    """s+1 - alpha . v_{s+1} at the vertex with only alpha_{j-1} nonzero and
    s - alpha . v_s = 1 - eps, in closed form."""
    eps = Fraction(eps)
    return 2 - eps - (s - 1 + eps) * Fraction(j, s - j + 1)


def verify_fvector_lemma(s: int, eps: float, grid_resolution: int, part: int | None = None) -> bool:
    """Check both directions of the f-vector monotonicity lemma on a grid.

    Part one (s >= 2): s - alpha . v_s = 1 - eps forces s+1 - alpha . v_{s+1} < 0.
    Part two (s >= 3): s - alpha . v_s = 1 + eps forces s-1 - alpha . v_{s-1} > 1.
    Vertices of the constraint simplex are checked in exact arithmetic, the
    interior grid in floating point.  ``part=None`` runs every part that
    applies to s.
    """
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    parts = [part] if part is not None else [p for p in (1, 2) if (p == 1 and s >= 2) or (p == 2 and s >= 3)]
    eps_q = Fraction(eps)
    for p in parts:
        if p == 1 and s < 2 or p == 2 and s < 3:
            raise PreconditionError(f"part {p} needs larger s")
        vs = binom_vector(s)
        total = s - 1 + eps_q if p == 1 else s - 1 - eps_q
        if total < 0:
            continue  # no alpha >= 0 meets the constraint
        # exact vertex check: only alpha_{j-1} nonzero, j = 2..s
        for j in range(2, s + 1):
            a = total / vs[j - 2]
            if p == 1:
                val = s + 1 - a * comb(s + 1, j)
                if not val < 0 or val != lemma_vertex_value(s, eps_q, j):
                    return False
            else:
                val = s - 1 - a * comb(s - 1, j)
                if not val > 1:
                    return False
        pts = _constraint_points(vs, float(total), grid_resolution)
        if p == 1:
            # alpha_s only lowers the target; alpha_s = 0 is the worst case
            target = np.asarray(binom_vector(s + 1)[:-1], dtype=np.float64)
            vals = (s + 1) - pts @ target
            if not np.all(vals < 0):
                return False
        else:
            target = np.asarray(binom_vector(s - 1), dtype=np.float64)
            vals = (s - 1) - (pts[:, :len(target)] @ target if len(target) else 0.0)
            if not np.all(vals > 1):
                return False
    return True


def verify_gamma_bound(d: int, eps: float, grid_resolution: int) -> bool:
    """gamma(t) < 0 for every t in 1..d on a grid of d+1 - alpha . v_{d+1} = 1 - eps."""
    if not 0 < eps <= 1:
        raise PreconditionError("eps must lie in (0, 1]")
    vs = binom_vector(d + 1)
    pts = _constraint_points(vs, d + eps, grid_resolution)
    for t in range(1, d + 1):
        coeffs = np.asarray([comb(t, k + 1) + g_count(t, d, k) for k in range(1, d + 1)],
                            dtype=np.float64)
        if not np.all(t - pts @ coeffs < 0):
            return False
    return True


def check_ratio_claim(n: int, t: int, k: int) -> bool:
    """t/(n-1) <= (C(n,k) - C(n-t,k)) / C(n,k), exactly."""
    if not (1 <= t <= n - 1 and 2 <= k <= n):
        raise PreconditionError("need 1 <= t <= n-1 and 2 <= k <= n")
    return Fraction(t, n - 1) <= Fraction(comb(n, k) - comb(n - t, k), comb(n, k))


def check_degree_claim(d: int, i: int, m: int) -> bool:
    """C(d+1, i+1) <= d/(i+1) * (2 C(d,i) - C(m,i)), exactly."""
    if not (d >= 1 and 1 <= i <= d and 0 <= m <= d - 1):
        raise PreconditionError("need d >= 1, 1 <= i <= d, 0 <= m <= d-1")
    return comb(d + 1, i + 1) <= Fraction(d, i + 1) * (2 * comb(d, i) - comb(m, i))


def expected_match_exponent(d: int, alpha: AlphaVector) -> float:
    """Exponent of n in the expected number of balanced Radon matches."""
    return 2 * face_exponent(d + 1, alpha)


def match_lower_bound_constant(d: int) -> Fraction:
    """Constant in E[#balanced matches] >= c n^(2d+2) p^2."""
    return Fraction(1, (2 * d + 3) * (2 * d + 2) ** (2 * d + 2))


def log_order_type_bound(n: int, m: int) -> float:
    """Natural log of the simple order type count bound n^(m(m+1)n)."""
    return m * (m + 1) * n * math.log(n)
