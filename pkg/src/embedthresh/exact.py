"""Exact integer linear algebra for the geometric predicates.

Points carry rational coordinates.  A point ``p`` with common denominator
``L`` is lifted to the integer row ``(L*p_1, ..., L*p_m, L)``.  Scaling a row
by a positive integer never changes the sign of a determinant or the rank of
a matrix, so every predicate reduces to fraction-free integer elimination.
"""

from fractions import Fraction
from math import lcm


def to_fraction(x):
    """Parse an int, Fraction, or ``"num/den"`` string into a Fraction.

    Floats are rejected: predicates must never see rounded input.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected exact rational, got {type(x).__name__}")


def lift(point):
    """Integer homogeneous row for a rational point (last entry positive)."""
    den = 1
    for c in point:
        den = lcm(den, c.denominator)
    return tuple(c.numerator * (den // c.denominator) for c in point) + (den,)


def det(rows):
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        (a, b), (c, d) = rows
        return a * d - b * c
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def sign(x):
    return (x > 0) - (x < 0)


def rank(rows):
    """Rank of an integer matrix given as a list of rows."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        for i in range(r + 1, n_rows):
            mic = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, n_cols):
                row_i[j] = (row_i[j] * pivot - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        r += 1
    return r


def affinely_independent(lifted_rows):
    """True iff the points behind ``lifted_rows`` are affinely independent."""
    k = len(lifted_rows)
    if k == 0:
        return True
    if k > len(lifted_rows[0]):
        return False
    return rank(lifted_rows) == k


def null_vector_by_minors(lifted_rows):
    """Signed maximal minors of a (k+1) x k integer system.

    ``lifted_rows`` holds k+1 lifted points of length k.  The returned vector
    ``mu`` satisfies ``sum_i mu_i * row_i == 0``; it is identically zero iff
    the rows have rank < k.
    """
    k1 = len(lifted_rows)
    out = []
    for i in range(k1):
        minor = det(lifted_rows[:i] + lifted_rows[i + 1:])
        out.append(minor if i % 2 == 0 else -minor)
    return out


def solve_rational(a, b):
    """Solve a square system ``a x = b`` over the rationals (Gauss-Jordan).

    Raises ``ZeroDivisionError`` when ``a`` is singular.
    """
    n = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(bv)] for row, bv in zip(a, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [v * inv for v in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [vi - f * vc for vi, vc in zip(m[i], m[c])]
    return [row[n] for row in m]
