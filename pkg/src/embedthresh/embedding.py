"""Straight-line embeddings of collapsible d-complexes into R^2d.

Faces are added in reverse peel order.  Each face has at least one vertex
not placed yet.  All but one of its new vertices get fresh random integer
positions.  The last one, the free vertex, goes just off the barycenter of
the opposite (d-1)-face sigma, along a random direction.  That direction
spans, with sigma, a random affine d-flat.  The step shrinks until the new
face clears everything placed so far.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import exact
from .collapse import PeelResult, build_hypergraph, two_core
from .complex import SimplicialComplex, dimension
from .errors import ConstructionError, PreconditionError
from .geometry import PointConfiguration

DEFAULT_RETRIES = 32
DEFAULT_COORD_BOUND = 2 ** 31
_DIRECTION_BOUND = 2 ** 20


def _pair_ok(f, g, lifted, d) -> bool:
    """Exact check that faces f and g meet only in their common face."""
    union = sorted(set(f) | set(g))
    rows = [lifted[v] for v in union]
    if len(union) <= 2 * d + 1:
        return exact.affinely_independent(rows)
    mu = exact.null_vector_by_minors(rows)
    if any(x == 0 for x in mu):
        return False
    # Radon partition equals {f, g} iff the signs separate f from g
    side = {v: x > 0 for v, x in zip(union, mu)}
    fa = {side[v] for v in f}
    ga = {side[v] for v in g}
    return not (len(fa) == 1 and len(ga) == 1 and fa != ga)


def _facets(X: SimplicialComplex) -> list:
    """Maximal faces of X."""
    out = []
    for k, layer in enumerate(X.faces):
        above = X.faces_of_dim(k + 1)
        covered = set()
        for f in above:
            covered.update(combinations(f, k + 1))
        out.extend(f for f in layer if f not in covered)
    return out


def verify_embedding(X: SimplicialComplex, config: PointConfiguration, d: int,
                     lower_faces: bool = False) -> bool:
    """Exact certificate that the vertex map embeds X linearly in R^2d.

    Checked: all vertex images are distinct; every pair of d-faces, and
    every d-face against every maximal lower face, either has an affinely
    independent union (<= 2d+1 vertices) or, when two d-faces are disjoint,
    a Radon partition different from the two faces.  ``lower_faces`` also
    checks pairs of maximal lower faces; generic placement makes those pass
    and they dominate the cost, so they are off by default.
    """
    if config.m != 2 * d:
        raise PreconditionError(f"configuration must live in R^{2 * d}")
    if dimension(X) > d:
        raise PreconditionError(f"complex has faces above dimension {d}")
    verts = [f[0] for f in X.faces_of_dim(0)]
    if any(v >= config.n for v in verts):
        raise PreconditionError("some vertex has no position")
    lifted = config.lifted
    seen = set()
    for v in verts:
        if config.points[v] in seen:
            return False
        seen.add(config.points[v])
    top = list(X.faces_of_dim(d))
    low = [f for f in _facets(X) if len(f) <= d]
    for i, f in enumerate(top):
        for g in top[i + 1:]:
            if not _pair_ok(f, g, lifted, d):
                return False
        for g in low:
            if not _pair_ok(f, g, lifted, d):
                return False
    if lower_faces:
        for i, f in enumerate(low):
            for g in low[i + 1:]:
                if len(f) == 1 and len(g) == 1:
                    continue  # distinctness already checked
                if not _pair_ok(f, g, lifted, d):
                    return False
    return True


def _rand_point(rng, m, bound):
    return tuple(Fraction(int(c)) for c in rng.integers(0, bound, size=m))


def _snap(x: Fraction, q: int) -> Fraction:
    return Fraction(round(x * q), q)


def build_embedding(X: SimplicialComplex, peel: PeelResult, d: int, seed: int,
                    coord_bound: int = DEFAULT_COORD_BOUND,
                    retries: int = DEFAULT_RETRIES) -> PointConfiguration:
    """Place every vertex of X in R^2d so that ``verify_embedding`` passes.

    ``peel`` must be the peel of X's d-face hypergraph with an empty core.
    X may carry lower-dimensional faces outside its pure part; their
    vertices are placed at random afterwards.
    """
    if peel.core:
        raise PreconditionError("the d-face hypergraph has a nonempty 2-core")
    if dimension(X) > d:
        raise PreconditionError(f"complex has faces above dimension {d}")
    order = peel.face_order()
    if set(order) != set(X.faces_of_dim(d)):
        raise PreconditionError("peel order does not cover the d-faces of X")
    m = 2 * d
    rng = np.random.default_rng(seed)
    pos = {}
    lifted = {}
    placed = []
    for f in order:
        new = [v for v in f if v not in pos]
        if not new:
            raise ConstructionError(f"face {f} brings no new vertex")
        free = max(new)
        others = [v for v in new if v != free]
        sigma = [v for v in f if v != free]
        for attempt in range(retries):
            trial = {v: _rand_point(rng, m, coord_bound) for v in others}
            coords = {**pos, **trial}
            bary = tuple(sum(coords[v][i] for v in sigma) / len(sigma) for i in range(m))
            w = rng.integers(-_DIRECTION_BOUND, _DIRECTION_BOUND + 1, size=m)
            if not w.any():
                continue
            wn = float(np.linalg.norm(w))
            dists = [math.dist([float(c) for c in bary], [float(c) for c in p])
                     for v, p in coords.items() if v not in sigma]
            reach = (min(dists) / 2.0 if dists and min(dists) > 0 else float(coord_bound)) / wn
            step = reach / 2 ** attempt
            # grid fine enough that snapping moves the point by << step * |w|
            q = 1 << max(8, 30 - math.floor(math.log2(step * wn)))
            point = tuple(_snap(b + Fraction(step) * int(wi), q) for b, wi in zip(bary, w))
            trial[free] = point
            tl = {v: exact.lift(p) for v, p in trial.items()}
            look = {**lifted, **tl}
            if not exact.affinely_independent([look[v] for v in f]):
                continue
            if all(_pair_ok(f, g, look, d) for g in placed):
                pos.update(trial)
                lifted.update(tl)
                placed.append(f)
                break
        else:
            raise ConstructionError(f"no placement for face {f} after {retries} attempts")

    rest = [v for v in range(X.n) if v not in pos]
    for attempt in range(2):
        pts = dict(pos)
        for v in rest:
            pts[v] = _rand_point(rng, m, coord_bound)
        config = PointConfiguration(m, tuple(pts[v] for v in range(X.n)))
        if verify_embedding(X, config, d):
            return config
    raise ConstructionError("random placement of the remaining faces was degenerate twice")


def embed_complex(X: SimplicialComplex, d: int, seed: int, **kwargs) -> PointConfiguration:
    """Peel X's pure d-part and build an embedding; raises on a nonempty core."""
    peel = two_core(build_hypergraph(X, d))
    return build_embedding(X, peel, d, seed, **kwargs)

