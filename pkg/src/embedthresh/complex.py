"""Simplicial complexes and the multiparameter random model X(n; 1, n^-a1, n^-a2, ...).

Faces are strictly increasing tuples of vertex ids.  A complex stores one
sorted tuple of faces per dimension, index 0 holding the vertices.

Sampling is coupled across parameters: every candidate face gets a uniform
coin that is a pure function of ``(seed, face)``, and the face is kept when
the coin falls below ``n**-alpha_i``.  Lowering any exponent can therefore
only add faces.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import PreconditionError

Face = tuple  # strictly increasing tuple of ints

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class AlphaVector:
    """Exponents (alpha_1, alpha_2, ...); p_0 = 1 is implicit.

    Entries past the end of ``entries`` are infinite, i.e. p_i = 0.
    """

    entries: tuple

    def __post_init__(self):
        vals = tuple(float(a) for a in self.entries)
        for a in vals:
            if math.isnan(a) or a < 0:
                raise PreconditionError(f"alpha entries must be in [0, inf], got {a}")
        object.__setattr__(self, "entries", vals)

    @classmethod
    def parse(cls, text: str) -> "AlphaVector":
        """Parse a comma list such as ``"0,inf,2.5"``."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise PreconditionError("empty alpha list")
        vals = []
        for p in parts:
            if p.lower() in ("inf", "infinity", "+inf"):
                vals.append(math.inf)
                continue
            try:
                vals.append(float(p))
            except ValueError:
                raise PreconditionError(f"malformed alpha entry {p!r}") from None
        return cls(tuple(vals))

    def get(self, i: int) -> float:
        """alpha_i for i >= 1 (infinite beyond the stored entries)."""
        if i < 1:
            raise IndexError("alpha is indexed from 1")
        return self.entries[i - 1] if i <= len(self.entries) else math.inf

    def with_entry(self, i: int, value: float) -> "AlphaVector":
        vals = list(self.entries) + [math.inf] * max(0, i - len(self.entries))
        vals[i - 1] = value
        return AlphaVector(tuple(vals))

    def dot(self, coeffs: Sequence[int]) -> float:
        """sum_i alpha_i * coeffs[i-1], with inf * 0 taken as 0."""
        total = 0.0
        for i, c in enumerate(coeffs, start=1):
            if c == 0:
                continue
            a = self.get(i)
            if math.isinf(a):
                return math.inf
            total += a * c
        return total

    def __le__(self, other: "AlphaVector") -> bool:
        k = max(len(self.entries), len(other.entries))
        return all(self.get(i) <= other.get(i) for i in range(1, k + 1))

    def __str__(self):
        return ",".join("inf" if math.isinf(a) else repr(a) for a in self.entries)


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    dim_cap: int
    faces: tuple  # faces[k] = sorted tuple of k-faces

    def __post_init__(self):
        if self.n < 0 or self.dim_cap < 0:
            raise PreconditionError("n and dim_cap must be nonnegative")
        if len(self.faces) > self.dim_cap + 1:
            raise PreconditionError("faces above dim_cap")
        layers = []
        for k, layer in enumerate(self.faces):
            fs = sorted(set(tuple(int(v) for v in f) for f in layer))
            if len(fs) != len(layer):
                raise PreconditionError(f"duplicate {k}-faces")
            for f in fs:
                if len(f) != k + 1:
                    raise PreconditionError(f"face {f} listed in dimension {k}")
                if any(a >= b for a, b in zip(f, f[1:])):
                    raise PreconditionError(f"face {f} is not strictly increasing")
                if f[0] < 0 or f[-1] >= self.n:
                    raise PreconditionError(f"face {f} has a vertex outside [0, {self.n})")
            layers.append(tuple(fs))
        layers += [()] * (self.dim_cap + 1 - len(layers))
        object.__setattr__(self, "faces", tuple(layers))
        for k in range(1, len(layers)):
            below = set(layers[k - 1])
            for f in layers[k]:
                for g in combinations(f, k):
                    if g not in below:
                        raise PreconditionError(f"not downward closed: {f} lacks facet {g}")

    @cached_property
    def face_set(self) -> frozenset:
        return frozenset(f for layer in self.faces for f in layer)

    def faces_of_dim(self, k: int) -> tuple:
        if 0 <= k < len(self.faces):
            return self.faces[k]
        return ()

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "dim_cap": self.dim_cap,
             "faces": [[list(f) for f in layer] for layer in self.faces]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        obj = json.loads(text)
        try:
            faces = tuple(tuple(tuple(f) for f in layer) for layer in obj["faces"])
            return cls(int(obj["n"]), int(obj["dim_cap"]), faces)
        except (KeyError, TypeError) as exc:
            raise PreconditionError(f"malformed complex JSON: {exc}") from None


def from_faces(n: int, faces: Iterable[Iterable[int]], dim_cap: int | None = None,
               with_vertices: bool = True) -> SimplicialComplex:
    """Downward closure of ``faces``, plus all n vertices when requested."""
    closed = set()
    for f in faces:
        f = tuple(sorted(set(f)))
        for k in range(1, len(f) + 1):
            closed.update(combinations(f, k))
    if with_vertices:
        closed.update((v,) for v in range(n))
    top = max((len(f) for f in closed), default=0) - 1
    cap = max(top, 0) if dim_cap is None else dim_cap
    layers = [[] for _ in range(cap + 1)]
    for f in closed:
        if len(f) - 1 > cap:
            raise PreconditionError(f"face {f} exceeds dim_cap {cap}")
        layers[len(f) - 1].append(f)
    return SimplicialComplex(n, cap, tuple(tuple(sorted(x)) for x in layers))


def full_simplex(k: int, dim_cap: int | None = None) -> SimplicialComplex:
    """All faces of the simplex on vertices 0..k-1 up to ``dim_cap``."""
    cap = k - 1 if dim_cap is None else dim_cap
    layers = tuple(tuple(combinations(range(k), j + 1)) for j in range(cap + 1))
    return SimplicialComplex(k, cap, layers)


def f_vector(X: SimplicialComplex) -> tuple:
    """Face counts (f_0, f_1, ...) truncated after the last nonzero entry."""
    counts = [len(layer) for layer in X.faces]
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def dimension(X: SimplicialComplex) -> int:
    return len(f_vector(X)) - 1


def contains_face(X: SimplicialComplex, face: Iterable[int]) -> bool:
    return tuple(sorted(face)) in X.face_set


def skeleton(X: SimplicialComplex, k: int) -> SimplicialComplex:
    cap = min(k, X.dim_cap)
    return SimplicialComplex(X.n, cap, X.faces[:cap + 1])


def pure_part(X: SimplicialComplex, d: int) -> SimplicialComplex:
    """Downward closure of the d-faces; vertex labels are kept as they are."""
    if d > X.dim_cap:
        raise PreconditionError(f"d={d} exceeds dim_cap={X.dim_cap}")
    top = X.faces_of_dim(d)
    layers = [set() for _ in range(d + 1)]
    for f in top:
        for k in range(d + 1):
            layers[k].update(combinations(f, k + 1))
    layers += [set()] * (X.dim_cap - d)
    return SimplicialComplex(X.n, X.dim_cap, tuple(tuple(sorted(s)) for s in layers))


def induced_subcomplex(X: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    """All faces of X whose vertices lie in ``vertices``."""
    keep = set(vertices)
    layers = tuple(tuple(f for f in layer if keep.issuperset(f)) for layer in X.faces)
    return SimplicialComplex(X.n, X.dim_cap, layers)


# -- sampling ---------------------------------------------------------------

def _splitmix(x):
    x = x + np.uint64(0x9E3779B97F4A7C15)
    x = (x ^ (x >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    x = (x ^ (x >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return x ^ (x >> np.uint64(31))


def face_coins(seed: int, faces: np.ndarray) -> np.ndarray:
    """Uniform [0, 1) coin per row of ``faces`` (an int array, one face per row).

    The coin depends only on the seed, the face dimension, and its vertices.
    """
    faces = np.asarray(faces, dtype=np.uint64)
    if faces.ndim != 2:
        raise ValueError("faces must be a 2-d array")
    k = faces.shape[1]
    with np.errstate(over="ignore"):
        h = np.full(faces.shape[0], (seed & _MASK64) ^ (k * 0xD1B54A32D192ED03 & _MASK64),
                    dtype=np.uint64)
        h = _splitmix(h)
        for j in range(k):
            h = _splitmix(h ^ (faces[:, j] + np.uint64(1)))
    return (h >> np.uint64(11)).astype(np.float64) * (1.0 / 9007199254740992.0)


def _candidates(n: int, k: int, lower: tuple, lower_set: set, upper_nbrs: list) -> list:
    """k-faces all of whose facets lie in ``lower`` (the (k-1)-faces), lex order."""
    out = []
    for tau in lower:
        common = upper_nbrs[tau[0]]
        for v in tau[1:]:
            common = common & upper_nbrs[v]
            if not common:
                break
        if not common:
            continue
        last = tau[-1]
        for w in sorted(common):
            if w <= last:
                continue
            cand = tau + (w,)
            # edges are guaranteed by the neighbour sets; higher facets are not
            if k >= 3 and any(cand[:i] + cand[i + 1:] not in lower_set for i in range(k)):
                continue
            out.append(cand)
    return out


def sample_complex(n: int, alpha: AlphaVector, dim_cap: int, seed: int) -> SimplicialComplex:
    """Draw X ~ X(n; 1, n^-alpha_1, ..., n^-alpha_dim_cap).

    Dimensions are filled in increasing order; a candidate i-face (full
    boundary present) survives with probability ``n**-alpha_i``.
    """
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if dim_cap < 1:
        raise PreconditionError("dim_cap must be >= 1")
    layers = [tuple((v,) for v in range(n))]
    upper_nbrs = None
    for k in range(1, dim_cap + 1):
        a = alpha.get(k)
        if math.isinf(a) or not layers[-1]:
            layers.append(())
            continue
        p = float(n) ** (-a)
        if k == 1:
            iu, ju = np.triu_indices(n, 1)
            cand = np.stack([iu, ju], axis=1)
            keep = face_coins(seed, cand) < p
            layer = tuple(zip(iu[keep].tolist(), ju[keep].tolist()))
            upper_nbrs = [set() for _ in range(n)]
            for u, v in layer:
                upper_nbrs[u].add(v)
        else:
            cands = _candidates(n, k, layers[-1], set(layers[-1]), upper_nbrs)
            if cands:
                keep = face_coins(seed, np.array(cands, dtype=np.int64)) < p
                layer = tuple(c for c, kp in zip(cands, keep) if kp)
            else:
                layer = ()
        layers.append(layer)
    return SimplicialComplex(n, dim_cap, tuple(layers))
