"""Free-vertex peeling of the d-face hypergraph.

A vertex of degree <= 1 is removed together with the hyperedge holding it.
What survives is the 2-core.  When the core is empty, reading the removals
backwards gives an ordering of the d-faces in which every face brings at
least one vertex unseen by the faces before it.
"""

from __future__ import annotations

import heapq
import json
import math
from dataclasses import dataclass

from .complex import AlphaVector, SimplicialComplex, f_vector
from .errors import PreconditionError


@dataclass(frozen=True)
class DFaceHypergraph:
    d: int
    vertices: tuple
    edges: tuple

    def __post_init__(self):
        for e in self.edges:
            if len(e) != self.d + 1:
                raise PreconditionError(f"hyperedge {e} does not have {self.d + 1} vertices")


@dataclass(frozen=True)
class PeelResult:
    order: tuple  # (vertex, hyperedge or None) in removal order
    core: tuple

    @property
    def collapsible(self) -> bool:
        return not self.core

    def face_order(self) -> list:
        """d-faces f_1, ..., f_k: the last face peeled comes first."""
        return [e for _, e in reversed(self.order) if e is not None]

    def to_json(self) -> str:
        return json.dumps(
            {"order": [[v, list(e) if e is not None else None] for v, e in self.order],
             "core": [list(e) for e in self.core]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "PeelResult":
        obj = json.loads(text)
        order = tuple((int(v), tuple(e) if e is not None else None) for v, e in obj["order"])
        return cls(order, tuple(tuple(e) for e in obj["core"]))


def build_hypergraph(X: SimplicialComplex, d: int) -> DFaceHypergraph:
    if d < 1:
        raise PreconditionError("d must be >= 1")
    edges = X.faces_of_dim(d)
    verts = sorted({v for e in edges for v in e})
    return DFaceHypergraph(d, tuple(verts), tuple(edges))


def two_core(H: DFaceHypergraph) -> PeelResult:
    """Peel vertices of degree <= 1, smallest id first."""
    incident = {v: set() for v in H.vertices}
    for idx, e in enumerate(H.edges):
        for v in e:
            incident[v].add(idx)
    alive = [True] * len(H.edges)
    heap = [v for v, s in incident.items() if len(s) <= 1]
    heapq.heapify(heap)
    removed = set()
    order = []
    while heap:
        v = heapq.heappop(heap)
        if v in removed:
            continue
        removed.add(v)
        if not incident[v]:
            order.append((v, None))
            continue
        (idx,) = incident[v]
        alive[idx] = False
        edge = H.edges[idx]
        for u in edge:
            incident[u].discard(idx)
            if u not in removed and len(incident[u]) <= 1:
                heapq.heappush(heap, u)
        order.append((v, edge))
    core = tuple(e for e, a in zip(H.edges, alive) if a)
    return PeelResult(tuple(order), core)


def peel_with_order(H: DFaceHypergraph, choose) -> tuple:
    """Peel using ``choose(eligible_vertices)`` to pick each removal.

    Returns the residual core; used to check order independence.
    """
    incident = {v: set() for v in H.vertices}
    for idx, e in enumerate(H.edges):
        for v in e:
            incident[v].add(idx)
    alive = [True] * len(H.edges)
    remaining = set(H.vertices)
    while True:
        eligible = sorted(v for v in remaining if len(incident[v]) <= 1)
        if not eligible:
            break
        v = choose(eligible)
        remaining.discard(v)
        for idx in list(incident[v]):
            alive[idx] = False
            for u in H.edges[idx]:
                incident[u].discard(idx)
    return tuple(e for e, a in zip(H.edges, alive) if a)


def weakly_connected_components(X: SimplicialComplex, d: int) -> list:
    """d-faces grouped by the relation 'shares at least one vertex'."""
    if d < 1:
        raise PreconditionError("d must be >= 1")
    faces = X.faces_of_dim(d)
    parent = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for f in faces:
        for v in f:
            parent.setdefault(v, v)
        r0 = find(f[0])
        for v in f[1:]:
            r = find(v)
            if r != r0:
                parent[r] = r0
    groups = {}
    for f in faces:
        groups.setdefault(find(f[0]), []).append(f)
    comps = [frozenset(g) for g in groups.values()]
    comps.sort(key=min)
    return comps


def component_vertex_count(component) -> int:
    return len({v for f in component for v in f})


def max_component_vertices(X: SimplicialComplex, d: int) -> int:
    return max((component_vertex_count(c) for c in weakly_connected_components(X, d)), default=0)


def f_dot(X: SimplicialComplex, alpha: AlphaVector, d: int) -> float:
    """f_0 - sum_{i=1..d} alpha_i f_i."""
    f = f_vector(X)
    total = float(f[0]) if f else 0.0
    for i in range(1, d + 1):
        fi = f[i] if i < len(f) else 0
        if fi == 0:
            continue
        a = alpha.get(i)
        if math.isinf(a):
            return -math.inf
        total -= a * fi
    return total
