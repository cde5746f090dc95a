import math
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from embedthresh.complex import (AlphaVector, SimplicialComplex, contains_face, dimension,
                                 f_vector, face_coins, from_faces, full_simplex, pure_part,
                                 sample_complex, skeleton)
from embedthresh.errors import PreconditionError

INF = math.inf


def downward_closed(X):
    faces = X.face_set
    return all(g in faces for f in faces if len(f) > 1 for g in combinations(f, len(f) - 1))


def test_sample_all_infinite_gives_isolated_vertices():
    X = sample_complex(5, AlphaVector((INF, INF, INF)), 3, seed=123)
    assert f_vector(X) == (5,)


def test_sample_all_zero_gives_full_skeleton():
    X = sample_complex(5, AlphaVector((0, 0)), 2, seed=9)
    assert f_vector(X) == (5, 10, 10)


def test_sample_rejects_bad_arguments():
    with pytest.raises(PreconditionError):
        sample_complex(0, AlphaVector((0,)), 1, 0)
    with pytest.raises(PreconditionError):
        sample_complex(5, AlphaVector((0,)), 0, 0)


def test_edge_count_matches_binomial_mean():
    # mean and variance of Binomial(C(100,2), 100^-0.5)
    n, p = 100, 100 ** -0.5
    trials = comb(n, 2)
    mean, var = trials * p, trials * p * (1 - p)
    assert mean == pytest.approx(495)
    counts = [f_vector(sample_complex(n, AlphaVector((0.5, INF)), 2, seed))[1] for seed in range(200)]
    avg = sum(counts) / len(counts)
    assert abs(avg - mean) <= 3 * math.sqrt(var / len(counts))


def test_triangle_count_matches_binomial_mean():
    # alpha_1 = 0 keeps every edge, so triangles are independent coins
    n = 30
    p = n ** -1.0
    trials = comb(n, 3)
    mean, var = trials * p, trials * p * (1 - p)
    counts = [f_vector(sample_complex(n, AlphaVector((0, 1.0)), 2, seed))[2] for seed in range(200)]
    avg = sum(counts) / len(counts)
    assert abs(avg - mean) <= 3 * math.sqrt(var / len(counts))


def test_higher_faces_need_their_boundary():
    for seed in range(20):
        X = sample_complex(12, AlphaVector((0.3, 0.2, 0.1)), 3, seed)
        assert downward_closed(X)
        assert f_vector(X)[0] == 12


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2 ** 63 - 1),
       a=st.lists(st.floats(0, 2.5), min_size=3, max_size=3),
       bump=st.lists(st.floats(0, 1.0), min_size=3, max_size=3))
def test_monotone_coupling(seed, a, bump):
    lo = AlphaVector(tuple(a))
    hi = AlphaVector(tuple(x + b for x, b in zip(a, bump)))
    X = sample_complex(15, lo, 3, seed)
    Y = sample_complex(15, hi, 3, seed)
    assert Y.face_set <= X.face_set


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2 ** 63 - 1))
def test_determinism(seed):
    alpha = AlphaVector((0.6, 0.4))
    assert sample_complex(20, alpha, 2, seed) == sample_complex(20, alpha, 2, seed)


def test_face_coins_depend_only_on_face():
    import numpy as np
    a = face_coins(5, np.array([[0, 1], [2, 3]]))
    b = face_coins(5, np.array([[2, 3]]))
    assert a[1] == b[0]
    assert 0 <= a.min() and a.max() < 1
    assert face_coins(5, np.array([[0, 1]]))[0] != face_coins(6, np.array([[0, 1]]))[0]


def test_f_vector_examples():
    assert f_vector(full_simplex(4, 3)) == (4, 6, 4, 1)
    assert f_vector(from_faces(5, [])) == (5,)
    assert f_vector(from_faces(3, [(0, 1), (1, 2), (0, 2)])) == (3, 3)


def test_pure_part_examples():
    tri_pendant = from_faces(4, [(0, 1, 2), (2, 3)])
    P = pure_part(tri_pendant, 2)
    assert P.face_set == from_faces(3, [(0, 1, 2)], dim_cap=2).face_set
    assert P.n == 4

    graph = from_faces(4, [(0, 1), (1, 2)], dim_cap=2)
    assert f_vector(pure_part(graph, 2)) == ()

    two = from_faces(4, [(0, 1, 2), (1, 2, 3)])
    assert pure_part(two, 2).face_set == two.face_set


def test_skeleton_contains_dimension():
    assert f_vector(skeleton(full_simplex(4, 3), 1)) == (4, 6)
    assert not contains_face(from_faces(3, [(0, 1), (1, 2), (0, 2)]), (0, 1, 2))
    assert contains_face(full_simplex(3), [2, 0, 1])
    assert dimension(from_faces(5, [])) == 0
    assert dimension(SimplicialComplex(3, 1, ((), ()))) == -1


def test_constructor_rejects_bad_complexes():
    with pytest.raises(PreconditionError):
        SimplicialComplex(3, 1, (((0,), (1,)), ((0, 2),)))  # missing vertex 2
    with pytest.raises(PreconditionError):
        SimplicialComplex(3, 1, (((0,), (1,), (2,)), ((1, 0),)))
    with pytest.raises(PreconditionError):
        SimplicialComplex(3, 1, (((0,), (1,), (5,)),))
    with pytest.raises(PreconditionError):
        SimplicialComplex(3, 0, (((0,), (0,)),))


def test_json_roundtrip_and_revalidation():
    X = sample_complex(10, AlphaVector((0.2, 0.5)), 2, 4)
    assert SimplicialComplex.from_json(X.to_json()) == X
    bad = '{"n": 3, "dim_cap": 1, "faces": [[[0],[1]], [[0,1],[1,2]]]}'
    with pytest.raises(PreconditionError):
        SimplicialComplex.from_json(bad)


def test_alpha_parsing():
    a = AlphaVector.parse("0, inf,2.5")
    assert a.entries == (0.0, INF, 2.5)
    assert a.get(4) == INF
    with pytest.raises(PreconditionError):
        AlphaVector.parse("0,x")
    with pytest.raises(PreconditionError):
        AlphaVector((-1.0,))
    assert AlphaVector((0, 1)).dot((3, 0)) == 0
    assert AlphaVector((0,)).dot((3, 1)) == INF
