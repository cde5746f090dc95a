from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from embedthresh.errors import DegeneracyError, PreconditionError
from embedthresh.geometry import (PointConfiguration, affine_image, affinely_independent,
                                  config_radon, hulls_intersect, moment_curve, order_type,
                                  orientation, radon_partition, random_configuration,
                                  simplices_intersect, with_generic_configuration)
from oracles import hulls_meet_lp, radon_by_elimination

coords = st.integers(-40, 40)


def points_in(m, k):
    return st.lists(st.tuples(*[coords] * m), min_size=k, max_size=k)


def test_orientation_examples():
    assert orientation([(0, 0), (1, 0), (0, 1)]) == 1
    assert orientation([(0, 0), (0, 1), (1, 0)]) == -1
    assert orientation([(0, 0), (1, 1), (2, 2)]) == 0
    assert orientation([(Fraction(1, 3),), (0,)]) == 1
    assert orientation([(0,), (Fraction(1, 3),)]) == -1
    with pytest.raises(PreconditionError):
        orientation([(0, 0), (1, 0)])


@settings(max_examples=100)
@given(points_in(2, 3))
def test_orientation_alternates_under_swaps(pts):
    s = orientation(pts)
    assert orientation([pts[1], pts[0], pts[2]]) == -s
    assert orientation([pts[1], pts[2], pts[0]]) == s


def test_order_type_of_convex_position():
    cfg = moment_curve(6, 2)
    assert set(order_type(cfg).signs) == {1}
    with pytest.raises(DegeneracyError):
        order_type(PointConfiguration(2, ((0, 0), (1, 1), (2, 2), (0, 5))))


def test_radon_examples():
    sq = radon_partition([(0, 0), (1, 1), (1, 0), (0, 1)])
    assert sq.as_pair() == frozenset({frozenset({0, 1}), frozenset({2, 3})})
    assert sq.sizes() == (2, 2)
    tri = radon_partition([(0, 0), (4, 0), (1, 1), (0, 4)])
    assert tri.as_pair() == frozenset({frozenset({2}), frozenset({0, 1, 3})})
    assert tri.part_a == (0, 1, 3)  # first label is on side a
    with pytest.raises(DegeneracyError):
        radon_partition([(0, 0), (1, 0), (2, 0), (0, 1)])


def test_radon_weights_give_common_point():
    cfg = PointConfiguration(2, ((0, 0), (4, 0), (1, 1), (0, 4)))
    part = config_radon(cfg, (0, 1, 2, 3))
    assert part.common_point(cfg, "a") == part.common_point(cfg, "b") == (1, 1)
    assert all(w > 0 for w in part.weights.values())
    assert sum(part.weights[i] for i in part.part_a) == 1


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: points_in(m, m + 2)))
def test_radon_agrees_with_elimination(pts):
    ref = radon_by_elimination(pts)
    if ref is None:
        with pytest.raises(DegeneracyError):
            radon_partition(pts)
        return
    part = radon_partition(pts)
    assert part.as_pair() == ref
    cfg = PointConfiguration(len(pts[0]), tuple(pts))
    assert part.common_point(cfg, "a") == part.common_point(cfg, "b")


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3).flatmap(lambda m: points_in(m, m + 2)), st.randoms(use_true_random=False))
def test_radon_relabel_invariant(pts, rnd):
    assume(radon_by_elimination(pts) is not None)
    perm = list(range(len(pts)))
    rnd.shuffle(perm)
    base = radon_partition(pts)
    moved = radon_partition([pts[i] for i in perm], labels=perm)
    assert moved.as_pair() == base.as_pair()


@settings(max_examples=100, deadline=None)
@given(points_in(2, 4), st.integers(1, 9), st.tuples(coords, coords))
def test_radon_invariant_under_scaling_and_translation(pts, k, t):
    assume(radon_by_elimination(pts) is not None)
    moved = [(k * x + t[0], k * y + t[1]) for x, y in pts]
    assert radon_partition(moved).as_pair() == radon_partition(pts).as_pair()


@settings(max_examples=80, deadline=None)
@given(points_in(2, 6), st.tuples(*[st.integers(-5, 5)] * 4), st.tuples(coords, coords))
def test_affine_maps_preserve_order_type_and_radon(pts, mat, shift):
    cfg = PointConfiguration(2, tuple(pts))
    try:
        ot = order_type(cfg)
    except DegeneracyError:
        assume(False)
    a, b, c, dd = mat
    assume(a * dd - b * c > 0)
    img = affine_image(cfg, [[a, b], [c, dd]], shift)
    assert order_type(img) == ot
    for sub in combinations(range(6), 4):
        assert config_radon(img, sub).as_pair() == config_radon(cfg, sub).as_pair()


def test_hulls_intersect_matches_lp_on_random_configs():
    for seed in range(20):
        cfg = random_configuration(6, 2, 1000, seed)
        for A in combinations(range(4), 2):
            B = tuple(sorted(set(range(4)) - set(A)))
            try:
                got = hulls_intersect(A, B, cfg)
            except DegeneracyError:
                continue
            pa = [cfg.points[i] for i in A]
            pb = [cfg.points[i] for i in B]
            assert got == hulls_meet_lp(pa, pb)


def test_simplices_intersect_examples():
    cross = PointConfiguration(2, ((0, 0), (2, 2), (0, 2), (2, 0)))
    assert simplices_intersect((0, 1), (2, 3), cross)
    assert simplices_intersect((2, 3), (0, 1), cross)
    assert not simplices_intersect((0, 2), (1, 3), cross)
    with pytest.raises(PreconditionError):
        simplices_intersect((0,), (1, 2), cross)
    with pytest.raises(PreconditionError):
        hulls_intersect((0, 1), (1, 2), cross)


def test_affine_independence():
    cfg = PointConfiguration(2, ((0, 0), (1, 0), (2, 0), (0, 1)))
    assert affinely_independent(cfg, (0, 1, 3))
    assert not affinely_independent(cfg, (0, 1, 2))


def test_random_configuration():
    a = random_configuration(10, 4, 10 ** 6, 3)
    assert a == random_configuration(10, 4, 10 ** 6, 3)
    assert a != random_configuration(10, 4, 10 ** 6, 4)
    assert all(0 <= c < 10 ** 6 and c.denominator == 1 for p in a.points for c in p)
    with pytest.raises(PreconditionError):
        random_configuration(10, 4, 39, 0)


def test_with_generic_configuration_resamples_once():
    calls = []

    def fn(cfg):
        calls.append(cfg)
        if len(calls) == 1:
            raise DegeneracyError("forced", ())
        return cfg.n

    assert with_generic_configuration(5, 2, 100, 1, fn) == 5
    assert len(calls) == 2 and calls[0] != calls[1]


def test_configuration_json():
    cfg = PointConfiguration(2, ((Fraction(1, 3), -2), (0, Fraction(7, 2))))
    assert PointConfiguration.from_json(cfg.to_json()) == cfg
    with pytest.raises(PreconditionError):
        PointConfiguration.from_json('{"m": 2, "points": [["1"]]}')
    with pytest.raises(PreconditionError):
        PointConfiguration(2, ((1.5, 0),))
