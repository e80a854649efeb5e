from fractions import Fraction
from itertools import product

import pytest

import oracles
from nsg import (
    DimensionMismatch,
    Semigroup,
    UnsupportedP,
    build_cone,
    edges_of_cone_star,
    in_sigma_locus,
    interior_shift_check,
    is_in_cone,
    is_in_interior,
    sigma_star_set,
)
from nsg.cone import interior_shift_witness, star_inequalities
from nsg.counting import _iter_points
from nsg.linalg import rank


def test_build_cone_p3():
    cone = build_cone(3)
    assert set(cone.inequalities) == {(1, 1, 2, 0), (2, 2, 1, -1)}
    assert cone.vertex == (Fraction(-1, 3), Fraction(-2, 3))


@pytest.mark.parametrize(
    "p,count", [(3, 2), (4, 4), (5, 8), (6, 12), (7, 18)]
)
def test_facet_counts(p, count):
    cone = build_cone(p)
    assert cone.facet_count == count
    expected = (p - 1) ** 2 // 2 if p % 2 else ((p - 1) ** 2 - 1) // 2
    assert cone.facet_count == expected


def test_vertex_saturates_every_inequality():
    for p in (3, 4, 5, 6, 7):
        cone = build_cone(p)
        v = cone.vertex
        for i, j, k, c in cone.inequalities:
            assert v[i - 1] + v[j - 1] - v[k - 1] == c


def test_membership_examples():
    cone = build_cone(3)
    assert is_in_cone(cone, (2, 4))
    assert is_in_cone(cone, (0, 0)) and not is_in_interior(cone, (0, 0))
    assert is_in_interior(cone, (1, 1))
    with pytest.raises(DimensionMismatch):
        cone.contains((1, 2, 3))


def test_interior_shift_identity():
    assert interior_shift_check(3, 6)
    assert interior_shift_check(4, 5)
    assert interior_shift_check(3, 1)
    assert interior_shift_witness(5, 3) is None
    with pytest.raises(ValueError):
        interior_shift_check(3, 0)


def test_edges_p3():
    assert edges_of_cone_star(3).rays == ((1, 2), (2, 1))


def test_edges_rejects_large_p():
    with pytest.raises(UnsupportedP):
        edges_of_cone_star(11)


def _star_value(p, ray, ineq):
    i, j, k = ineq
    return ray[i - 1] + ray[j - 1] - ray[k - 1]


@pytest.mark.parametrize("p", [3, 4, 5, 6, 7])
def test_edges_are_primitive_boundary_rays(p):
    import math

    edges = edges_of_cone_star(p)
    ineqs = star_inequalities(p)
    for ray in edges.rays:
        assert math.gcd(*ray) == 1
        values = [_star_value(p, ray, ineq) for ineq in ineqs]
        assert all(v >= 0 for v in values)
        active = []
        for ineq, v in zip(ineqs, values):
            if v == 0:
                i, j, k = ineq
                normal = [0] * (p - 1)
                normal[i - 1] += 1
                normal[j - 1] += 1
                normal[k - 1] -= 1
                active.append(normal)
        assert rank(active) == p - 2  # one-dimensional face


@pytest.mark.parametrize("p", [3, 4, 5, 6, 7])
def test_nonnegative_ray_combinations_stay_in_star_cone(p):
    edges = edges_of_cone_star(p)
    ineqs = star_inequalities(p)
    rays = edges.rays
    for a in range(len(rays)):
        for b in range(a, len(rays)):
            for la, lb in ((1, 1), (2, 1), (1, 3), (2, 2)):
                point = tuple(la * x + lb * y for x, y in zip(rays[a], rays[b]))
                assert all(_star_value(p, point, ineq) >= 0 for ineq in ineqs)


@pytest.mark.parametrize("p", [3, 4, 5])
def test_small_star_points_lie_in_ray_span(p):
    edges = edges_of_cone_star(p)
    ineqs = star_inequalities(p)
    for x in product(range(5), repeat=p - 1):
        if all(_star_value(p, x, ineq) >= 0 for ineq in ineqs):
            assert edges.cone_contains(x)


def test_star_cone_contained_in_cone():
    # the homogeneous system is tighter than the affine one
    for p in (3, 4, 5):
        cone = build_cone(p)
        ineqs = star_inequalities(p)
        for x in product(range(4), repeat=p - 1):
            if all(_star_value(p, x, ineq) >= 0 for ineq in ineqs):
                assert cone.contains(x)


def test_sigma_star_p3():
    loci = sigma_star_set(3)
    assert [locus.sigma for locus in loci] == [(1, 2), (2, 1)]
    by_sigma = {locus.sigma: locus for locus in loci}
    # identity: doubling the second coordinate hits the first exactly
    assert by_sigma[(1, 2)].equations == ((2, 2, 1, 0),)
    # transposition: doubled first coordinate exceeds the second by one
    assert by_sigma[(2, 1)].equations == ((1, 1, 2, 1),)


def test_sigma_congruences_hold():
    for p in (3, 4, 5, 7):
        for locus in sigma_star_set(p):
            s = locus.sigma
            for i in range(1, p - 2):
                assert (s[i - 1] + s[p - 3 - i] - s[p - 3]) % p == 0
            assert (2 * s[p - 2] - s[p - 3]) % p == 0


def test_in_sigma_locus_examples():
    loci = {locus.sigma: locus for locus in sigma_star_set(3)}
    assert in_sigma_locus(loci[(1, 2)], (2, 1))
    assert in_sigma_locus(loci[(1, 2)], (0, 0))  # origin solves it, excluded elsewhere
    assert in_sigma_locus(loci[(2, 1)], (1, 1))
    assert not in_sigma_locus(loci[(2, 1)], (2, 1))
    with pytest.raises(DimensionMismatch):
        loci[(1, 2)].contains((1,))


@pytest.mark.parametrize("p", [3, 5])
def test_pseudo_symmetric_locus_equivalence(p):
    # nonzero admissible vectors: pseudo-symmetric iff they solve some locus
    loci = sigma_star_set(p)
    for mu in _iter_points(p, (10,) * (p - 1), max_total=10):
        if not any(mu):
            continue
        in_locus = any(locus.contains(mu) for locus in loci)
        assert in_locus == Semigroup(p, mu).is_pseudo_symmetric()


@pytest.mark.parametrize("p", [5, 7])
def test_pseudo_symmetric_loci_on_boundary(p):
    # for p > 3 every admissible locus point saturates some inequality
    cone = build_cone(p)
    hits = 0
    loci = sigma_star_set(p)
    for x in product(range(6), repeat=p - 1):
        if not cone.contains(x):
            continue
        if any(locus.contains(x) for locus in loci):
            hits += 1
            assert not cone.strictly_contains(x)
    assert hits > 0


@pytest.mark.parametrize("p", [3, 4, 5])
def test_genus_slice_bijection(p):
    # admissible vectors of coordinate sum g match the independent tree oracle
    from collections import Counter

    per_genus = Counter()
    for mu in _iter_points(p, (12,) * (p - 1), max_total=12):
        per_genus[sum(mu)] += 1
    tree = oracles.tree_counts_containing_p(p, 12)
    for g in range(13):
        assert per_genus.get(g, 0) == tree[g]
