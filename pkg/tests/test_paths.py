import math

import pytest

import oracles
from nsg import (
    LatticePath,
    NotAdmissible,
    NotAGap,
    NotContainingQ,
    NotCoprime,
    PathSystem,
    PointOutsideTriangle,
    count_admissible,
    count_containing,
    from_generators,
    is_admissible,
    iter_admissible,
    path_from_semigroup,
    semigroup_from_path,
    verify_path_recursions,
)
from nsg.paths import _iter_admissible_heights, _semigroup_from_heights


def test_system_canonicalizes_order():
    sys32 = PathSystem(3, 2)
    assert (sys32.p, sys32.q) == (2, 3)
    with pytest.raises(ValueError):
        PathSystem(3, 3)
    with pytest.raises(NotCoprime):
        PathSystem(3, 9)


def test_triangle_size():
    for p, q in ((3, 4), (3, 7), (4, 7), (4, 9), (5, 7)):
        system = PathSystem(p, q)
        assert len(system.triangle_points()) == (p - 1) * (q - 1) // 2


def test_gap_point_examples():
    s34 = PathSystem(3, 4)
    assert s34.gap_of_point(0, 0) == 5
    assert PathSystem(4, 7).gap_of_point(0, 2) == 3
    assert sorted(s34.gap_of_point(a, b) for a, b in s34.triangle_points()) == (
        oracles.sieve_gaps((3, 4))
    )


def test_gap_point_bijection():
    for p, q in ((3, 4), (3, 7), (4, 9), (5, 7)):
        system = PathSystem(p, q)
        for a, b in system.triangle_points():
            gap = system.gap_of_point(a, b)
            assert system.point_of_gap(gap) == (a, b)
        for gap in oracles.sieve_gaps((p, q)):
            a, b = system.point_of_gap(gap)
            assert system.gap_of_point(a, b) == gap


def test_gap_point_errors():
    system = PathSystem(3, 4)
    with pytest.raises(PointOutsideTriangle):
        system.gap_of_point(2, 0)
    with pytest.raises(PointOutsideTriangle):
        system.gap_of_point(-1, 0)
    with pytest.raises(NotAGap):
        system.point_of_gap(3)
    with pytest.raises(NotAGap):
        system.point_of_gap(4)  # a member of <3, 4>
    with pytest.raises(NotAGap):
        system.point_of_gap(17)


def test_lattice_path_shapes():
    empty = LatticePath.from_heights(())
    assert empty.is_empty and empty.corners == ()
    single = LatticePath.from_heights((1,))
    assert single.corners == ((0, 0),)
    tall = LatticePath.from_heights((3,))
    assert tall.corners == ((0, 2), (0, 0))
    steps = LatticePath.from_heights((2, 2, 1))
    assert steps.corners == ((0, 1), (1, 1), (2, 0))
    assert steps.heights() == (2, 2, 1)
    assert len(steps.points) == 5
    with pytest.raises(ValueError):
        LatticePath.from_heights((1, 2))


def test_empty_path_is_admissible_and_gives_base_semigroup():
    system = PathSystem(3, 5)
    empty = LatticePath.from_heights(())
    assert is_admissible(system, empty)
    assert semigroup_from_path(system, empty).mu == from_generators({3, 5}, 3).mu


def test_full_triangle_path_gives_full_semigroup():
    system = PathSystem(3, 4)
    full = LatticePath.from_heights((2, 1))
    assert is_admissible(system, full)
    assert semigroup_from_path(system, full).mu == (0, 0)


def test_single_closed_gap():
    system = PathSystem(3, 5)
    path = LatticePath.from_heights((1,))
    s = semigroup_from_path(system, path)
    assert s.mu == from_generators({3, 5, 7}, 3).mu
    assert path_from_semigroup(system, s) == path


def test_admissibility_matches_brute_force():
    for p, q in ((3, 4), (3, 7), (4, 7), (5, 6)):
        system = PathSystem(p, q)
        caps = system.column_caps()
        brute = set(oracles.brute_admissible_profiles(p, q, caps))
        for profile in oracles.staircase_profiles(caps):
            if not profile:
                continue
            path = LatticePath.from_heights(profile)
            assert is_admissible(system, path) == (profile in brute)
        assert set(_iter_admissible_heights(system)) == brute


def test_admissible_paths_give_semigroups_and_back():
    for p, q in ((3, 4), (3, 5), (4, 7), (5, 7)):
        system = PathSystem(p, q)
        seen = set()
        for path in iter_admissible(system):
            s = semigroup_from_path(system, path)
            assert s.contains(q)
            assert path_from_semigroup(system, s) == path
            seen.add(s.mu)
        assert len(seen) == count_admissible(system)


def test_inadmissible_path_rejected():
    system = PathSystem(3, 4)
    bad = LatticePath.from_heights((1, 0, 0))  # trailing zeros: same as (1,)
    assert not bad.is_empty
    crooked = LatticePath.from_heights((2,))
    assert not is_admissible(system, crooked)
    with pytest.raises(NotAdmissible):
        semigroup_from_path(system, crooked)


def test_path_from_semigroup_validates():
    system = PathSystem(3, 5)
    with pytest.raises(NotContainingQ):
        path_from_semigroup(system, from_generators({3, 4}, 3))  # 5 is a gap
    with pytest.raises(ValueError):
        path_from_semigroup(system, from_generators({4, 5}, 4))


def test_count_admissible_examples():
    assert count_admissible(PathSystem(3, 4)) == 3
    assert count_admissible(PathSystem(4, 7)) == 16
    assert count_admissible(PathSystem(3, 7)) == 7
    assert count_admissible(PathSystem(3, 2)) == 1
    assert count_admissible(PathSystem(5, 1)) == 0  # only the base semigroup


@pytest.mark.parametrize("p", [3, 4, 5])
def test_path_count_matches_containment_count(p):
    for q in range(1, 41):
        if q == p or math.gcd(p, q) != 1:
            continue
        system = PathSystem(p, q)
        assert count_admissible(system) + 1 == count_containing(p, q)


def test_monotone_in_q_and_p():
    for p in (3, 4, 5):
        values = [
            count_admissible(PathSystem(p, q))
            for q in range(p + 1, 41)
            if math.gcd(p, q) == 1
        ]
        assert values == sorted(values)
    # increasing in p as well, along a shared coprime q
    assert count_admissible(PathSystem(3, 7)) <= count_admissible(PathSystem(4, 7))
    assert count_admissible(PathSystem(4, 7)) <= count_admissible(PathSystem(5, 7))


def test_recursion_report_p3():
    report = verify_path_recursions(3, 30)
    assert report.ok
    for row in report.rows:
        assert row.new_total == row.q // 2  # paths along the bottom row


def test_recursion_new_path_start_heights():
    system = PathSystem(4, 9)
    starts = {heights[0] for heights in _iter_admissible_heights(system, h0_max=2)}
    assert starts <= {1, 2}
    full = {heights[0] for heights in _iter_admissible_heights(system)}
    assert 3 in full


def test_bottom_row_family_p4():
    # paths from (0,1) over (j,1) down to (q'+i,0): their semigroups have the
    # explicit four-generator form, and the symmetric count follows the
    # residue of q mod 6
    for q in (7, 9, 11):
        qp = (q - 1) // 2
        system = PathSystem(4, q)
        expected_sym = (q - 1) // 6 + (0 if q % 6 == 1 else 1)
        sym = 0
        count = 0
        for i in range(0, (q - 1) // 6 + 1):
            for j in range(2 * i, qp - i):
                heights = tuple(2 if a <= j else 1 for a in range(qp + i + 1))
                path = LatticePath.from_heights(heights)
                assert is_admissible(system, path)
                s = semigroup_from_path(system, path)
                gens = {4, q, 2 * q - 4 * (j + 1), 3 * q - 4 * (qp + i + 1)}
                assert s.mu == from_generators(gens, 4).mu
                count += 1
                sym += s.is_symmetric()
                assert not s.is_pseudo_symmetric() or (i == 0 and j == 0)
        assert sym == expected_sym
        assert count == sum(qp - 3 * i for i in range(0, (q - 1) // 6 + 1))


def test_rectangle_family_p4():
    # staircases within the two-row box of width (q-1)/2 are all admissible;
    # exactly (q-1)/2 are symmetric and exactly one is pseudo-symmetric
    for q in (7, 9, 11):
        qp = (q - 1) // 2
        system = PathSystem(4, q)
        inside = []
        for heights in _iter_admissible_heights(system):
            if len(heights) <= qp and all(h <= 2 for h in heights):
                inside.append(heights)
        assert len(inside) == (2 + qp) * (1 + qp) // 2 - 1
        box_profiles = [
            t
            for t in oracles.staircase_profiles((2,) * qp)
            if t and all(h <= 2 for h in t)
        ]
        assert len(box_profiles) == len(inside)  # every box staircase admissible
        sems = [_semigroup_from_heights(system, h) for h in inside]
        assert sum(s.is_symmetric() for s in sems) == qp
        assert sum(s.is_pseudo_symmetric() for s in sems) == 1


@pytest.mark.parametrize("p", [4, 5])
def test_recursions_generic(p):
    assert verify_path_recursions(p, 25).ok
