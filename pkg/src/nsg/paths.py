"""Staircase model for semigroups containing two coprime elements.

The gaps of the two-generator semigroup <p, q> correspond to the integer
points (a, b) of the triangle cut off by p*(X+1) + q*(Y+1) <= p*q - 1 in the
first quadrant, via gap = p*q - (a+1)*p - (b+1)*q.  A semigroup containing
both p and q is obtained by closing a set of gaps, and the closed set L is
always the point set on and under a monotone right/down staircase path.

Closure of the resulting set under addition translates into two conditions
on point pairs of L: whenever the sum of two closed gaps is again a gap, its
point must also lie in L.  Working columnwise with the height profile of L,
both conditions become interval demands on later columns, which is what the
counting walk propagates.

The empty path stands for <p, q> itself; it is admissible but, by
convention, not included in the admissible-path count (the total semigroup
count is that count plus one).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import core, counting


class PointOutsideTriangle(ValueError):
    """The point does not encode a gap of the two-generator semigroup."""


class NotAGap(ValueError):
    """The integer is not a gap of the two-generator semigroup."""


class NotContainingQ(ValueError):
    """The semigroup does not contain the second element of the system."""


class NotAdmissible(ValueError):
    """The path's point set is not closed under the pair conditions."""


@dataclass(frozen=True)
class PathSystem:
    """The (p, q) triangle.  Stored with p < q; arguments may come swapped."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p > q:
            object.__setattr__(self, "p", q)
            object.__setattr__(self, "q", p)
            p, q = q, p
        if p < 1 or p == q:
            raise ValueError("need two distinct positive elements")
        if math.gcd(p, q) != 1:
            raise counting.NotCoprime(f"gcd({p}, {q}) != 1")

    def column_caps(self) -> tuple[int, ...]:
        """Number of triangle points in each column, first empty column excluded."""
        p, q = self.p, self.q
        caps = []
        a = 0
        while True:
            cap = (p * q - 1 - p * (a + 1)) // q
            if cap <= 0:
                break
            caps.append(cap)
            a += 1
        return tuple(caps)

    def triangle_points(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (a, b) for a, cap in enumerate(self.column_caps()) for b in range(cap)
        )

    def gap_of_point(self, a: int, b: int) -> int:
        """The gap of <p, q> encoded by the triangle point (a, b)."""
        p, q = self.p, self.q
        if a < 0 or b < 0 or p * (a + 1) + q * (b + 1) > p * q - 1:
            raise PointOutsideTriangle(f"({a}, {b}) is outside the triangle")
        return p * q - (a + 1) * p - (b + 1) * q

    def point_of_gap(self, gap: int) -> tuple[int, int]:
        """Inverse of gap_of_point."""
        p, q = self.p, self.q
        if gap < 1 or gap % p == 0:
            raise NotAGap(f"{gap} is not a gap")
        b_plus_1 = (-gap * pow(q, -1, p)) % p
        if b_plus_1 == 0:
            raise NotAGap(f"{gap} is not a gap")
        rest = p * q - b_plus_1 * q - gap
        if rest <= 0 or rest % p != 0:
            raise NotAGap(f"{gap} is not a gap")
        return rest // p - 1, b_plus_1 - 1


@lru_cache(maxsize=None)
def _base_gaps(p: int, q: int) -> frozenset:
    return frozenset(core.GapSet.from_generators((p, q)).gaps)


@dataclass(frozen=True)
class LatticePath:
    """A monotone right/down staircase, as corner points plus its point set.

    corners is the start point, the points where a right step turns into a
    down step, and the end point on the X axis; between consecutive corners
    the path moves down first, then right.  points is the set of lattice
    points on and under the path.  The empty path has no corners and no
    points.
    """

    corners: tuple[tuple[int, int], ...]
    points: frozenset

    @classmethod
    def from_heights(cls, heights) -> "LatticePath":
        hs = list(heights)
        while hs and hs[-1] == 0:
            hs.pop()
        if not hs:
            return cls((), frozenset())
        if any(h <= 0 for h in hs):
            raise ValueError("interior zero column in a staircase profile")
        if any(hs[a + 1] > hs[a] for a in range(len(hs) - 1)):
            raise ValueError("heights must be non-increasing")
        points = frozenset((a, b) for a, h in enumerate(hs) for b in range(h))
        corners = [(0, hs[0] - 1)]
        for a in range(len(hs)):
            if a == len(hs) - 1 or hs[a + 1] < hs[a]:
                top = (a, hs[a] - 1)
                if top != corners[-1]:
                    corners.append(top)
        if corners[-1] != (len(hs) - 1, 0):
            corners.append((len(hs) - 1, 0))
        return cls(tuple(corners), points)

    @property
    def is_empty(self) -> bool:
        return not self.points

    def heights(self) -> tuple[int, ...]:
        if not self.points:
            return ()
        ncols = max(a for a, _ in self.points) + 1
        out = [0] * ncols
        for a, _ in self.points:
            out[a] += 1
        return tuple(out)


def _check_staircase(system: PathSystem, path: LatticePath) -> None:
    caps = system.column_caps()
    heights = path.heights()
    if len(heights) > len(caps) or any(h > caps[a] for a, h in enumerate(heights)):
        raise PointOutsideTriangle("path leaves the triangle")
    expected = LatticePath.from_heights(heights)
    if expected != path:
        raise ValueError("inconsistent corner/point data for a staircase")


def is_admissible(system: PathSystem, path: LatticePath) -> bool:
    """Pairwise closure test on the path's point set.

    For points (a, b), (a', b') of L: if a + a' >= q - 1 then
    (a + a' - q + 1, b + b' + 1) must be in L, and if b + b' >= p - 1 then
    (a + a' + 1, b + b' - p + 1) must be in L.
    """
    _check_staircase(system, path)
    p, q = system.p, system.q
    pts = path.points
    for a, b in pts:
        for a2, b2 in pts:
            if a + a2 >= q - 1 and (a + a2 - q + 1, b + b2 + 1) not in pts:
                return False
            if b + b2 >= p - 1 and (a + a2 + 1, b + b2 - p + 1) not in pts:
                return False
    return True


def _iter_admissible_heights(system: PathSystem, h0_max=None):
    """Yield height profiles of admissible nonempty paths.

    Columns are fixed left to right.  Adding column c with height h creates
    the point pairs between column c and every earlier column; each pair
    either checks against an already-fixed column or turns into a minimum
    height demand on a later column.  Since heights never increase, a demand
    exceeding the current height, the target cap, or an unmet demand at
    termination kills the branch immediately.
    """
    p, q = system.p, system.q
    caps = system.column_caps()
    ncols = len(caps)
    heights: list[int] = []
    pending: dict[int, int] = {}

    def rec(c, prev):
        if c >= 1 and not pending:
            yield tuple(heights)  # ending the path here satisfies every demand
        if c >= ncols:
            return
        hi = min(prev, caps[c])
        if c == 0 and h0_max is not None:
            hi = min(hi, h0_max)
        # Heights never increase, so every outstanding demand (this column or
        # any later one) bounds the current height from below.
        lo = max(pending.values(), default=0)
        if max(lo, 1) > hi:
            return
        demand_here = pending.pop(c, None)
        for h in range(max(lo, 1), hi + 1):
            recorded = []
            ok = True
            for a in range(c + 1):
                ha = heights[a] if a < c else h
                if a + c >= q - 1:
                    # Required point sits in an already fixed column.
                    if heights[a + c - q + 1] < ha + h:
                        ok = False
                        break
                if ha + h >= p + 1:
                    u = a + c + 1
                    need = ha + h - p
                    if need > h or u >= ncols or caps[u] < need:
                        ok = False
                        break
                    if pending.get(u, 0) < need:
                        recorded.append((u, pending.get(u)))
                        pending[u] = need
            if ok:
                heights.append(h)
                yield from rec(c + 1, h)
                heights.pop()
            for u, old in reversed(recorded):
                if old is None:
                    del pending[u]
                else:
                    pending[u] = old
        if demand_here is not None:
            pending[c] = demand_here

    yield from rec(0, max(caps, default=0))


def count_admissible(system: PathSystem) -> int:
    """Number of admissible nonempty paths (the empty path is not counted)."""
    return sum(1 for _ in _iter_admissible_heights(system))


def iter_admissible(system: PathSystem, h0_max=None):
    """Admissible nonempty paths as LatticePath values."""
    for heights in _iter_admissible_heights(system, h0_max=h0_max):
        yield LatticePath.from_heights(heights)


def _semigroup_from_heights(system: PathSystem, heights) -> core.Semigroup:
    p, q = system.p, system.q
    closed = {
        system.gap_of_point(a, b) for a, h in enumerate(heights) for b in range(h)
    }
    gaps = _base_gaps(p, q)
    mu = []
    for i in range(1, p):
        n = i
        while n in gaps and n not in closed:
            n += p
        mu.append((n - i) // p)
    return core.Semigroup(p, tuple(mu))


def semigroup_from_path(system: PathSystem, path: LatticePath) -> core.Semigroup:
    """The semigroup obtained by closing the gaps encoded by the path's points."""
    if system.p < 3:
        raise ValueError("semigroup conversion needs the smaller element >= 3")
    if not is_admissible(system, path):
        raise NotAdmissible("point set is not closed under the pair conditions")
    return _semigroup_from_heights(system, path.heights())


def path_from_semigroup(system: PathSystem, s: core.Semigroup) -> LatticePath:
    """The staircase whose points are the gaps of <p, q> closed by s."""
    p, q = system.p, system.q
    if s.p != p:
        raise ValueError(f"semigroup is based at {s.p}, system at {p}")
    if not s.contains(q):
        raise NotContainingQ(f"semigroup does not contain {q}")
    columns: dict[int, set[int]] = {}
    for gap in sorted(_base_gaps(p, q)):
        if s.contains(gap):
            a, b = system.point_of_gap(gap)
            columns.setdefault(a, set()).add(b)
    if not columns:
        return LatticePath((), frozenset())
    ncols = max(columns) + 1
    heights = []
    for a in range(ncols):
        rows = columns.get(a, set())
        if rows != set(range(len(rows))):
            raise ValueError("closed gaps do not form a staircase")
        heights.append(len(rows))
    return LatticePath.from_heights(heights)


@dataclass(frozen=True)
class RecursionRow:
    q: int
    new_total: int
    new_symmetric: int
    new_pseudo: int
    total_ok: bool
    symmetric_ok: bool
    pseudo_ok: bool

    @property
    def ok(self) -> bool:
        return self.total_ok and self.symmetric_ok and self.pseudo_ok


@dataclass(frozen=True)
class PathRecursionReport:
    p: int
    rows: tuple[RecursionRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)


def verify_path_recursions(p: int, q_max: int) -> PathRecursionReport:
    """Check the count recursions stepping q down by p.

    The admissible paths whose start row is at most p - 3 are exactly the
    semigroups not accounted for by the q - p system, so for every coprime
    q > p:  total(q) = new_total + total(q - p) + 1, the symmetric count
    gains new_symmetric + 1, and the pseudo-symmetric count gains
    new_pseudo.
    """
    if p < 3:
        raise ValueError("p must be at least 3")
    if q_max <= 2 * p:
        raise ValueError("q_max must exceed 2 * p")
    rows = []
    for q in range(p + 1, q_max + 1):
        if math.gcd(p, q) != 1:
            continue
        system = PathSystem(p, q)
        new_total = new_sym = new_psym = 0
        for heights in _iter_admissible_heights(system, h0_max=p - 2):
            s = _semigroup_from_heights(system, heights)
            new_total += 1
            new_sym += s.is_symmetric()
            new_psym += s.is_pseudo_symmetric()
        rows.append(
            RecursionRow(
                q=q,
                new_total=new_total,
                new_symmetric=new_sym,
                new_pseudo=new_psym,
                total_ok=counting.count_containing(p, q)
                == new_total + counting.count_containing(p, q - p) + 1,
                symmetric_ok=counting.count_containing(p, q, "sym")
                == new_sym + counting.count_containing(p, q - p, "sym") + 1,
                pseudo_ok=counting.count_containing(p, q, "psym")
                == new_psym + counting.count_containing(p, q - p, "psym"),
            )
        )
    return PathRecursionReport(p, tuple(rows))
