"""Polyhedral model of the Apéry coordinate vectors.

For a fixed p >= 3, the vectors (x_1, ..., x_{p-1}) that arise as Apéry
coordinates of numerical semigroups containing p are exactly the nonnegative
integer solutions of

    x_i + x_j >= x_{i+j}          for i + j < p,
    x_i + x_j >= x_{i+j-p} - 1    for i + j > p,

over unordered index pairs 1 <= i <= j <= p-1.  The solution set in real
space is a pointed polyhedral cone whose vertex has coordinates -i/p; its
interior lattice points are the semigroups of maximal embedding dimension p.

Translating the vertex to the origin gives the homogeneous system
x_i + x_j >= x_{(i+j) mod p} (i + j != p).  That recession cone lives in the
nonnegative orthant and each of its one-dimensional faces carries a primitive
integer generator; those generators control quasi-periods of the lattice
point counting functions along rational directions.

The module also builds the affine loci that carry pseudo-symmetric
semigroups: for suitable permutations of the coordinates, a system of
equalities pairing coordinates against a distinguished one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

from . import linalg


class DimensionMismatch(ValueError):
    """A point has the wrong number of coordinates for this p."""


class UnsupportedP(ValueError):
    """Edge enumeration is only configured for small p."""


MAX_EDGE_P = 7


@dataclass(frozen=True)
class ConeModel:
    """Inequality description of the Apéry coordinate cone for one p.

    inequalities holds tuples (i, j, k, c), 1-based, meaning
    x_i + x_j - x_k >= c with c in {0, -1}.  The vertex is the unique point
    satisfying every inequality with equality.
    """

    p: int
    inequalities: tuple[tuple[int, int, int, int], ...]
    vertex: tuple[Fraction, ...]

    @property
    def facet_count(self) -> int:
        return len(self.inequalities)

    def _check(self, x) -> tuple:
        x = tuple(x)
        if len(x) != self.p - 1:
            raise DimensionMismatch(
                f"expected {self.p - 1} coordinates, got {len(x)}"
            )
        return x

    def contains(self, x) -> bool:
        """Whether x satisfies every inequality (boundary allowed)."""
        x = self._check(x)
        return all(
            x[i - 1] + x[j - 1] - x[k - 1] >= c for i, j, k, c in self.inequalities
        )

    def strictly_contains(self, x) -> bool:
        """Whether x is an interior point (every inequality strict)."""
        x = self._check(x)
        return all(
            x[i - 1] + x[j - 1] - x[k - 1] > c for i, j, k, c in self.inequalities
        )


@lru_cache(maxsize=None)
def build_cone(p: int) -> ConeModel:
    """Inequality system, one per unordered pair (i, j) with i + j != p."""
    if p < 3:
        raise ValueError("p must be at least 3")
    ineqs = []
    for i in range(1, p):
        for j in range(i, p):
            s = i + j
            if s == p:
                continue
            if s < p:
                ineqs.append((i, j, s, 0))
            else:
                ineqs.append((i, j, s - p, -1))
    vertex = tuple(Fraction(-i, p) for i in range(1, p))
    return ConeModel(p, tuple(ineqs), vertex)


def is_in_cone(cone: ConeModel, x) -> bool:
    return cone.contains(x)


def is_in_interior(cone: ConeModel, x) -> bool:
    return cone.strictly_contains(x)


def interior_shift_witness(p: int, bound: int) -> tuple[int, ...] | None:
    """First grid point <= bound violating 'interior = all-ones shift of cone'.

    Returns None when the identity holds on the whole grid {0..bound}^{p-1}.
    """
    cone = build_cone(p)
    for x in product(range(bound + 1), repeat=p - 1):
        interior = cone.strictly_contains(x)
        shifted = all(v >= 1 for v in x) and cone.contains(tuple(v - 1 for v in x))
        if interior != shifted:
            return x
    return None


def interior_shift_check(p: int, bound: int) -> bool:
    if bound < 1:
        raise ValueError("bound must be at least 1")
    return interior_shift_witness(p, bound) is None


# ---------------------------------------------------------------------------
# Recession cone (vertex moved to the origin) and its edges.


@lru_cache(maxsize=None)
def star_inequalities(p: int) -> tuple[tuple[int, int, int], ...]:
    """Homogeneous system x_i + x_j >= x_{(i+j) mod p}, i + j != p."""
    if p < 3:
        raise ValueError("p must be at least 3")
    out = []
    for i in range(1, p):
        for j in range(i, p):
            s = i + j
            if s % p == 0:
                continue
            out.append((i, j, s % p))
    return tuple(out)


def _star_normals(p: int) -> list[tuple[int, ...]]:
    normals = []
    for i, j, k in star_inequalities(p):
        v = [0] * (p - 1)
        v[i - 1] += 1
        v[j - 1] += 1
        v[k - 1] -= 1
        normals.append(tuple(v))
    return normals


def _primitive(vec) -> tuple[int, ...] | None:
    denom = math.lcm(*(f.denominator for f in vec))
    ints = [int(f * denom) for f in vec]
    g = math.gcd(*ints)
    if g == 0:
        return None
    return tuple(v // g for v in ints)


@dataclass(frozen=True)
class EdgeSet:
    """Primitive generators of the one-dimensional faces of the recession cone."""

    p: int
    rays: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for ray in self.rays:
            if math.gcd(*ray) != 1:
                raise ValueError(f"ray {ray} is not primitive")

    def cone_contains(self, x) -> bool:
        """Whether x lies in the rational cone nonnegatively spanned by the rays.

        Uses the Carathéodory decomposition: membership is certified by some
        linearly independent subset of at most dim-many rays.
        """
        x = tuple(Fraction(v) for v in x)
        if len(x) != self.p - 1:
            raise DimensionMismatch(
                f"expected {self.p - 1} coordinates, got {len(x)}"
            )
        if all(v == 0 for v in x):
            return True
        dim = self.p - 1
        for size in range(1, min(dim, len(self.rays)) + 1):
            for subset in combinations(self.rays, size):
                if linalg.rank(subset) < size:
                    continue
                columns = [[Fraction(ray[c]) for ray in subset] for c in range(dim)]
                coeffs = linalg.solve(columns, x)
                if coeffs is not None and all(c >= 0 for c in coeffs):
                    return True
        return False


@lru_cache(maxsize=None)
def edges_of_cone_star(p: int) -> EdgeSet:
    """All edge generators, by exact active-set search over facet subsets.

    Every candidate comes from a rank p-2 subset of inequality normals with a
    one-dimensional kernel; it is kept when some primitive representative
    satisfies the full system.  The active set of a surviving ray then has
    rank exactly p-2, so the minimal face containing it is an edge.
    """
    if p < 3:
        raise ValueError("p must be at least 3")
    if p > MAX_EDGE_P:
        raise UnsupportedP(f"edge enumeration is configured for p <= {MAX_EDGE_P}")
    normals = _star_normals(p)
    rays = set()
    for subset in combinations(normals, p - 2):
        kernel = linalg.kernel_basis(list(subset))
        if len(kernel) != 1:
            continue
        base = _primitive(kernel[0])
        if base is None:
            continue
        for cand in (base, tuple(-v for v in base)):
            if all(sum(n * c for n, c in zip(normal, cand)) >= 0 for normal in normals):
                rays.add(cand)
    return EdgeSet(p, tuple(sorted(rays)))


# ---------------------------------------------------------------------------
# Affine loci of pseudo-symmetric semigroups.


@dataclass(frozen=True)
class SigmaLocus:
    """Equality system selecting one family of pseudo-symmetric vectors.

    sigma is a permutation of {1, ..., p-1} (sigma[i-1] is the image of i)
    whose values pair up, modulo p, against the image of p-2.  equations
    holds tuples (a, b, k, d) meaning x_a + x_b - x_k = d.
    """

    p: int
    sigma: tuple[int, ...]
    equations: tuple[tuple[int, int, int, int], ...]

    def contains(self, x) -> bool:
        x = tuple(x)
        if len(x) != self.p - 1:
            raise DimensionMismatch(
                f"expected {self.p - 1} coordinates, got {len(x)}"
            )
        return all(
            x[a - 1] + x[b - 1] - x[k - 1] == d for a, b, k, d in self.equations
        )


def _sigma_qualifies(p: int, sigma: tuple[int, ...]) -> bool:
    # sigma[i-1] = image of i; pairing congruences plus the doubling one.
    s = lambda i: sigma[i - 1]
    for i in range(1, p - 2):
        if (s(i) + s(p - 2 - i) - s(p - 2)) % p != 0:
            return False
    return (2 * s(p - 1) - s(p - 2)) % p == 0


def _sigma_equations(p: int, sigma: tuple[int, ...]) -> tuple[tuple[int, int, int, int], ...]:
    s = lambda i: sigma[i - 1]
    eqs = []
    for i in range(1, p - 2):
        if i > p - 2 - i:
            break  # the pair (i, p-2-i) was already emitted
        a, b, k = s(i), s(p - 2 - i), s(p - 2)
        d = 0 if a + b == k else -1  # otherwise a + b == k + p
        eqs.append((a, b, k, d))
    a, k = s(p - 1), s(p - 2)
    d = 1 if 2 * a == k else 0  # otherwise 2a == k + p
    eqs.append((a, a, k, d))
    return tuple(eqs)


@lru_cache(maxsize=None)
def sigma_star_set(p: int) -> tuple[SigmaLocus, ...]:
    """All qualifying permutations with their equality systems, sorted."""
    if p < 3:
        raise ValueError("p must be at least 3")
    loci = []
    for perm in permutations(range(1, p)):
        if _sigma_qualifies(p, perm):
            loci.append(SigmaLocus(p, perm, _sigma_equations(p, perm)))
    return tuple(sorted(loci, key=lambda locus: locus.sigma))


def in_sigma_locus(locus: SigmaLocus, x) -> bool:
    return locus.contains(x)
