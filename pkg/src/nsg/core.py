"""Numerical semigroups containing a distinguished element p.

A numerical semigroup is a subset of the nonnegative integers that contains
0, is closed under addition, and has finite complement (the gaps).  Here a
semigroup containing a fixed p >= 3 is stored canonically as (p, mu), where
mu has one entry per nonzero residue class modulo p and the least semigroup
element congruent to i is i + mu[i-1] * p.  The vector determines the
semigroup completely: membership, genus (number of gaps), Frobenius number
(largest gap), multiplicity and embedding dimension are all read off from it.

The sieve-backed ``GapSet`` is an independent oracle representation used to
cross-check the canonical one; it stores the gaps themselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .cone import build_cone


class NonCoprimeGenerators(ValueError):
    """The generating set has a common divisor greater than 1."""


class PNotInSemigroup(ValueError):
    """The distinguished element is not generated by the given set."""


class FrobeniusOfN(ValueError):
    """The full semigroup of all nonnegative integers has no largest gap."""


def _closure_upto(gens: list[int], bound: int) -> bytearray:
    """Membership table of the additive closure of ``gens`` on 0..bound."""
    hit = bytearray(bound + 1)
    hit[0] = 1
    for g in gens:
        for n in range(g, bound + 1):
            if hit[n - g]:
                hit[n] = 1
    return hit


def _conductor(hit: bytearray, multiplicity: int) -> int | None:
    """Least c with c..c+multiplicity-1 all members (so everything above is)."""
    run = 0
    for n, member in enumerate(hit):
        run = run + 1 if member else 0
        if run == multiplicity:
            return n - multiplicity + 1
    return None


def _apery_elements(p: int, mu: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(i + m * p for i, m in enumerate(mu, start=1))


def _is_symmetric_mu(p: int, mu: tuple[int, ...]) -> bool:
    # The trivial semigroup (no gaps) counts as symmetric: 2*0 == -1 + 1.
    if not any(mu):
        return True
    frobenius = max(_apery_elements(p, mu)) - p
    return 2 * sum(mu) == frobenius + 1


def _is_pseudo_symmetric_mu(p: int, mu: tuple[int, ...]) -> bool:
    if not any(mu):
        return False
    frobenius = max(_apery_elements(p, mu)) - p
    return 2 * sum(mu) == frobenius + 2


@dataclass(frozen=True)
class Semigroup:
    """Canonical (p, mu) representation of a semigroup containing p."""

    p: int
    mu: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(int(m) for m in self.mu))
        if self.p < 3:
            raise ValueError("p must be at least 3")
        if len(self.mu) != self.p - 1:
            raise ValueError(f"mu must have {self.p - 1} entries")
        if any(m < 0 for m in self.mu):
            raise ValueError("mu entries must be nonnegative")
        if not build_cone(self.p).contains(self.mu):
            raise ValueError(f"mu={self.mu} violates the coordinate inequalities")

    def apery_elements(self) -> tuple[int, ...]:
        """Least semigroup element of each nonzero residue class modulo p."""
        return _apery_elements(self.p, self.mu)

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        r = n % self.p
        if r == 0:
            return True
        return n >= r + self.mu[r - 1] * self.p

    def genus(self) -> int:
        return sum(self.mu)

    def frobenius(self) -> int:
        if not any(self.mu):
            raise FrobeniusOfN("the full semigroup has no gaps")
        return max(self.apery_elements()) - self.p

    def gaps(self) -> tuple[int, ...]:
        if not any(self.mu):
            return ()
        f = self.frobenius()
        return tuple(n for n in range(1, f + 1) if not self.contains(n))

    def multiplicity(self) -> int:
        return min(self.p, min(self.apery_elements()))

    def minimal_generators(self) -> tuple[int, ...]:
        """Elements of the unique minimal generating set, sorted."""
        candidates = sorted({self.p, *self.apery_elements()})
        gens = []
        for x in candidates:
            decomposable = any(
                self.contains(a) and self.contains(x - a)
                for a in range(1, x // 2 + 1)
            )
            if not decomposable:
                gens.append(x)
        return tuple(gens)

    def embedding_dimension(self) -> int:
        return len(self.minimal_generators())

    def is_symmetric(self) -> bool:
        """Twice the genus exceeds the Frobenius number by exactly one."""
        return _is_symmetric_mu(self.p, self.mu)

    def is_pseudo_symmetric(self) -> bool:
        """Twice the genus exceeds the Frobenius number by exactly two."""
        return _is_pseudo_symmetric_mu(self.p, self.mu)

    def is_max_embedding_dimension(self) -> bool:
        """Embedding dimension and multiplicity both equal to p."""
        return self.multiplicity() == self.p and self.embedding_dimension() == self.p


def from_generators(gens, p: int) -> Semigroup:
    """Canonical representation of the semigroup generated by ``gens``.

    The generators must be positive with overall gcd 1, and p must itself be
    an element of the generated semigroup.  Membership is sieved up to a
    bound that is grown until the conductor is visible, so the extracted
    class minima are always final.
    """
    gen_list = sorted({int(g) for g in gens})
    if not gen_list or gen_list[0] <= 0:
        raise ValueError("generators must be positive integers")
    if reduce(math.gcd, gen_list) != 1:
        raise NonCoprimeGenerators(f"gcd of {gen_list} is not 1")
    p = int(p)
    if p < 3:
        raise ValueError("p must be at least 3")

    multiplicity = gen_list[0]
    bound = max(p, p * gen_list[-1])
    while True:
        hit = _closure_upto(gen_list, bound)
        conductor = _conductor(hit, multiplicity)
        if conductor is not None and conductor + p - 1 <= bound:
            break
        bound *= 2

    if not hit[p]:
        raise PNotInSemigroup(f"{p} is not generated by {gen_list}")
    mu = []
    for i in range(1, p):
        n = i
        while not hit[n]:
            n += p
        mu.append((n - i) // p)
    return Semigroup(p, tuple(mu))


@dataclass(frozen=True)
class GapSet:
    """Oracle representation: the finite set of gaps itself.

    Validates on construction that the complement really is a numerical
    semigroup, i.e. closed under addition of members.
    """

    gaps: tuple[int, ...]

    def __post_init__(self):
        gaps = tuple(sorted(set(self.gaps)))
        if gaps != self.gaps:
            raise ValueError("gaps must be sorted and duplicate-free")
        if gaps and gaps[0] <= 0:
            raise ValueError("gaps must be positive")
        top = gaps[-1] if gaps else 0
        gap_set = set(gaps)
        members = [n for n in range(1, top + 1) if n not in gap_set]
        for a in members:
            for b in members:
                if a + b <= top and a + b in gap_set:
                    raise ValueError(
                        f"complement not closed: {a} + {b} = {a + b} is a gap"
                    )

    @classmethod
    def from_generators(cls, gens) -> "GapSet":
        gen_list = sorted({int(g) for g in gens})
        if not gen_list or gen_list[0] <= 0:
            raise ValueError("generators must be positive integers")
        if reduce(math.gcd, gen_list) != 1:
            raise NonCoprimeGenerators(f"gcd of {gen_list} is not 1")
        multiplicity = gen_list[0]
        bound = max(2, 2 * gen_list[0] * gen_list[-1])
        while True:
            hit = _closure_upto(gen_list, bound)
            conductor = _conductor(hit, multiplicity)
            if conductor is not None:
                break
            bound *= 2
        return cls(tuple(n for n in range(1, conductor) if not hit[n]))

    def genus(self) -> int:
        return len(self.gaps)

    def frobenius(self) -> int:
        if not self.gaps:
            raise FrobeniusOfN("the full semigroup has no gaps")
        return self.gaps[-1]

    def contains(self, n: int) -> bool:
        return n >= 0 and n not in set(self.gaps)

    def to_semigroup(self, p: int) -> Semigroup:
        """Canonical (p, mu) form; p must be a member."""
        if p < 3:
            raise ValueError("p must be at least 3")
        if not self.contains(p):
            raise PNotInSemigroup(f"{p} is a gap")
        mu = []
        for i in range(1, p):
            n = i
            while not self.contains(n):
                n += p
            mu.append((n - i) // p)
        return Semigroup(p, tuple(mu))
