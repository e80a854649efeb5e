"""Quasi-polynomials: exact fitting, operators, periods, asymptotic checks.

A quasi-polynomial of period N is given by N ordinary polynomials; evaluation
at n uses the constituent indexed by n mod N, as a polynomial in n itself.
Fitting is exact interpolation over rationals followed by exact verification
of every remaining sample; nothing here is ever approximated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cone import edges_of_cone_star


class InsufficientSamples(ValueError):
    """Each residue class needs at least degree + 2 samples."""


class VerificationMismatch(ValueError):
    """The sequence is not a quasi-polynomial of the requested shape."""


class EdgeInHyperplane(ValueError):
    """Some edge generator is orthogonal to the counting direction."""


def _trim(coeffs) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_eval(coeffs, n) -> Fraction:
    value = Fraction(0)
    for c in reversed(coeffs):
        value = value * n + c
    return value


def _poly_shift(coeffs) -> tuple[Fraction, ...]:
    """Coefficients of f(n + 1) from those of f(n)."""
    out = [Fraction(0)] * len(coeffs)
    for k, c in enumerate(coeffs):
        for m in range(k + 1):
            out[m] += c * math.comb(k, m)
    return _trim(out)


def _poly_sub(a, b) -> tuple[Fraction, ...]:
    size = max(len(a), len(b))
    out = [Fraction(0)] * size
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k] -= c
    return _trim(out)


@dataclass(frozen=True)
class QuasiPolynomial:
    """period many constituents, each a low-to-high coefficient tuple."""

    period: int
    constituents: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        if len(self.constituents) != self.period:
            raise ValueError("need exactly one constituent per residue class")
        object.__setattr__(
            self, "constituents", tuple(_trim(c) for c in self.constituents)
        )

    @property
    def degree(self) -> int:
        """Largest constituent degree; -1 for the zero quasi-polynomial."""
        return max(len(c) - 1 for c in self.constituents)

    def evaluate(self, n: int) -> Fraction:
        return _poly_eval(self.constituents[n % self.period], n)

    __call__ = evaluate


def fit(values, period: int, degree: int | None = None) -> QuasiPolynomial:
    """Exact quasi-polynomial through an initial segment of a sequence.

    values[n] is the sample at n.  With degree None the degree is raised
    from 0 until verification passes (at most 6).  Each residue class is
    interpolated on its first degree + 1 samples and every remaining sample
    must then match exactly.
    """
    vals = [Fraction(v) for v in values]
    if period < 1:
        raise ValueError("period must be positive")
    if degree is not None:
        return _fit_exact(vals, period, degree)
    last_error = None
    for d in range(0, 7):
        try:
            return _fit_exact(vals, period, d)
        except VerificationMismatch as err:
            last_error = err
    raise last_error


def _fit_exact(vals, period, degree) -> QuasiPolynomial:
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    constituents = []
    for r in range(period):
        ns = [n for n in range(len(vals)) if n % period == r]
        if len(ns) < degree + 2:
            raise InsufficientSamples(
                f"class {r} mod {period}: {len(ns)} samples, "
                f"need {degree + 2} for degree {degree}"
            )
        nodes = ns[: degree + 1]
        rows = [[Fraction(n) ** k for k in range(degree + 1)] for n in nodes]
        coeffs = linalg.solve(rows, [vals[n] for n in nodes])
        for n in ns[degree + 1 :]:
            if _poly_eval(coeffs, n) != vals[n]:
                raise VerificationMismatch(
                    f"value at {n} breaks the degree-{degree} fit "
                    f"for class {r} mod {period}"
                )
        constituents.append(coeffs)
    return QuasiPolynomial(period, tuple(constituents))


def shift(qp: QuasiPolynomial) -> QuasiPolynomial:
    """n -> value at n + 1."""
    n = qp.period
    return QuasiPolynomial(
        n, tuple(_poly_shift(qp.constituents[(r + 1) % n]) for r in range(n))
    )


def difference(qp: QuasiPolynomial) -> QuasiPolynomial:
    """n -> value at n + 1 minus value at n."""
    shifted = shift(qp)
    return QuasiPolynomial(
        qp.period,
        tuple(
            _poly_sub(shifted.constituents[r], qp.constituents[r])
            for r in range(qp.period)
        ),
    )


def partial_sum(qp: QuasiPolynomial) -> QuasiPolynomial:
    """n -> sum of the values at 0..n, as an exact quasi-polynomial.

    The result has the same period and degree at most one higher, so it is
    recovered by exact interpolation on enough prefix sums.
    """
    d = max(qp.degree, 0)
    need = qp.period * (d + 3)
    sums = []
    acc = Fraction(0)
    for n in range(need):
        acc += qp.evaluate(n)
        sums.append(acc)
    return _fit_exact(sums, qp.period, d + 1)


@dataclass(frozen=True)
class AlphaForm:
    """A primitive nonnegative counting direction."""

    coordinates: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(v) for v in self.coordinates)
        object.__setattr__(self, "coordinates", coords)
        if not coords or any(v < 0 for v in coords):
            raise ValueError("direction must be nonnegative and nonempty")
        if math.gcd(*coords) != 1:
            raise ValueError("direction must be primitive (gcd 1, nonzero)")


def predict_quasi_period(p: int, alpha) -> int:
    """lcm of the pairings of the direction with the recession cone edges.

    This is a valid (not necessarily minimal) quasi-period for the counting
    function along that direction.  Directions orthogonal to an edge are
    rejected: the slice count is infinite there.
    """
    direction = alpha if isinstance(alpha, AlphaForm) else AlphaForm(tuple(alpha))
    coords = direction.coordinates
    edges = edges_of_cone_star(p)
    if len(coords) != p - 1:
        raise ValueError(f"direction must have {p - 1} coordinates")
    dots = []
    for ray in edges.rays:
        d = sum(a * r for a, r in zip(coords, ray))
        if d == 0:
            raise EdgeInHyperplane(f"edge {ray} is orthogonal to {coords}")
        dots.append(d)
    return math.lcm(*dots)


@dataclass(frozen=True)
class LeadingCoefficients:
    """Top-degree coefficient per residue class, plus a constancy flag."""

    degree: int
    coefficients: tuple[Fraction, ...]
    constant: bool


def leading_coefficient_report(qp: QuasiPolynomial) -> LeadingCoefficients:
    d = qp.degree
    if d < 0:
        raise ValueError("the zero quasi-polynomial has no leading coefficient")
    coeffs = tuple(
        c[d] if len(c) > d else Fraction(0) for c in qp.constituents
    )
    return LeadingCoefficients(d, coeffs, len(set(coeffs)) == 1)


@dataclass(frozen=True)
class AsymptoticReport:
    exponent: int
    limit: Fraction
    bound_constant: Fraction
    checked: int
    largest_q: int
    gap_at_largest: Fraction
    worst_scaled_gap: Fraction
    ok: bool


def asymptotic_ratio_check(
    counter,
    exponent: int,
    limit,
    q_max: int,
    *,
    bound_constant,
    q_min: int = 1,
    coprime_to: int | None = None,
) -> AsymptoticReport:
    """Check |counter(q)/q^e - limit| <= C/q on a q range, exactly.

    counter is called on every q in [q_min, q_max] (restricted to values
    coprime to ``coprime_to`` when given) and must return exact integers.
    """
    limit = Fraction(limit)
    bound = Fraction(bound_constant)
    ok = True
    checked = 0
    worst = Fraction(0)
    last_q = None
    last_gap = None
    for q in range(q_min, q_max + 1):
        if coprime_to is not None and math.gcd(q, coprime_to) != 1:
            continue
        gap = abs(Fraction(counter(q), q**exponent) - limit)
        checked += 1
        last_q, last_gap = q, gap
        worst = max(worst, gap * q)
        if gap > bound / q:
            ok = False
    if last_q is None:
        raise ValueError("empty q range")
    return AsymptoticReport(
        exponent, limit, bound, checked, last_q, last_gap, worst, ok
    )
