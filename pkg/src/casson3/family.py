"""Surgery families Sigma(p,q, pq*n + m) and exact quadratic recovery.

Along such a family the slice polygons are fixed and only the lattice
denominator 3*r grows linearly with n, so the invariant is the lattice
count of dilates of rational polygons on a locked residue class: an exact
quadratic A*n^2 + B*n + C in n.  The fit here is by finite differences
over the first three samples, with every further sample checked exactly
(no least squares, no tolerance).

For 1/n surgery on the (p,q) torus knot (the family r = pq*n - 1) the
leading coefficient has a closed form matching 6*c4 + 3*c2^2 in the Conway
coefficients of the knot, and the linear coefficient follows case-by-case
interpolation formulas for p = 2, 3, 4; both are implemented for
cross-checking fitted values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import make_surgery_data, normalize_mod3
from .engine import CassonResult, tau_from_data


class NotQuadraticError(Exception):
    """A sample deviates from the quadratic through the first three."""

    def __init__(self, n, expected, actual):
        self.n = n
        self.expected = expected
        self.actual = actual
        super().__init__(f"sample at n={n}: expected {expected}, got {actual}")


class UnsupportedPError(ValueError):
    """No interpolated linear-coefficient formula for this p."""


@dataclass(frozen=True)
class FamilySpec:
    """The family Sigma(p, q, p*q*n + m) for n >= 1."""

    p: int
    q: int
    m: int

    def __post_init__(self):
        for v in (self.p, self.q, self.m):
            if v < 1:
                raise ValueError(f"family parameters must be positive: {self}")
        if self.m >= self.p * self.q:
            raise ValueError(f"m must be < p*q: {self}")
        if math.gcd(self.p, self.q) != 1 or math.gcd(self.m, self.p * self.q) != 1:
            raise ValueError(f"family parameters must be pairwise coprime: {self}")

    def r(self, n: int) -> int:
        return self.p * self.q * n + self.m


@dataclass(frozen=True)
class QuadraticFit:
    A: Fraction
    B: Fraction
    C: Fraction

    def __call__(self, n: int) -> Fraction:
        return self.A * n * n + self.B * n + self.C


def family_member(spec: FamilySpec, n: int, threads=None, backend=None) -> CassonResult:
    """Full census of Sigma(p, q, pq*n + m), with family-uniform framing
    residues so the congruence data does not depend on n."""
    data = normalize_mod3(make_surgery_data(spec.p, spec.q, spec.r(n)), m=spec.m)
    return tau_from_data(data, threads=threads, backend=backend)


def family_tau(spec: FamilySpec, n_max: int, threads=None, backend=None) -> list[tuple[int, int]]:
    """[(n, tau)] for n = 1..n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    return [(n, family_member(spec, n, threads=threads, backend=backend).tau)
            for n in range(1, n_max + 1)]


def fit_quadratic(samples: list[tuple[int, int]]) -> QuadraticFit:
    """Exact quadratic through consecutive samples [(n, value), ...].

    The coefficients come from the first three samples by finite
    differences; every remaining sample is then verified exactly and the
    first violation raises NotQuadraticError.  At least three consecutive
    samples are required (a fourth is what makes the fit a check).
    """
    if len(samples) < 3:
        raise ValueError(f"need at least 3 samples to fit, got {len(samples)}")
    ns = [n for n, _ in samples]
    for prev, cur in zip(ns, ns[1:]):
        if cur != prev + 1:
            raise ValueError(f"samples must be at consecutive n: {ns}")
    n0 = Fraction(ns[0])
    y0, y1, y2 = (Fraction(v) for _, v in samples[:3])
    A = (y2 - 2 * y1 + y0) / 2
    B = (y1 - y0) - A * (2 * n0 + 1)
    C = y0 - A * n0 * n0 - B * n0
    fit = QuadraticFit(A, B, C)
    for n, v in samples[3:]:
        if fit(n) != v:
            raise NotQuadraticError(n, fit(n), v)
    return fit


def third_differences(samples: list[tuple[int, int]]) -> list[int]:
    """Third finite differences of the sample values (zero iff quadratic)."""
    vals = [v for _, v in samples]
    for _ in range(3):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return vals


def conway_leading_coeff(p: int, q: int) -> Fraction:
    """Closed-form quadratic-growth coefficient for 1/n surgery on the
    (p,q) torus knot: (p^2-1)(q^2-1)(2p^2q^2-3p^2-3q^2-3)/240."""
    if p < 2 or q < 2 or math.gcd(p, q) != 1:
        raise ValueError(f"need coprime p, q >= 2, got ({p}, {q})")
    return Fraction((p * p - 1) * (q * q - 1)
                    * (2 * p * p * q * q - 3 * p * p - 3 * q * q - 3), 240)


def b_coefficient_formula(p: int, q: int) -> Fraction:
    """Interpolated linear coefficient B for 1/n torus-knot surgeries,
    available for p = 2, 3, 4 (cases by q mod 4, 6, 8 respectively).

    These formulas interpolate computed data; a verified discrepancy at
    larger q would be a finding about the formulas, not the census.
    """
    if math.gcd(p, q) != 1 or q < 3:
        raise ValueError(f"need coprime p, q with q >= 3, got ({p}, {q})")
    q3 = q * q * q
    if p == 2:
        if q % 4 == 1:
            return Fraction(q3 - 4 * q + 3, 12)
        return Fraction(q3 - 4 * q - 3, 12)
    if p == 3:
        rem = q % 6
        if rem == 1:
            return Fraction(20 * q3 + 3 * q * q - 48 * q + 25, 54)
        if rem == 2:
            return Fraction(20 * q3 - 3 * q * q - 48 * q + 2, 54)
        if rem == 4:
            return Fraction(20 * q3 + 3 * q * q - 48 * q - 2, 54)
        return Fraction(20 * q3 - 3 * q * q - 48 * q - 25, 54)
    if p == 4:
        rem = q % 8
        if rem == 1:
            return Fraction(16 * q3 + q * q - 42 * q + 25, 16)
        if rem == 3:
            return Fraction(16 * q3 - q * q - 42 * q + 39, 16)
        if rem == 5:
            return Fraction(16 * q3 + q * q - 42 * q - 39, 16)
        return Fraction(16 * q3 - q * q - 42 * q - 25, 16)
    raise UnsupportedPError(f"no linear-coefficient formula for p = {p}")


def torus_knot_surgery_samples(p: int, q: int, n_max: int,
                               threads=None, backend=None) -> list[tuple[int, int]]:
    """[(n, tau(Sigma(p,q, pq*n - 1)))] for n = 1..n_max.

    This is the 1/n surgery family; as a function of n it fits
    A*n^2 - B*n exactly (the n = 0 member is the 3-sphere).
    """
    out = []
    m = p * q - 1
    for n in range(1, n_max + 1):
        r = p * q * n - 1
        data = normalize_mod3(make_surgery_data(p, q, r), m=m)
        out.append((n, tau_from_data(data, threads=threads, backend=backend).tau))
    return out
