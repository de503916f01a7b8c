"""SU(3) conjugacy classes as exact rational points of the Weyl alcove.

A conjugacy class of SU(3) is determined by its eigenvalues
e^{2*pi*i*k1/D}, e^{2*pi*i*k2/D}, e^{2*pi*i*k3/D}, normalized to the
2-simplex

    k1 + k2 + k3 = 0,   k1 <= k2 <= k3 <= k1 + D,

with integer scaled coordinates over a common denominator D.  The third
inequality wraps around the circle: k3 = k1 + D means the first and last
eigenvalues coincide.  Equality of eigenvalues is therefore equality of
scaled coordinates mod D.

The p-th roots of a central element e^{2*pi*i*e/3} * I are exactly the
classes with denominator D = 3p whose scaled coordinates are all congruent
to e mod 3; `root_classes` enumerates them and `count_root_classes` gives
the closed-form tallies by eigenvalue multiplicity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction


class Multiplicity(enum.Enum):
    DISTINCT = "distinct"
    DOUBLE = "double"
    CENTRAL = "central"


@dataclass(frozen=True, order=True)
class AlcovePoint:
    """Scaled alcove coordinates (k1/D, k2/D, k3/D), exact integers."""

    k1: int
    k2: int
    k3: int
    denom: int

    def __post_init__(self):
        if self.denom < 1:
            raise ValueError(f"denominator must be positive, got {self.denom}")
        if self.k1 + self.k2 + self.k3 != 0:
            raise ValueError(f"coordinates must sum to zero: {self}")
        if not (self.k1 <= self.k2 <= self.k3 <= self.k1 + self.denom):
            raise ValueError(f"coordinates not alcove-sorted: {self}")

    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        D = self.denom
        return (Fraction(self.k1, D), Fraction(self.k2, D), Fraction(self.k3, D))

    def inverse(self) -> "AlcovePoint":
        """Class of the inverse matrix: negate and reverse (stays sorted)."""
        return AlcovePoint(-self.k3, -self.k2, -self.k1, self.denom)

    def su2_rotation_number(self) -> Fraction | None:
        """Rotation number 2*k3/D in (0,1) when the class has eigenvalue 1.

        A noncentral sorted class contains the eigenvalue 1 exactly when
        k2 == 0, i.e. the class is (-k3, 0, k3)/D; the other two eigenvalues
        e^{+-2*pi*i*k3/D} are then an SU(2) pair with angle pi*(2*k3/D).
        Returns None if 1 is not an eigenvalue or the class is central.
        """
        if self.k2 != 0 or self.k3 == 0:
            return None
        return Fraction(2 * self.k3, self.denom)


def classify_multiplicity(pt: AlcovePoint) -> Multiplicity:
    """Eigenvalue multiplicity type of the class.

    Coincidences of eigenvalues for a sorted representative can only be
    k1 == k2, k2 == k3, or the wrap k3 == k1 + D; two or more coincidences
    force all three eigenvalues equal (a central class, e.g. the sorted
    representative (-2D/3, D/3, D/3) of e^{2*pi*i/3} * I).
    """
    hits = (pt.k1 == pt.k2) + (pt.k2 == pt.k3) + (pt.k3 == pt.k1 + pt.denom)
    if hits >= 2:
        return Multiplicity.CENTRAL
    if hits == 1:
        return Multiplicity.DOUBLE
    return Multiplicity.DISTINCT


def alcove_point_from_exponents(exponents: tuple[int, int, int], denom: int) -> AlcovePoint:
    """Canonical alcove representative of an eigenvalue multiset.

    `exponents` are scaled eigenvalue exponents over `denom`, defined mod
    denom, with sum congruent to 0 (unit determinant).  Reduce each to
    [0, D), sort, then subtract D from the top s coordinates where
    s = (sum)/D in {0, 1, 2}; the result is the unique sorted, sum-zero
    representative satisfying the wrap bound.
    """
    D = denom
    if sum(exponents) % D != 0:
        raise ValueError(f"exponents {exponents} have determinant != 1 over {D}")
    f = sorted(e % D for e in exponents)
    s = sum(f) // D
    if s == 0:
        k = (f[0], f[1], f[2])
    elif s == 1:
        k = (f[2] - D, f[0], f[1])
    else:
        k = (f[1] - D, f[2] - D, f[0])
    return AlcovePoint(k[0], k[1], k[2], D)


def root_classes(p: int, ell: int, a_mod3: int) -> list[AlcovePoint]:
    """Noncentral p-th roots of e^{2*pi*i*(a_mod3*ell)/3} * I, denom 3p.

    These are the admissible classes for a generator x with x^p = h^a and
    h mapped to the central element labelled by ell: alcove points over
    D = 3p whose scaled coordinates are each congruent to a_mod3*ell mod 3.
    Sorted lexicographically on (k1, k2).
    """
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if ell not in (0, 1, 2):
        raise ValueError(f"central label must be 0, 1, or 2, got {ell}")
    D = 3 * p
    t = (a_mod3 * ell) % 3
    out = []
    # k1 <= 0 and k1 > -D for any sorted sum-zero point; k2 runs between the
    # sortedness bound and the wrap bound.
    start = -(D - 1)
    k1 = start + (t - start) % 3
    while k1 <= 0:
        k2_lo = max(k1, -2 * k1 - D)
        k2_hi = (-k1) // 2
        k2 = k2_lo + (t - k2_lo) % 3
        while k2 <= k2_hi:
            pt = AlcovePoint(k1, k2, -k1 - k2, D)
            if classify_multiplicity(pt) is not Multiplicity.CENTRAL:
                out.append(pt)
            k2 += 3
        k1 += 3
    return out


def count_root_classes(p: int, ell: int) -> tuple[int, int]:
    """Closed-form counts (distinct, double) of noncentral p-th roots of
    e^{2*pi*i*ell/3} * I.

    Three cases: p coprime to 3 (independent of ell); p a multiple of 3
    with ell = 0; p a multiple of 3 with ell in {1, 2}.
    """
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if ell not in (0, 1, 2):
        raise ValueError(f"central label must be 0, 1, or 2, got {ell}")
    if p % 3 != 0:
        f = (p * p - 3 * p + 2) // 6
        g = p - 1
    elif ell == 0:
        f = (p * p - 3 * p + 6) // 6
        g = p - 3
    else:
        f = (p * p - 3 * p) // 6
        g = p
    return f, g
