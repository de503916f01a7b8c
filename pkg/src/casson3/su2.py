"""Brute-force census of SU(2) representation classes of Brieskorn spheres.

An SU(2) conjugacy class is its rotation number gamma in [0, 2]: the
eigenvalue pair e^{+-i*pi*gamma}.  A triple of classes (g1, g2, g3) in
(0,1)^3 arises from an irreducible triple X*Y*Z = I exactly when the strict
spherical triangle inequalities hold:

    |g1 - g2| < g3 < min(g1 + g2, 2 - g1 - g2).

For pi_1 of Sigma(p,q,r) (generators x, y, z, central h with x^p = y^q =
h^a, z^r = h^c, xyz = 1), an irreducible SU(2) representation sends h to
+-I:

* h -> I: the rotation numbers are g1 = 2*k1/p etc., folded into (0,1) by
  k <-> p-k.  These classes sit at the singular points of the pointed
  2-sphere components of the SU(3) representation variety, so their count
  cross-validates the lattice engine's pointed-sphere tally.
* h -> -I: x^p = (-I)^a forces p*g1 == a (mod 2), i.e. g1 = k1/p with
  k1 == a (mod 2), and similarly for y (with a) and z (with c).  These are
  the isolated reducible classes; they carry weight 0 in the invariant and
  the count is reporting-only.

Counts here deliberately share no code with the lattice enumeration beyond
the triangle criterion itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import SurgeryData


class DomainError(ValueError):
    """A rotation number lies outside the open interval (0, 1)."""


@dataclass(frozen=True)
class Su2Class:
    """Rotation numbers of the images of x, y, z, each in (0, 1)."""

    gamma1: Fraction
    gamma2: Fraction
    gamma3: Fraction

    def __post_init__(self):
        for g in (self.gamma1, self.gamma2, self.gamma3):
            if not 0 < g < 1:
                raise DomainError(f"rotation number {g} not in (0, 1)")


def su2_irreducible_exists(g1, g2, g3) -> bool:
    """Strict triangle criterion for an irreducible SU(2) triple.

    Strictness matters: equality produces only reducible (abelian) triples.
    """
    g1, g2, g3 = Fraction(g1), Fraction(g2), Fraction(g3)
    for g in (g1, g2, g3):
        if not 0 < g < 1:
            raise DomainError(f"rotation number {g} not in (0, 1)")
    return abs(g1 - g2) < g3 < min(g1 + g2, 2 - g1 - g2)


def _identity_rotations(p: int) -> list[Fraction]:
    """Folded rotation numbers 2k/p in (0,1) of p-th roots of I."""
    return [Fraction(2 * k, p) for k in range(1, (p - 1) // 2 + 1)]


def _minus_identity_rotations(p: int, parity: int) -> list[Fraction]:
    """Rotation numbers k/p, k == parity (mod 2), of p-th roots of -I^parity."""
    return [Fraction(k, p) for k in range(1, p) if k % 2 == parity % 2]


def iter_pointed_sphere_classes(data: SurgeryData):
    """Irreducible SU(2) classes with h -> I, one per pointed 2-sphere."""
    for g1 in _identity_rotations(data.p):
        for g2 in _identity_rotations(data.q):
            for g3 in _identity_rotations(data.r):
                if su2_irreducible_exists(g1, g2, g3):
                    yield Su2Class(g1, g2, g3)


def count_pointed_spheres(data: SurgeryData) -> int:
    """Number of irreducible SU(2) classes of pi_1 Sigma with h -> I."""
    return sum(1 for _ in iter_pointed_sphere_classes(data))


def count_type_Ib(data: SurgeryData) -> int:
    """Number of irreducible SU(2) classes with h -> -I (weight 0).

    The parity constraints come from x^p = y^q = h^a and z^r = h^c: a p-th
    root of (-I)^a has rotation number k/p with k == a (mod 2).  The raw
    count for the stored framing pair is reported as-is.
    """
    n = 0
    for g1 in _minus_identity_rotations(data.p, data.a):
        for g2 in _minus_identity_rotations(data.q, data.a):
            for g3 in _minus_identity_rotations(data.r, data.c):
                if su2_irreducible_exists(g1, g2, g3):
                    n += 1
    return n
