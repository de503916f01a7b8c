"""Independent brute-force validators for the lattice engine.

Everything here is deliberately written against the engine's grain: the
constraints are transcribed separately (grouped by which coordinate of c
they bound, rather than the engine's display-order table), all arithmetic
is fractions.Fraction, and no code is shared with the production kernels.
Quadratic-or-worse algorithms are fine; these run only under pytest.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from casson3.alcove import AlcovePoint
from casson3.engine import PointClass, classify_lattice_point

# Constraints on c for fixed (a, b), grouped per coordinate.  Each entry
# maps c_k to a list of (i, j, const) with the meaning
#   upper:  c_k <= const - a_i - b_j
#   lower:  c_k >= const - a_i - b_j
# (0-based indices into the sorted alcove coordinates).
UPPER = {
    0: [(1, 1, 0), (0, 2, 0), (2, 0, 0)],
    1: [(0, 1, 0), (1, 0, 0), (2, 2, 1)],
    2: [(0, 0, 0), (1, 2, 1), (2, 1, 1)],
}
LOWER = {
    0: [(2, 2, 0), (0, 1, -1), (1, 0, -1)],
    1: [(0, 0, -1), (1, 2, 0), (2, 1, 0)],
    2: [(0, 2, 0), (1, 1, 0), (2, 0, 0)],
}


def own_margins(a: AlcovePoint, b: AlcovePoint, c: AlcovePoint) -> list[Fraction]:
    """All 18 fusion margins (>= 0 iff satisfied), oracle transcription."""
    av, bv, cv = a.coords(), b.coords(), c.coords()
    out = []
    for k in (0, 1, 2):
        for i, j, const in UPPER[k]:
            out.append(const - av[i] - bv[j] - cv[k])
        for i, j, const in LOWER[k]:
            out.append(cv[k] - (const - av[i] - bv[j]))
    return out


def _halfplanes(a: AlcovePoint, b: AlcovePoint):
    """The slice polygon as half-planes n1*x + n2*y <= K in (c1, c2)."""
    av, bv = a.coords(), b.coords()
    planes = []
    for k in (0, 1, 2):
        for i, j, const in UPPER[k]:
            bound = const - av[i] - bv[j]
            planes.append(_coord_plane(k, +1, bound))
        for i, j, const in LOWER[k]:
            bound = const - av[i] - bv[j]
            planes.append(_coord_plane(k, -1, bound))
    # alcove walls of c: c1 <= c2, c2 <= c3, c3 <= c1 + 1, with c3 = -x-y
    planes.append((Fraction(1), Fraction(-1), Fraction(0)))
    planes.append((Fraction(1), Fraction(2), Fraction(0)))
    planes.append((Fraction(-2), Fraction(-1), Fraction(1)))
    return planes


def _coord_plane(k: int, sense: int, bound: Fraction):
    """c_k <= bound (sense=+1) or c_k >= bound (sense=-1) in (x, y)."""
    if k == 0:
        n = (Fraction(1), Fraction(0))
    elif k == 1:
        n = (Fraction(0), Fraction(1))
    else:
        n = (Fraction(-1), Fraction(-1))
    if sense > 0:
        return (n[0], n[1], Fraction(bound))
    return (-n[0], -n[1], -Fraction(bound))


def vertices_by_halfplane_intersection(a: AlcovePoint, b: AlcovePoint):
    """Vertex set of the slice polygon by pairwise line intersection.

    Intersects every pair of constraint lines exactly, keeps the points
    satisfying all constraints, and returns the deduplicated sorted list
    of (c1, c2, c3) triples.
    """
    planes = _halfplanes(a, b)
    verts = set()
    for (n1, m1, k1), (n2, m2, k2) in itertools.combinations(planes, 2):
        det = n1 * m2 - n2 * m1
        if det == 0:
            continue
        x = (k1 * m2 - k2 * m1) / det
        y = (n1 * k2 - n2 * k1) / det
        if all(nn * x + mm * y <= kk for nn, mm, kk in planes):
            verts.add((x, y, -x - y))
    return sorted(verts)


def alcove_points(D: int):
    """Every alcove point with denominator D (sorted, sum-zero, wrapped)."""
    for k1 in range(-D + 1, 1):
        for k2 in range(max(k1, -2 * k1 - D), (-k1) // 2 + 1):
            yield AlcovePoint(k1, k2, -k1 - k2, D)


def dense_membership_scan(a: AlcovePoint, b: AlcovePoint, ell: int, D: int,
                          target: int | None = None) -> dict:
    """Classify every denominator-D alcove point; tally per class.

    With D = 3r and `target` the congruence residue of the triple under
    study, the non-outside part of the tally must match the engine's
    per-slice enumeration exactly.
    """
    tally = {cls: 0 for cls in PointClass}
    for c in alcove_points(D):
        if target is not None and not (
            c.k1 % 3 == c.k2 % 3 == c.k3 % 3 == target % 3
        ):
            continue
        tally[classify_lattice_point(a, b, c, ell)] += 1
    return tally
