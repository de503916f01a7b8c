"""The SU(3) fusion polytope and its two-dimensional slices.

A triple of conjugacy classes (a, b, c) is realizable by SU(3) matrices
A*B*C = I exactly when 18 linear inequalities in the alcove coordinates
hold (Hayashi's fusion constraints).  Each inequality involves exactly one
coordinate of c, so for fixed (a, b) the 18 constraints regroup into six
bounds

    Xl <= c1 <= Xu,   Yl <= c2 <= Yu,   Zl <= c3 <= Zu,

and the slice polygon is this box intersected with the alcove of c.  The
polygon is a hexagon when exactly one of a, b has a repeated eigenvalue
(a two-dimensional family, "type I") and a nonagon when both have distinct
eigenvalues (four-dimensional, "type II"); in the nonagon case the three
extra edges lie on the alcove walls c1 = c2, c2 = c3, c3 = c1 + 1.

Everything is exact rational arithmetic (integer cross-multiplication or
fractions.Fraction); there is no floating-point path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .alcove import AlcovePoint, Multiplicity, classify_multiplicity

# The 18 fusion constraints as (i, j, k, sense, bound): the constraint is
#   a_i + b_j + c_k  <=  bound   if sense == -1,
#   a_i + b_j + c_k  >=  bound   if sense == +1,
# listed row-major through the standard 3x6 display.  Margins are
# sense * (a_i + b_j + c_k - bound), so margin >= 0 means satisfied and
# margin == 0 means tight.  Indices are 0-based.
CONSTRAINTS: tuple[tuple[int, int, int, int, int], ...] = (
    (0, 1, 1, -1, 0), (0, 2, 2, +1, 0), (1, 2, 2, -1, 1),
    (1, 0, 1, -1, 0), (2, 0, 2, +1, 0), (2, 1, 2, -1, 1),
    (1, 1, 0, -1, 0), (2, 2, 0, +1, 0), (2, 2, 1, -1, 1),
    (1, 1, 2, +1, 0), (0, 0, 2, -1, 0), (0, 0, 1, +1, -1),
    (1, 2, 1, +1, 0), (0, 2, 0, -1, 0), (0, 1, 0, +1, -1),
    (2, 1, 1, +1, 0), (2, 0, 0, -1, 0), (1, 0, 0, +1, -1),
)


class Membership(enum.Enum):
    OUTSIDE = "outside"
    BOUNDARY_FIRST_KIND = "boundary-first-kind"    # some constraint tight
    BOUNDARY_SECOND_KIND = "boundary-second-kind"  # some class has a repeated eigenvalue
    INTERIOR = "interior"


class SliceKind(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"


def _margins(av, bv, cv) -> list[Fraction]:
    return [sense * (av[i] + bv[j] + cv[k] - bound) for i, j, k, sense, bound in CONSTRAINTS]


def inequality_margins(a: AlcovePoint, b: AlcovePoint, c: AlcovePoint) -> list[Fraction]:
    """Exact margins of the 18 constraints, in the fixed table order."""
    return _margins(a.coords(), b.coords(), c.coords())


def membership(a: AlcovePoint, b: AlcovePoint, c: AlcovePoint) -> Membership:
    """Position of the class triple relative to the fusion polytope."""
    margins = inequality_margins(a, b, c)
    if any(m < 0 for m in margins):
        return Membership.OUTSIDE
    if any(m == 0 for m in margins):
        return Membership.BOUNDARY_FIRST_KIND
    if all(classify_multiplicity(x) is Multiplicity.DISTINCT for x in (a, b, c)):
        return Membership.INTERIOR
    return Membership.BOUNDARY_SECOND_KIND


@dataclass(frozen=True)
class SliceBounds:
    """The six bounds on c for fixed (a, b), exact rationals."""

    Xl: Fraction
    Xu: Fraction
    Yl: Fraction
    Yu: Fraction
    Zl: Fraction
    Zu: Fraction

    def is_empty_box(self) -> bool:
        return self.Xl > self.Xu or self.Yl > self.Yu or self.Zl > self.Zu


def slice_bounds(a: AlcovePoint, b: AlcovePoint) -> SliceBounds:
    """Bounds of the slice polygon, by the displayed max/min formulas."""
    a1, a2, a3 = a.coords()
    b1, b2, b3 = b.coords()
    return SliceBounds(
        Xl=max(-1 - a1 - b2, -1 - a2 - b1, -a3 - b3),
        Xu=min(-a1 - b3, -a3 - b1, -a2 - b2),
        Yl=max(-1 - a1 - b1, -a2 - b3, -a3 - b2),
        Yu=min(-a1 - b2, -a2 - b1, 1 - a3 - b3),
        Zl=max(-a1 - b3, -a3 - b1, -a2 - b2),
        Zu=min(-a1 - b1, 1 - a2 - b3, 1 - a3 - b2),
    )


@dataclass(frozen=True)
class FusionSlice:
    """One slice: classes (a, b), central label ell, cached geometry."""

    a: AlcovePoint
    b: AlcovePoint
    ell: int
    kind: SliceKind
    bounds: SliceBounds

    @property
    def repeated_in_ab(self) -> int:
        return 1 if self.kind is SliceKind.TYPE_I else 0


def make_slice(a: AlcovePoint, b: AlcovePoint, ell: int) -> FusionSlice:
    """Build a slice, rejecting inadmissible (a, b) pairs.

    Requires a, b noncentral with at least one of them regular (three
    distinct eigenvalues): two repeated-eigenvalue classes admit no
    irreducible pairs, and a central class forces an abelian image.
    """
    ma = classify_multiplicity(a)
    mb = classify_multiplicity(b)
    if Multiplicity.CENTRAL in (ma, mb):
        raise ValueError("slice classes must be noncentral")
    if ma is Multiplicity.DOUBLE and mb is Multiplicity.DOUBLE:
        raise ValueError("at least one slice class must have distinct eigenvalues")
    kind = SliceKind.TYPE_II if (ma is Multiplicity.DISTINCT and mb is Multiplicity.DISTINCT) \
        else SliceKind.TYPE_I
    return FusionSlice(a=a, b=b, ell=ell, kind=kind, bounds=slice_bounds(a, b))


def slice_vertices(sl: FusionSlice) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Closed-form vertex list: 6 for a hexagon slice, 9 for a nonagon.

    Degenerate polygons may repeat vertices; the list is returned verbatim
    in the standard order.
    """
    B = sl.bounds
    Xl, Xu, Yl, Yu, Zl, Zu = B.Xl, B.Xu, B.Yl, B.Yu, B.Zl, B.Zu
    if sl.kind is SliceKind.TYPE_I:
        return [
            (Xu, -Xu - Zl, Zl),
            (-Yu - Zl, Yu, Zl),
            (Xl, Yu, -Xl - Yu),
            (Xl, -Xl - Zu, Zu),
            (-Yl - Zu, Yl, Zu),
            (Xu, Yl, -Xu - Yl),
        ]
    one = Fraction(1)
    return [
        (Xu, -Xu - Zl, Zl),
        (-2 * Zl, Zl, Zl),
        (-2 * Yu, Yu, Yu),
        (Xl, Yu, -Xl - Yu),
        (Xl, -one - 2 * Xl, one + Xl),
        (Zu - one, one - 2 * Zu, Zu),
        (-Yl - Zu, Yl, Zu),
        (Yl, Yl, -2 * Yl),
        (Xu, Xu, -2 * Xu),
    ]


def polygon_vertices(sl: FusionSlice) -> list[tuple[Fraction, Fraction, Fraction]]:
    """The actual vertex set of the slice polygon, deduplicated and sorted.

    The per-kind closed forms of slice_vertices assume every wall of the
    polygon is active; a slice in degenerate position (an alcove wall or a
    bound missing the polygon entirely) drops some of those corners and
    picks up corners from the other kind's pattern list instead.  The
    union of both pattern families, filtered to points actually in the
    polygon, is always the exact vertex set (each vertex is the meet of
    two adjacent walls, and every adjacent wall pair appears in one of the
    two lists); the half-plane oracle in the test suite checks this
    exhaustively.
    """
    both = slice_vertices(FusionSlice(sl.a, sl.b, sl.ell, SliceKind.TYPE_I, sl.bounds))
    both += slice_vertices(FusionSlice(sl.a, sl.b, sl.ell, SliceKind.TYPE_II, sl.bounds))
    av, bv = sl.a.coords(), sl.b.coords()
    out = set()
    for v in both:
        c1, c2, c3 = v
        if not (c1 <= c2 <= c3 <= c1 + 1):
            continue
        if all(m >= 0 for m in _margins(av, bv, v)):
            out.add(v)
    return sorted(out)
