import math
import random
from fractions import Fraction

import pytest

from casson3.alcove import AlcovePoint, Multiplicity, classify_multiplicity, root_classes
from casson3.arith import make_surgery_data, normalize_mod3
from casson3.engine import slices_for
from casson3.fusion import (
    CONSTRAINTS,
    Membership,
    SliceKind,
    inequality_margins,
    make_slice,
    membership,
    polygon_vertices,
    slice_bounds,
    slice_vertices,
)

THIRD = AlcovePoint(-1, 0, 1, 3)
CENTER = AlcovePoint(0, 0, 0, 3)


def test_constraint_table_is_complete():
    assert len(CONSTRAINTS) == 18
    assert len(set(CONSTRAINTS)) == 18
    # nine upper bounds, nine lower bounds; six constraints per c coordinate
    assert sum(1 for *_, sense, _b in CONSTRAINTS if sense == -1) == 9
    for k in (0, 1, 2):
        assert sum(1 for _i, _j, kk, *_ in CONSTRAINTS if kk == k) == 6


def test_margins_at_symmetric_interior_point():
    margins = inequality_margins(THIRD, THIRD, THIRD)
    assert all(m > 0 for m in margins)
    # a1+b2+c2 <= 0 has margin 1/3; a1+b1+c2 >= -1 has margin 1/3
    assert margins[0] == Fraction(1, 3)
    assert margins[11] == Fraction(1, 3)
    assert membership(THIRD, THIRD, THIRD) is Membership.INTERIOR


def test_margins_at_center_are_tight():
    margins = inequality_margins(CENTER, CENTER, CENTER)
    assert margins[0] == 0
    assert membership(CENTER, CENTER, CENTER) is Membership.BOUNDARY_FIRST_KIND


def test_invalid_point_rejected_before_evaluation():
    with pytest.raises(ValueError):
        AlcovePoint(-1, 0, 2, 3)  # c3 > c1 + 1


def test_second_kind_boundary():
    a = AlcovePoint(-2, 1, 1, 5)  # repeated eigenvalue
    b = c = THIRD
    assert all(m > 0 for m in inequality_margins(a, b, c))
    assert membership(a, b, c) is Membership.BOUNDARY_SECOND_KIND


def test_slice_bounds_example():
    a = THIRD
    b = AlcovePoint(-2, 1, 1, 5)
    B = slice_bounds(a, b)
    assert B.Xl == Fraction(-8, 15)
    assert B.Xu == Fraction(-1, 5)


def test_slice_bounds_degenerate_center():
    B = slice_bounds(CENTER, CENTER)
    assert B.Xl == B.Xu == 0


def test_swap_symmetry_of_membership():
    rng = random.Random(5)
    pts = _noncentral_points(9) + _noncentral_points(15)
    for _ in range(300):
        a, b, c = rng.choice(pts), rng.choice(pts), rng.choice(pts)
        assert membership(a, b, c) is membership(b, a, c)
        assert sorted(inequality_margins(a, b, c)) == sorted(inequality_margins(b, a, c))


def test_box_contains_polytope():
    # any c that is not outside lies inside the bound box
    rng = random.Random(9)
    pts = _noncentral_points(9)
    cs = _noncentral_points(12)
    for _ in range(300):
        a, b = rng.choice(pts), rng.choice(pts)
        B = slice_bounds(a, b)
        c = rng.choice(cs)
        if membership(a, b, c) is Membership.OUTSIDE:
            continue
        c1, c2, c3 = c.coords()
        assert B.Xl <= c1 <= B.Xu
        assert B.Yl <= c2 <= B.Yu
        assert B.Zl <= c3 <= B.Zu


def test_kind_assignment_and_rejection():
    double5 = AlcovePoint(-2, 1, 1, 5)
    assert make_slice(THIRD, THIRD, 0).kind is SliceKind.TYPE_II
    assert make_slice(double5, THIRD, 0).kind is SliceKind.TYPE_I
    assert make_slice(THIRD, double5, 2).kind is SliceKind.TYPE_I
    with pytest.raises(ValueError):
        make_slice(double5, double5, 0)
    with pytest.raises(ValueError):
        make_slice(CENTER, THIRD, 0)


def test_vertex_counts_and_membership():
    checked_I = checked_II = 0
    for trip in [(2, 3, 5), (3, 4, 5), (3, 5, 7), (4, 5, 7)]:
        data = normalize_mod3(make_surgery_data(*trip))
        for sl in slices_for(data):
            verts = slice_vertices(sl)
            assert len(verts) == (6 if sl.kind is SliceKind.TYPE_I else 9)
            for v in verts:
                assert sum(v) == 0
            # the actual polygon vertices are never interior, never outside
            for v in polygon_vertices(sl):
                c = _to_alcove(v)
                assert membership(sl.a, sl.b, c) in (
                    Membership.BOUNDARY_FIRST_KIND,
                    Membership.BOUNDARY_SECOND_KIND,
                ), (sl, v)
            if sl.kind is SliceKind.TYPE_I:
                checked_I += 1
            else:
                checked_II += 1
    assert checked_I > 10 and checked_II > 2


def test_polygon_vertices_cover_degenerate_slices():
    # a slice whose wrap wall misses the box: the per-kind closed forms
    # emit two points outside the polygon and omit two true corners
    a = AlcovePoint(-3, 0, 3, 12)
    b = AlcovePoint(-3, 0, 3, 15)
    sl = make_slice(a, b, 0)
    formula = set(slice_vertices(sl))
    actual = set(polygon_vertices(sl))
    assert not actual <= formula or not formula <= actual
    for v in actual:
        c = _to_alcove(v)
        assert membership(a, b, c) is not Membership.OUTSIDE
    assert any(membership(a, b, _to_alcove(v)) is Membership.OUTSIDE
               for v in formula - actual)


def test_polygon_vertices_match_formula_in_generic_position():
    data = normalize_mod3(make_surgery_data(2, 3, 5))
    for sl in slices_for(data):
        assert set(polygon_vertices(sl)) == set(slice_vertices(sl))


def _to_alcove(v) -> AlcovePoint:
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    return AlcovePoint(*(int(x * den) for x in v), den)


def _noncentral_points(D):
    out = []
    for k1 in range(-D + 1, 1):
        for k2 in range(max(k1, -2 * k1 - D), (-k1) // 2 + 1):
            pt = AlcovePoint(k1, k2, -k1 - k2, D)
            if classify_multiplicity(pt) is not Multiplicity.CENTRAL:
                out.append(pt)
    return out
