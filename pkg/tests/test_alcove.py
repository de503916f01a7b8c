import itertools
import random
from fractions import Fraction

import pytest

from casson3.alcove import (
    AlcovePoint,
    Multiplicity,
    alcove_point_from_exponents,
    classify_multiplicity,
    count_root_classes,
    root_classes,
)


def all_alcove_points(D):
    for k1 in range(-D + 1, 1):
        for k2 in range(max(k1, -2 * k1 - D), (-k1) // 2 + 1):
            yield AlcovePoint(k1, k2, -k1 - k2, D)


def test_constructor_enforces_invariants():
    with pytest.raises(ValueError):
        AlcovePoint(0, 0, 1, 3)  # sum != 0
    with pytest.raises(ValueError):
        AlcovePoint(1, 0, -1, 3)  # unsorted
    with pytest.raises(ValueError):
        AlcovePoint(-4, 1, 3, 3)  # wrap bound violated


def test_multiplicity_examples():
    assert classify_multiplicity(AlcovePoint(-1, 0, 1, 3)) is Multiplicity.DISTINCT
    assert classify_multiplicity(AlcovePoint(-2, 1, 1, 5)) is Multiplicity.DOUBLE
    assert classify_multiplicity(AlcovePoint(0, 0, 0, 7)) is Multiplicity.CENTRAL
    # wrap-coincidence cases
    assert classify_multiplicity(AlcovePoint(-3, 1, 2, 5)) is Multiplicity.DOUBLE
    # the nonzero central classes: all three eigenvalues equal mod D
    assert classify_multiplicity(AlcovePoint(-2, 1, 1, 3)) is Multiplicity.CENTRAL
    assert classify_multiplicity(AlcovePoint(-1, -1, 2, 3)) is Multiplicity.CENTRAL


def test_canonical_representative_unique():
    # Distinct alcove points have distinct eigenvalue multisets mod D, and
    # normalizing any shifted/permuted exponent triple returns the original.
    rng = random.Random(3)
    for D in range(1, 13):
        pts = list(all_alcove_points(D))
        seen = {}
        for pt in pts:
            key = tuple(sorted(k % D for k in (pt.k1, pt.k2, pt.k3)))
            assert key not in seen, (pt, seen[key])
            seen[key] = pt
            for _ in range(4):
                exps = [k + D * rng.randint(-2, 2) for k in (pt.k1, pt.k2, pt.k3)]
                rng.shuffle(exps)
                assert alcove_point_from_exponents(tuple(exps), D) == pt


def test_from_exponents_rejects_bad_determinant():
    with pytest.raises(ValueError):
        alcove_point_from_exponents((0, 0, 1), 3)


def test_root_classes_examples():
    assert root_classes(3, 0, 0) == [AlcovePoint(-3, 0, 3, 9)]
    five = root_classes(5, 0, 1)
    kinds = [classify_multiplicity(x) for x in five]
    assert kinds.count(Multiplicity.DISTINCT) == 2
    assert kinds.count(Multiplicity.DOUBLE) == 4
    distinct = [x for x in five if classify_multiplicity(x) is Multiplicity.DISTINCT]
    assert distinct == [AlcovePoint(-6, 0, 6, 15), AlcovePoint(-3, 0, 3, 15)]
    for ell in (0, 1, 2):
        two = root_classes(2, ell, 1)
        assert len(two) == 1
        assert classify_multiplicity(two[0]) is Multiplicity.DOUBLE
    assert root_classes(1, 0, 1) == []
    assert root_classes(1, 2, 2) == []


def test_root_classes_are_valid_pth_roots():
    # each generated class, raised to the p-th power, is the expected center
    for p, ell, amod in [(4, 1, 2), (6, 2, 1), (9, 1, 1), (7, 0, 0)]:
        e = (amod * ell) % 3
        for pt in root_classes(p, ell, amod):
            assert pt.denom == 3 * p
            for k in (pt.k1, pt.k2, pt.k3):
                assert k % 3 == e
            assert classify_multiplicity(pt) is not Multiplicity.CENTRAL


def test_counts_match_generation():
    for p in range(1, 13):
        for amod in (0, 1, 2):
            for ell in (0, 1, 2):
                e = (amod * ell) % 3
                pts = root_classes(p, ell, amod)
                f = sum(classify_multiplicity(x) is Multiplicity.DISTINCT for x in pts)
                g = sum(classify_multiplicity(x) is Multiplicity.DOUBLE for x in pts)
                assert (f, g) == count_root_classes(p, e), (p, ell, amod)


def test_count_examples_and_sum_rules():
    assert count_root_classes(5, 0) == (2, 4)
    assert count_root_classes(6, 0) == (4, 3)
    assert count_root_classes(6, 1) == (3, 6)
    for p in range(1, 16):
        fs = sum(count_root_classes(p, ell)[0] for ell in (0, 1, 2))
        gs = sum(count_root_classes(p, ell)[1] for ell in (0, 1, 2))
        assert fs == (p - 1) * (p - 2) // 2
        assert gs == 3 * (p - 1)


def test_inversion_swaps_central_labels():
    # matrix inverse maps roots of e^{2 pi i/3} I onto roots of e^{4 pi i/3} I
    for p in (4, 5, 6, 9):
        one = root_classes(p, 1, 1)
        two = root_classes(p, 2, 1)
        assert sorted(x.inverse() for x in one) == two
        assert sorted(x.inverse() for x in two) == one


def test_su2_rotation_number():
    assert AlcovePoint(-3, 0, 3, 9).su2_rotation_number() == Fraction(2, 3)
    assert AlcovePoint(-2, 1, 1, 5).su2_rotation_number() is None
    assert AlcovePoint(0, 0, 0, 3).su2_rotation_number() is None
