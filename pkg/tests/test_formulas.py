"""Tests for the closed-form family evaluators and coefficient ladders."""

from __future__ import annotations

from fractions import Fraction

import pytest

from mahlerzeta.combinations import ZetaCombination
from mahlerzeta.formulas import (
    Family,
    FamilySpec,
    MahlerResult,
    coeff_a,
    coeff_b,
    family_one,
    family_three,
    family_two,
    mahler_measure,
    reduction_identity,
    reduction_induction_identity,
)
from mahlerzeta.values import combination_value

import mpmath as mp


def test_family_labels() -> None:
    assert Family.from_label("i") is Family.ONE
    assert Family.from_label("II") is Family.TWO
    assert Family.from_label(" iii ") is Family.THREE
    with pytest.raises(ValueError):
        Family.from_label("iv")


def test_family_spec_validation() -> None:
    spec = FamilySpec(Family.ONE, 3)
    assert spec.parity == 1
    assert FamilySpec(Family.ONE, 2).parity == 0
    with pytest.raises(ValueError):
        FamilySpec(Family.ONE, 0)
    with pytest.raises(ValueError):
        FamilySpec(Family.THREE, 0)
    with pytest.raises(ValueError):
        FamilySpec(Family.TWO, -1)
    with pytest.raises(ValueError):
        FamilySpec("i", 2)  # type: ignore[arg-type]
    with pytest.raises(ValueError):
        FamilySpec(Family.ONE, 2.0)  # type: ignore[arg-type]
    # family ii admits the transform-free base case
    assert FamilySpec(Family.TWO, 0).parity == 0


def test_family_spec_derived_quantities() -> None:
    assert FamilySpec(Family.ONE, 4).pi_normalization == 4
    assert FamilySpec(Family.TWO, 3).pi_normalization == 5
    assert FamilySpec(Family.THREE, 3).pi_normalization == 4
    assert FamilySpec(Family.ONE, 1).torus_dimension == 2
    assert FamilySpec(Family.TWO, 0).torus_dimension == 3
    assert FamilySpec(Family.TWO, 1).torus_dimension == 4
    assert FamilySpec(Family.THREE, 2).torus_dimension == 4


def test_mahler_result_validates_weight() -> None:
    spec = FamilySpec(Family.ONE, 2)
    good = ZetaCombination.zeta(3, 0, 7)
    result = MahlerResult(spec, 2, good)
    assert result.total_weight() == 3
    with pytest.raises(ValueError):
        MahlerResult(spec, 3, good)  # contradicts the spec's normalization
    with pytest.raises(ValueError):
        # weight-inhomogeneous right side
        MahlerResult(spec, 2, good + ZetaCombination.zeta(5, 0, 1))
    with pytest.raises(ValueError):
        # homogeneous but of the wrong total weight
        MahlerResult(spec, 2, ZetaCombination.zeta(5, 0, 1))


def test_coeff_a_values() -> None:
    assert coeff_a(1, 0) == 1
    assert coeff_a(2, 1) == Fraction(1, 6)
    assert coeff_a(2, 0) == Fraction(2, 3)
    with pytest.raises(ValueError):
        coeff_a(0, 0)
    with pytest.raises(ValueError):
        coeff_a(2, 2)
    with pytest.raises(ValueError):
        coeff_a(2, -1)


def test_coeff_b_values() -> None:
    assert coeff_b(0, 0) == 1
    assert coeff_b(1, 0) == Fraction(1, 2)
    assert coeff_b(1, 1) == Fraction(1, 2)
    with pytest.raises(ValueError):
        coeff_b(-1, 0)
    with pytest.raises(ValueError):
        coeff_b(1, 2)


def test_reduction_identity() -> None:
    assert reduction_identity(1, "ab")
    assert reduction_identity(0, "ba")
    assert reduction_identity(6, "ab")
    for n in range(1, 16):
        assert reduction_identity(n, "ab")
    for n in range(0, 16):
        assert reduction_identity(n, "ba")
    with pytest.raises(ValueError):
        reduction_identity(0, "ab")
    with pytest.raises(ValueError):
        reduction_identity(-1, "ba")
    with pytest.raises(ValueError):
        reduction_identity(2, "xy")


def test_reduction_induction_identity() -> None:
    for n in range(1, 16):
        assert reduction_induction_identity(n, "ab")
    for n in range(0, 16):
        assert reduction_induction_identity(n, "ba")
    with pytest.raises(ValueError):
        reduction_induction_identity(0, "ab")
    with pytest.raises(ValueError):
        reduction_induction_identity(1, "other")


def test_family_one_small_cases() -> None:
    r2 = family_one(FamilySpec(Family.ONE, 2))
    assert r2.pi_normalization == 2
    assert r2.combination == ZetaCombination.zeta(3, 0, 7)
    r4 = family_one(FamilySpec(Family.ONE, 4))
    assert r4.combination == ZetaCombination.zeta(5, 0, 62) + ZetaCombination.zeta(
        3, 2, Fraction(14, 3)
    )
    r1 = family_one(FamilySpec(Family.ONE, 1))
    assert r1.pi_normalization == 1
    assert r1.combination == ZetaCombination.lchi4(2, 0, 2)
    with pytest.raises(ValueError):
        family_one(FamilySpec(Family.TWO, 2))


def test_family_one_even_coefficients_positive() -> None:
    for transforms in range(2, 21, 2):
        result = family_one(FamilySpec(Family.ONE, transforms))
        assert all(coeff > 0 for _, coeff in result.combination.terms())


def test_family_two_small_cases() -> None:
    r0 = family_two(FamilySpec(Family.TWO, 0))
    assert r0.pi_normalization == 2
    assert r0.combination == ZetaCombination.zeta(3, 0, Fraction(7, 2))
    r2 = family_two(FamilySpec(Family.TWO, 2))
    assert r2.pi_normalization == 4
    assert r2.combination == ZetaCombination.zeta(5, 0, 93)
    r4 = family_two(FamilySpec(Family.TWO, 4))
    assert r4.combination == ZetaCombination.zeta(7, 0, Fraction(1905, 2)) + ZetaCombination.zeta(
        5, 2, 31
    )
    r1 = family_two(FamilySpec(Family.TWO, 1))
    assert r1.pi_normalization == 3
    assert r1.combination == ZetaCombination.lchi4(2, 2, 2) + ZetaCombination.l3_ii(1, 0, 2)
    with pytest.raises(ValueError):
        family_two(FamilySpec(Family.ONE, 2))


def test_family_two_three_transforms() -> None:
    result = family_two(FamilySpec(Family.TWO, 3))
    expected = (
        ZetaCombination.lchi4(4, 2, 24)
        + ZetaCombination.lchi4(2, 4, 1)
        + ZetaCombination.l3_ii(3, 0, 8)
        + ZetaCombination.l3_ii(1, 2, 1)
    )
    assert result.combination == expected


def test_family_three_small_cases() -> None:
    r1 = family_three(FamilySpec(Family.THREE, 1))
    assert r1.pi_normalization == 2
    assert r1.combination == ZetaCombination.zeta(3, 0, Fraction(7, 2)) + ZetaCombination.log2(
        2, Fraction(1, 2)
    )
    r2 = family_three(FamilySpec(Family.THREE, 2))
    assert r2.combination == ZetaCombination.zeta(3, 1, Fraction(21, 4)) + ZetaCombination.log2(
        3, Fraction(1, 2)
    )
    r3 = family_three(FamilySpec(Family.THREE, 3))
    assert r3.combination == (
        ZetaCombination.zeta(5, 0, 31)
        + ZetaCombination.zeta(3, 2, Fraction(49, 12))
        + ZetaCombination.log2(4, Fraction(1, 2))
    )
    with pytest.raises(ValueError):
        family_three(FamilySpec(Family.ONE, 2))
    with pytest.raises(ValueError):
        family_three(FamilySpec(Family.THREE, 2), variant="other")
    with pytest.raises(ValueError):
        family_three(FamilySpec(Family.THREE, 2), binomial_reading="x")


def test_family_three_variants_agree() -> None:
    for transforms in range(1, 13):
        spec = FamilySpec(Family.THREE, transforms)
        base = family_three(spec).combination
        assert family_three(spec, variant="euler").combination == base
        assert family_three(spec, binomial_reading="l").combination == base
        assert family_three(spec, variant="euler", binomial_reading="l").combination == base


def test_weight_homogeneity_all_families() -> None:
    for family, start in ((Family.ONE, 1), (Family.TWO, 0), (Family.THREE, 1)):
        for transforms in range(start, 11):
            result = mahler_measure(FamilySpec(family, transforms))
            assert result.combination.homogeneous_weight() == result.pi_normalization + 1


def test_mahler_measure_dispatch() -> None:
    assert mahler_measure(FamilySpec(Family.ONE, 2)) == family_one(FamilySpec(Family.ONE, 2))
    assert mahler_measure(FamilySpec(Family.TWO, 1)) == family_two(FamilySpec(Family.TWO, 1))
    assert mahler_measure(FamilySpec(Family.THREE, 1)) == family_three(
        FamilySpec(Family.THREE, 1)
    )


def test_family_three_numeric_positivity() -> None:
    # the measures are positive and strictly exceed the bare log-2 term
    with mp.workdps(20):
        for transforms in range(1, 5):
            result = family_three(FamilySpec(Family.THREE, transforms))
            total = combination_value(result.combination, digits=15)
            log2_part = mp.pi ** result.pi_normalization * mp.log(2) / 2
            assert total > log2_part > 0
