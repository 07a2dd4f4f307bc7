"""Triangles and number/polynomial families, each against its oracle."""

import random
from fractions import Fraction
from math import comb

import pytest

from degenmath import classical
from degenmath.algebra import Poly, X, ffact_int, gfact_falling, poly_eval
from degenmath.sequences import (
    SequenceValue,
    dbell_poly,
    dbernoulli_poly,
    dbernoulli_poly_stirling,
    deuler_poly,
    dfubini_poly,
    dfubini_series_oracle,
    dharmonic,
    dhyperharmonic,
    power_sum,
    s1_triangle,
    s2_triangle,
    sequence_value,
    stirling_series_oracle,
)

LAMBDAS = [
    Fraction(0),
    Fraction(1, 2),
    Fraction(-1, 2),
    Fraction(2, 3),
    Fraction(-3, 7),
    Fraction(1),
    Fraction(3),
]


class TestTriangles:
    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_boundary_entries(self, lam):
        for tri in (s1_triangle(8, lam), s2_triangle(8, lam)):
            assert tri.entry(0, 0) == 1
            for n in range(1, 9):
                assert tri.entry(n, 0) == 0
                assert tri.entry(n, n) == 1
            assert tri.entry(3, 5) == 0
            assert tri.entry(3, -1) == 0

    def test_second_kind_small_entries(self):
        lam = Fraction(4, 9)
        tri = s2_triangle(3, lam)
        assert tri.entry(2, 1) == 1 - lam
        assert tri.entry(3, 2) == 3 * (1 - lam)

    def test_second_kind_classical(self):
        assert s2_triangle(4, 0).entry(4, 2) == 7

    def test_first_kind_small_entries(self):
        lam = Fraction(4, 9)
        tri = s1_triangle(3, lam)
        assert tri.entry(2, 1) == lam - 1
        assert tri.entry(3, 1) == (lam - 1) * (lam - 2)

    def test_first_kind_classical(self):
        tri = s1_triangle(3, 0)
        assert tri.entry(3, 1) == 2
        assert tri.entry(3, 2) == -3

    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_second_kind_recurrence_everywhere(self, lam):
        tri = s2_triangle(10, lam)
        for n in range(10):
            for k in range(n + 2):
                assert tri.entry(n + 1, k) == tri.entry(n, k - 1) + (k - n * lam) * tri.entry(n, k)

    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_triangles_match_series_oracle(self, lam):
        # nmax 20 at order 24, entrywise, both kinds
        order = 24
        tri1 = s1_triangle(20, lam)
        tri2 = s2_triangle(20, lam)
        for n in range(21):
            for k in range(n + 1):
                assert tri1.entry(n, k) == stirling_series_oracle("first", n, k, lam, order)
                assert tri2.entry(n, k) == stirling_series_oracle("second", n, k, lam, order)

    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_matrix_inversion(self, lam):
        nmax = 12
        tri1 = s1_triangle(nmax, lam)
        tri2 = s2_triangle(nmax, lam)
        for n in range(nmax + 1):
            for k in range(nmax + 1):
                both = sum(tri1.entry(n, j) * tri2.entry(j, k) for j in range(nmax + 1))
                assert both == (1 if n == k else 0)

    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_basis_change_identities(self, lam):
        rng = random.Random(5)
        xs = [Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(3)]
        for n in range(11):
            tri1 = s1_triangle(n, lam)
            tri2 = s2_triangle(n, lam)
            for x0 in xs:
                assert gfact_falling(x0, n, lam) == sum(
                    tri2.entry(n, k) * ffact_int(x0, k) for k in range(n + 1)
                )
                assert ffact_int(x0, n) == sum(
                    tri1.entry(n, k) * gfact_falling(x0, k, lam) for k in range(n + 1)
                )

    def test_oracle_errors(self):
        with pytest.raises(ValueError, match="truncation too small"):
            stirling_series_oracle("first", 5, 2, Fraction(1, 2), 4)
        with pytest.raises(ValueError):
            stirling_series_oracle("third", 2, 1, 0, 8)
        with pytest.raises(ValueError):
            stirling_series_oracle("first", 2, 3, 0, 8)

    def test_oracle_spot_values(self):
        lam = Fraction(5, 8)
        assert stirling_series_oracle("first", 2, 1, lam, 4) == lam - 1
        assert stirling_series_oracle("second", 3, 3, lam, 4) == 1
        assert stirling_series_oracle("second", 2, 1, Fraction(1, 2), 4) == Fraction(1, 2)


class TestHarmonic:
    def test_values(self):
        lam = Fraction(3, 4)
        assert dharmonic(0, lam) == 0
        assert dharmonic(2, lam) == (3 - lam) / 2
        assert dharmonic(3, 0) == Fraction(11, 6)

    def test_hyperharmonic_values(self):
        lam = Fraction(5, 6)
        assert dhyperharmonic(2, 2, lam) == dharmonic(1, lam) + dharmonic(2, lam)
        assert dhyperharmonic(0, 3, Fraction(1, 2)) == 0
        assert dhyperharmonic(3, 2, 0) == Fraction(13, 3)

    def test_hyperharmonic_reduces_to_harmonic(self):
        lam = Fraction(-2, 5)
        for n in range(8):
            assert dhyperharmonic(n, 1, lam) == dharmonic(n, lam)

    def test_hyperharmonic_cumulative(self):
        lam = Fraction(1, 3)
        for r in range(2, 5):
            for n in range(8):
                assert dhyperharmonic(n, r, lam) == sum(
                    dhyperharmonic(k, r - 1, lam) for k in range(1, n + 1)
                )

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            dhyperharmonic(3, 0, 0)


class TestBernoulli:
    def test_small(self):
        lam = Fraction(1, 2)
        assert dbernoulli_poly(0, lam) == Poly((1,))
        assert dbernoulli_poly(1, lam) == Poly(((lam - 1) / 2, 1))
        assert poly_eval(dbernoulli_poly(2, lam), 0) == (1 - lam * lam) / 6

    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_dual_path(self, lam):
        for n in range(11):
            assert dbernoulli_poly(n, lam) == dbernoulli_poly_stirling(n, lam)

    @pytest.mark.parametrize("lam", [Fraction(0), Fraction(1, 2), Fraction(-3, 7)])
    def test_binomial_convolution(self, lam):
        # beta_n(x) = sum binom(n,k) beta_k * (x)_{n-k,lam} as exact polynomials
        numbers = [poly_eval(dbernoulli_poly(k, lam), 0) for k in range(9)]
        for n in range(9):
            rhs = sum(
                (
                    gfact_falling(X, n - k, lam) * (comb(n, k) * numbers[k])
                    for k in range(n + 1)
                ),
                Poly(),
            )
            assert dbernoulli_poly(n, lam) == rhs


class TestEuler:
    def test_small(self):
        lam = Fraction(1, 2)
        assert deuler_poly(0, lam) == Poly((1,))
        assert deuler_poly(1, lam) == Poly((Fraction(-1, 2), 1))
        assert poly_eval(deuler_poly(1, 0), 0) == Fraction(-1, 2)


class TestBellFubini:
    def test_bell_small(self):
        lam = Fraction(5, 7)
        assert dbell_poly(0, lam) == Poly((1,))
        assert dbell_poly(2, lam) == Poly((0, 1 - lam, 1))
        assert poly_eval(dbell_poly(3, 0), 1) == 5

    def test_fubini_small(self):
        lam = Fraction(5, 7)
        assert dfubini_poly(1, lam) == X
        assert dfubini_poly(2, lam) == Poly((0, 1 - lam, 2))
        assert poly_eval(dfubini_poly(3, 0), 1) == 13

    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_fubini_series_oracle(self, lam):
        for n in range(11):
            assert dfubini_poly(n, lam) == dfubini_series_oracle(n, lam)


class TestClassicalDegeneration:
    """lambda = 0 must reproduce the classical families, n <= 10."""

    def test_stirling(self):
        tri1 = s1_triangle(10, 0)
        tri2 = s2_triangle(10, 0)
        c1 = classical.stirling1_rows(10)
        c2 = classical.stirling2_rows(10)
        for n in range(11):
            for k in range(n + 1):
                assert tri1.entry(n, k) == c1[n][k]
                assert tri2.entry(n, k) == c2[n][k]

    def test_harmonic(self):
        for n in range(11):
            assert dharmonic(n, 0) == classical.harmonic(n)

    def test_hyperharmonic_closed_form(self):
        for r in range(1, 5):
            for n in range(11):
                assert dhyperharmonic(n, r, 0) == classical.hyperharmonic(n, r)

    def test_bernoulli(self):
        for n in range(11):
            assert dbernoulli_poly(n, 0) == classical.bernoulli_poly(n)

    def test_euler(self):
        for n in range(11):
            assert deuler_poly(n, 0) == classical.euler_poly(n)

    def test_bell_numbers(self):
        for n in range(11):
            assert poly_eval(dbell_poly(n, 0), 1) == classical.bell_number(n)

    def test_fubini_numbers(self):
        for n in range(11):
            assert poly_eval(dfubini_poly(n, 0), 1) == classical.fubini_number(n)


class TestPowerSum:
    def test_values(self):
        lam = Fraction(9, 11)
        assert power_sum(0, 5, lam) == 5
        assert power_sum(1, 2, lam) == (1 - lam) + (2 - lam)
        assert power_sum(1, 2, Fraction(1, 2)) == 2

    def test_rejects_negative_power(self):
        with pytest.raises(ValueError):
            power_sum(-1, 3, 0)


class TestSequenceValue:
    def test_poly_families_carry_polys(self):
        for family in ("dbernoulli", "deuler", "dbell", "dfubini"):
            val = sequence_value(family, 3, Fraction(1, 2))
            assert isinstance(val, SequenceValue)
            assert isinstance(val.value, Poly)

    def test_scalar_families_carry_rationals(self):
        assert isinstance(sequence_value("dharmonic", 3, 0).value, Fraction)
        assert isinstance(sequence_value("dhyperharmonic", 3, 0, r=2).value, Fraction)

    def test_errors(self):
        with pytest.raises(ValueError):
            sequence_value("dhyperharmonic", 3, 0)
        with pytest.raises(ValueError):
            sequence_value("nope", 3, 0)
