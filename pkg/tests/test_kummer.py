"""Tests for the Kummer function M(a, b, x)."""

import math

import mpmath
import numpy as np
import pytest
from scipy import special

from radial import kummer
from radial.kummer import KummerArgs, kummer_derivative, kummer_m
from utils.errors import AccuracyError, DomainError, InputError, PoleError

REFERENCE_POINTS = [
    (0.5, 1.5, 0.3),
    (1.25, 2.5, 4.0),
    (-2.5, 1.75, 2.0),
    (3.0, 1.0, 7.5),
    (0.1, 0.4, 10.0),
]


class TestKummerValues:

    def test_origin(self):
        assert kummer_m(KummerArgs(0.3, 2.0, 0.0)) == 1.0

    def test_linear_polynomial(self):
        assert kummer_m(KummerArgs(-1, 2.0, 1.0)) == pytest.approx(0.5, abs=1e-16)

    def test_exponential(self):
        assert kummer_m(KummerArgs(1.0, 1.0, 1.0)) == pytest.approx(math.e, rel=1e-13)

    @pytest.mark.parametrize("a,b,x", REFERENCE_POINTS)
    def test_against_mpmath(self, a, b, x):
        expected = float(mpmath.hyp1f1(a, b, x))
        assert kummer_m(KummerArgs(a, b, x)) == pytest.approx(expected, rel=1e-13)

    @pytest.mark.parametrize("a,b,x", REFERENCE_POINTS)
    def test_against_scipy(self, a, b, x):
        assert kummer_m(KummerArgs(a, b, x)) == pytest.approx(special.hyp1f1(a, b, x), rel=1e-12)

    def test_array_argument(self):
        x = np.linspace(0.0, 5.0, 11)
        values = kummer_m(KummerArgs(-3, 2.25, x))
        assert values.shape == x.shape
        np.testing.assert_allclose(values, special.hyp1f1(-3, 2.25, x), rtol=1e-12, atol=1e-14)


class TestTermination:
    """Polynomial evaluation for a = -n."""

    @pytest.mark.parametrize("n", range(6))
    def test_polynomial_matches_series(self, n):
        x = np.linspace(0.0, 20.0, 201)
        args = KummerArgs(-n, 1.5 + n / 3, x)
        polynomial = kummer_m(args)
        series = kummer_m(args, terminate=False)
        scale = np.max(np.abs(polynomial))
        np.testing.assert_allclose(series, polynomial, rtol=1e-13, atol=1e-13 * scale)

    def test_degree(self):
        assert KummerArgs(-4, 1.0, 1.0).degree == 4

    def test_non_terminating_degree(self):
        with pytest.raises(InputError):
            KummerArgs(0.5, 1.0, 1.0).degree


class TestKummerErrors:

    @pytest.mark.parametrize("b", [0, -1, -3.0])
    def test_pole(self, b):
        with pytest.raises(PoleError):
            KummerArgs(1.0, b, 1.0)

    def test_negative_argument(self):
        with pytest.raises(DomainError):
            KummerArgs(1.0, 2.0, np.array([0.5, -0.1]))

    def test_iteration_cap(self, monkeypatch):
        monkeypatch.setattr(kummer, "MAX_TERMS", 5)
        with pytest.raises(AccuracyError):
            kummer_m(KummerArgs(1.0, 1.0, 10.0))


class TestContiguousRelation:
    """dM(-n, b, x)/dx = (-n/b) M(-n + 1, b + 1, x)"""

    def test_matches_central_difference(self):
        x = np.linspace(0.5, 5.0, 10)
        step = 1e-4
        numeric = (kummer_m(KummerArgs(-3, 1.5, x + step)) - kummer_m(KummerArgs(-3, 1.5, x - step))) / (2 * step)
        np.testing.assert_allclose(kummer_derivative(-3, 1.5, x), numeric, rtol=1e-6, atol=1e-8)

    def test_second_order_convergence(self):
        x = np.linspace(0.5, 5.0, 10)
        exact = kummer_derivative(-3, 1.5, x)

        def error(step):
            upper = kummer_m(KummerArgs(-3, 1.5, x + step))
            lower = kummer_m(KummerArgs(-3, 1.5, x - step))
            return np.max(np.abs((upper - lower) / (2 * step) - exact))

        assert error(1e-2) / error(5e-3) == pytest.approx(4.0, rel=0.01)

    def test_constant_has_zero_derivative(self):
        assert kummer_derivative(0, 2.0, 1.5) == 0.0
        np.testing.assert_array_equal(kummer_derivative(0, 2.0, np.ones(3)), np.zeros(3))
