from fractions import Fraction as F
from math import factorial

import pytest

from permastat.errors import NonIntegerAlpha, UnsupportedSize
from permastat.moments import moment
from permastat.oracle import (
    CHUNK,
    Polynomial,
    integrate_simplex_exact,
    jacobi_weight_polynomial,
    mc_estimate,
    monomial_symmetric,
)
from permastat.partitions import length, partitions_up_to


def test_polynomial_arithmetic():
    x = Polynomial.monomial((1, 0))
    y = Polynomial.monomial((0, 1))
    s = (x + y) * (x + y)
    assert s.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert s.evaluate((F(1, 2), 3)) == F(49, 4)
    assert (x + Polynomial(2, {(1, 0): -1})).terms == {}
    assert Polynomial.constant(2, 3) == Polynomial(2, {(0, 0): 3})


def test_polynomial_integration():
    # int_0^1 x^2 dx = 1/3; int_0^y x dx = y^2 / 2
    assert Polynomial.monomial((2,)).integrate(0).terms == {(0,): F(1, 3)}
    assert Polynomial.monomial((1, 0)).integrate(0, 1).terms == {(0, 2): F(1, 2)}
    # volume of the ordered simplex is 1/n!
    for n in range(1, 5):
        assert Polynomial.constant(n).integrate_ordered() == F(1, factorial(n))


def test_ordered_region_factor_beta2():
    for n in (2, 3):
        w = jacobi_weight_polynomial(n, 2, 2) * monomial_symmetric((2, 1), n)
        full = w
        for v in range(n):
            full = full.integrate(v)
        assert factorial(n) * w.integrate_ordered() == full.terms[(0,) * n]


def test_exact_examples():
    assert integrate_simplex_exact([1], 1, 1, 2) == F(1, 2)
    assert integrate_simplex_exact([2], 1, 2, 2) == F(11, 30)
    for beta in (1, 2, 4):
        assert integrate_simplex_exact([], 2, beta, 3) == 1


def test_exact_matches_moment():
    for lam in partitions_up_to(4):
        for n in range(max(length(lam), 1), 4):
            for beta in (1, 2, 4):
                for a in (1, 2, 3):
                    assert integrate_simplex_exact(lam, a, beta, n) == moment(lam, a, beta, n)


def test_exact_at_four_variables():
    assert integrate_simplex_exact([2, 1], 1, 4, 4) == moment([2, 1], 1, 4, 4)


def test_exact_errors():
    with pytest.raises(UnsupportedSize):
        integrate_simplex_exact([1], 1, 2, 5)
    with pytest.raises(NonIntegerAlpha):
        integrate_simplex_exact([1], F(3, 2), 2, 2)
    with pytest.raises(UnsupportedSize):
        integrate_simplex_exact([1, 1, 1], 1, 2, 2)
    with pytest.raises(ValueError):
        integrate_simplex_exact([1], 1, 3, 2)


def test_mc_empty_partition_is_exact():
    assert mc_estimate([], F(3, 2), 2, 3, 1000, 5) == (1.0, 0.0)


def test_mc_reproducible_and_seed_sensitive():
    n = CHUNK + 123
    a = mc_estimate([2, 1], 2, 2, 3, n, 42)
    b = mc_estimate([2, 1], 2, 2, 3, n, 42)
    c = mc_estimate([2, 1], 2, 2, 3, n, 43)
    assert a == b
    assert a != c


def test_mc_within_four_sigma_second_moment():
    est, se = mc_estimate([2], 1, 2, 2, 10**6, 7)
    assert abs(est - 11 / 30) < 4 * se


def test_mc_rational_alpha():
    target = float(moment([1, 1], F(5, 2), 1, 2))
    est, se = mc_estimate([1, 1], F(5, 2), 1, 2, 200_000, 11)
    assert abs(est - target) < 4 * se


def test_mc_rejects_bad_sample_count():
    with pytest.raises(ValueError):
        mc_estimate([1], 1, 2, 2, 0, 1)
