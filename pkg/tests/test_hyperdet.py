import random
from fractions import Fraction as F
from itertools import permutations
from math import factorial

import pytest

from permastat.errors import NonSquareMatrix, SizeTooLargeForBruteForce
from permastat.exactnum import det_exact
from permastat.hyperdet import (
    MomentProvider,
    det_plus_expand,
    hyperdet_brute,
    jacobi_moment_average_cauchy,
    moment_tensor,
    perm_average_beta2,
    permanent,
)
from permastat.integrals import GAUSSIAN, JACOBI, LAGUERRE
from permastat.moments import average_determinant
from permastat.oracle import Polynomial, integrate_simplex_exact, jacobi_weight_polynomial
from permastat.partitions import lambda_factorial, partitions_up_to, length


def perm_leibniz(m):
    n = len(m)
    total = F(0)
    for p in permutations(range(n)):
        term = F(1)
        for i in range(n):
            term *= m[i][p[i]]
        total += term
    return total


def random_tensor(rng, n, lo=-5, hi=5):
    return [[[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)] for _ in range(n)]


def test_permanent_examples():
    assert permanent([[1, 2], [3, 4]]) == 10
    assert permanent([[int(i == j) for j in range(4)] for i in range(4)]) == 1
    # perm(T_i^lam_j) = lam^! m_lam(T)
    assert permanent([[2, 2], [3, 3]]) == 12 == lambda_factorial((1, 1)) * 2 * 3


def test_permanent_ryser_against_leibniz():
    rng = random.Random(5)
    for n in range(1, 9):
        m = [[F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        want = perm_leibniz(m) if n <= 7 else None
        if want is not None:
            assert permanent(m) == want
    # all-ones n x n has permanent n!
    assert permanent([[1] * 8 for _ in range(8)]) == factorial(8)


def test_hyperdet_small_cases():
    assert hyperdet_brute([[[7]]], {2, 3}) == 7
    assert det_plus_expand([[[7]]]) == 7
    d = [2, 3, 5]
    t = [[[d[i] if i == j == k else 0 for k in range(3)] for j in range(3)] for i in range(3)]
    assert det_plus_expand(t) == hyperdet_brute(t, {2, 3}) == 30


def test_det_plus_expansion_random():
    rng = random.Random(99)
    for k in range(220):
        t = random_tensor(rng, 1 + k % 3)
        assert det_plus_expand(t) == hyperdet_brute(t, {2, 3})


def test_fully_alternated_odd_order_vanishes():
    rng = random.Random(1)
    for n in (2, 3):
        for _ in range(10):
            assert hyperdet_brute(random_tensor(rng, n), {1, 2, 3}) == 0


def test_order_two_hyperdet_is_determinant():
    rng = random.Random(4)
    for n in (1, 2, 3, 4):
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        # (1/n!) sum_{s1, s2} sign(s1 s2) prod m[s1(i)][s2(i)] = det
        assert hyperdet_brute(m, {1, 2}, order=2) == det_exact(m)
        assert hyperdet_brute(m, set(), order=2) == permanent(m)


def test_hyperdet_errors():
    with pytest.raises(NonSquareMatrix):
        det_plus_expand([[[1, 2]], [[3, 4]]])
    with pytest.raises(SizeTooLargeForBruteForce):
        hyperdet_brute([[[0] * 6] * 6] * 6, {2, 3})
    with pytest.raises(ValueError):
        hyperdet_brute([[[1]]], {4})


def _power_row(n, exps):
    # matrix of monomials x_j^{e_i} as Polynomials
    return [[Polynomial.monomial(tuple(e if k == j else 0 for k in range(n))) for j in range(n)] for e in exps]


def _poly_det(rows, signed):
    n = len(rows)
    total = Polynomial(n)
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = Polynomial.constant(n, (-1) ** inv if signed else 1)
        for i in range(n):
            term = term * rows[i][p[i]]
        total = total + term
    return total


def _cube_integral(poly):
    for v in range(poly.nvars):
        poly = poly.integrate(v)
    return poly.terms.get((0,) * poly.nvars, F(0))


@pytest.mark.parametrize("n", [2, 3])
def test_generalized_heine_identity(n):
    rng = random.Random(10 + n)
    for _ in range(6):
        alpha = rng.randint(1, 3)
        f, g, h = ([rng.randint(0, 3) for _ in range(n)] for _ in range(3))
        lhs_poly = (_poly_det(_power_row(n, f), False) * _poly_det(_power_row(n, g), True)
                    * _poly_det(_power_row(n, h), True) * Polynomial.monomial((alpha - 1,) * n))
        rhs = factorial(n) * det_plus_expand(moment_tensor(MomentProvider(JACOBI, alpha), f, g, h))
        assert _cube_integral(lhs_poly) == rhs


def test_moment_provider_values():
    assert MomentProvider(JACOBI, 2)(3).value == F(1, 5)
    assert MomentProvider(JACOBI, 1, 3)(0).value == F(1, 3)
    assert MomentProvider(LAGUERRE, 2)(3).value == 24
    g = MomentProvider(GAUSSIAN)
    assert (g(4).value, g(4).unit_exponent) == (3, 1)
    assert g(3).value == 0
    with pytest.raises(ValueError):
        MomentProvider(JACOBI, 1, F(1, 2))
    with pytest.raises(ValueError):
        MomentProvider(LAGUERRE, F(3, 2))


def test_perm_average_examples():
    jac = MomentProvider(JACOBI, 1)
    assert perm_average_beta2(jac, [], 3) == 1
    assert perm_average_beta2(jac, [1, 1], 2) == F(1, 6)
    assert jacobi_moment_average_cauchy([4, 3, 2], 1, 3) == F(13, 8820)
    assert jacobi_moment_average_cauchy([0], 1, 1) == 1


def test_laguerre_and_gaussian_averages():
    # Laguerre alpha = 2, N = 2: <T_1> = <(T_1 + T_2)/2>; Gamma moments of the expanded integrand
    lag = MomentProvider(LAGUERRE, 2)
    w = jacobi_weight_polynomial(2, 2, 2)
    gamma_int = lambda poly: sum((c * factorial(e1) * factorial(e2) for (e1, e2), c in poly.terms.items()), F(0))
    m1 = Polynomial(2, {(1, 0): 1, (0, 1): 1})
    assert perm_average_beta2(lag, [1], 2) == gamma_int(w * m1) / (2 * gamma_int(w))
    assert perm_average_beta2(lag, [1], 2) == 3
    # Gaussian N = 1: <x^2> = 1, <x^4> = 3
    gau = MomentProvider(GAUSSIAN)
    assert perm_average_beta2(gau, [2], 1) == 1
    assert perm_average_beta2(gau, [4], 1) == 3
    # N = 2 GUE with this weight: <x1^2> = 2 (mean of tr H^2 / N)
    assert perm_average_beta2(gau, [2], 2) == 2


def test_jacobi_general_gamma_against_polynomial():
    # weight x^(alpha-1) (1-x)^(gamma-1), N = 2
    for alpha, gamma in ((1, 2), (2, 3)):
        prov = MomentProvider(JACOBI, alpha, gamma)
        one_minus = Polynomial.constant(2)
        for var in range(2):
            factor = Polynomial(2, {(0, 0): 1, tuple(int(k == var) for k in range(2)): -1})
            for _ in range(gamma - 1):
                one_minus = one_minus * factor
        w = jacobi_weight_polynomial(2, alpha, 2) * one_minus
        for lam in ((1,), (2,), (1, 1), (2, 1)):
            from permastat.oracle import monomial_symmetric
            from permastat.partitions import count_distinct_permutations
            num = (w * monomial_symmetric(lam, 2)).integrate_ordered()
            want = num / (count_distinct_permutations(lam, 2) * w.integrate_ordered())
            assert perm_average_beta2(prov, lam, 2) == want


def test_row_convention_at_two():
    # both routes and the exact oracle agree at N = 2 for asymmetric lam
    for lam in ((3, 1), (2,), (4, 1)):
        for alpha in (1, 2, 3):
            want = integrate_simplex_exact(lam, alpha, 2, 2)
            assert perm_average_beta2(MomentProvider(JACOBI, alpha), lam, 2) == want
            assert jacobi_moment_average_cauchy(lam, alpha, 2) == want


def test_routes_agree():
    for lam in partitions_up_to(5):
        for n in range(max(length(lam), 1), 6):
            for alpha in (F(1), F(2), F(7, 3)):
                a = perm_average_beta2(MomentProvider(JACOBI, alpha), lam, n)
                assert a == jacobi_moment_average_cauchy(lam, alpha, n)


def test_all_ones_is_average_determinant():
    for n in range(1, 7):
        for alpha in (F(1), F(5, 2)):
            assert jacobi_moment_average_cauchy((1,) * n, alpha, n) == average_determinant(alpha, n)


def test_padding_invariance():
    for lam in ((2, 1), (3,)):
        padded = lam + (0, 0)
        assert jacobi_moment_average_cauchy(padded, 2, 3) == jacobi_moment_average_cauchy(lam, 2, 3)
        assert perm_average_beta2(MomentProvider(JACOBI, 2), padded, 3) == \
            perm_average_beta2(MomentProvider(JACOBI, 2), lam, 3)
