"""Permanents, Gegenbauer hyperdeterminants and the beta = 2 averaging formula.

For beta = 2 the generalized Heine identity turns the average of
perm(psi_i(T_j)) into N!/Z times Det_+ of the moment tensor
int w(x) psi_i(x) x^(j+k-2), and Det_+ expands into N! ordinary
determinants. With psi_i(x) = x^lam_i the result divided by N! is the
mixed moment <T_1^lam_1 ... T_N^lam_N>.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import factorial, prod
from typing import Iterable, Sequence

from .errors import NonSquareMatrix, SizeTooLargeForBruteForce, UnitMismatch
from .exactnum import Rational, UnitScalar, as_rational, det_exact, pochhammer
from .integrals import GAUSSIAN, JACOBI, LAGUERRE, EnsembleSpec, selberg, z_norm
from .partitions import distinct_permutations, lambda_factorial_padded, make_partition, pad

BRUTE_FORCE_MAX = 5


def _perm_sign(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if not seen[i]:
            j, cycle = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                cycle += 1
            if cycle % 2 == 0:
                sign = -sign
    return sign


def permanent(m: Sequence[Sequence[Rational]]) -> Fraction:
    """Permanent; direct permutation sum up to 6x6, Ryser's formula beyond."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquareMatrix("permanent of a non-square matrix")
    if n == 0:
        return Fraction(1)
    m = [[as_rational(x) for x in row] for row in m]
    if n <= 6:
        return sum((prod(m[p[i]][i] for i in range(n)) for p in permutations(range(n))),
                   Fraction(0))
    return _ryser(m)


def _ryser(m: list[list[Fraction]]) -> Fraction:
    # Gray-code walk over column subsets keeps one row-sum update per step
    n = len(m)
    row_sums = [Fraction(0)] * n
    total = Fraction(0)
    gray_prev = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        col = (gray ^ gray_prev).bit_length() - 1
        if gray & (1 << col):
            for i in range(n):
                row_sums[i] += m[i][col]
        else:
            for i in range(n):
                row_sums[i] -= m[i][col]
        gray_prev = gray
        term = prod(row_sums)
        if bin(gray).count("1") % 2:
            total -= term
        else:
            total += term
    return total if n % 2 == 0 else -total


def _tensor_size(t) -> int:
    n = len(t)
    for row in t:
        if len(row) != n or any(len(col) != n for col in row):
            raise NonSquareMatrix("tensor must be cubical")
    return n


def hyperdet_brute(t, alternated: Iterable[int], order: int = 3) -> Fraction:
    """Gegenbauer hyperdeterminant Det_I of an order-k cubical tensor.

    (1/n!) sum over sigma_1..sigma_k of sign(prod_{i in I} sigma_i) times
    prod_i t[sigma_1(i)]...[sigma_k(i)]. Index slots are 1-based.
    """
    n = len(t)
    if n > BRUTE_FORCE_MAX:
        raise SizeTooLargeForBruteForce(f"brute force limited to n <= {BRUTE_FORCE_MAX}")
    alternated = set(alternated)
    if not alternated <= set(range(1, order + 1)):
        raise ValueError(f"alternated slots must lie in 1..{order}")
    perms = [(p, _perm_sign(p)) for p in permutations(range(n))]

    def entry(idx):
        x = t
        for k in idx:
            x = x[k]
        return x

    total = Fraction(0)
    for combo in product(perms, repeat=order):
        sign = 1
        for slot in alternated:
            sign *= combo[slot - 1][1]
        term = Fraction(sign)
        for i in range(n):
            term *= entry(tuple(p[i] for p, _ in combo))
            if not term:
                break
        total += term
    return total / factorial(n)


def det_plus_expand(t) -> Fraction:
    """Det_+ (slots 2 and 3 alternated) as sum_sigma det(t[sigma(i)][i][j])."""
    n = _tensor_size(t)
    return sum((det_exact([[t[s[i]][i][j] for j in range(n)] for i in range(n)])
                for s in permutations(range(n))), Fraction(0))


@dataclass(frozen=True)
class MomentProvider:
    """Moments int w(x) x^k dx of one classical weight.

    Jacobi accepts rational alpha with a positive-integer gamma, Laguerre a
    positive-integer alpha; Gaussian moments carry one unit of sqrt(2 pi).
    """

    family: str
    alpha: Fraction = Fraction(1)
    gamma: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "gamma", as_rational(self.gamma))
        if self.family == JACOBI and (self.gamma.denominator != 1 or self.gamma < 1):
            raise ValueError("Jacobi provider needs a positive integer gamma")
        if self.family == LAGUERRE and (self.alpha.denominator != 1 or self.alpha < 1):
            raise ValueError("Laguerre provider needs a positive integer alpha")

    @property
    def unit_exponent(self) -> int:
        return 1 if self.family == GAUSSIAN else 0

    def __call__(self, k: int) -> UnitScalar:
        if self.family == JACOBI:
            g = int(self.gamma)
            # B(alpha + k, gamma) = (gamma - 1)! / (alpha + k)_gamma
            return UnitScalar(factorial(g - 1) / pochhammer(self.alpha + k, g))
        if self.family == LAGUERRE:
            return UnitScalar(Fraction(factorial(int(self.alpha) + k - 1)))
        if k % 2:
            return UnitScalar(Fraction(0), 1)
        return UnitScalar(Fraction(prod(range(k - 1, 0, -2))), 1)

    def ensemble(self, n: int, beta: int = 2) -> EnsembleSpec:
        return EnsembleSpec(self.family, beta, n, self.alpha, self.gamma)


def _rearrangements(lam, n: int):
    lam = make_partition(lam)
    return lam, lambda_factorial_padded(lam, n), distinct_permutations(lam, n)


def perm_average_beta2(provider: MomentProvider, lam, n: int) -> Fraction:
    """<T_1^lam_1 ... T_N^lam_N> at beta = 2 as a sum of determinants.

    Each distinct rearrangement rho of lam contributes
    det(m(rho_i + i + j - 2)); it stands for lam^! permutations sigma.
    """
    lam, mult, rhos = _rearrangements(lam, n)
    total = Fraction(0)
    for rho in rhos:
        total += det_exact([[provider(rho[i] + i + j).value for j in range(n)]
                            for i in range(n)])
    summed = UnitScalar(total * mult, n * provider.unit_exponent)
    z = z_norm(provider.ensemble(n))
    if summed.value and summed.unit_exponent != z.unit_exponent:
        raise UnitMismatch("moment determinant and normalization units differ")
    return UnitScalar(summed.value / z.value, summed.unit_exponent - z.unit_exponent).to_rational()


def jacobi_moment_average_cauchy(lam, alpha: Rational, n: int) -> Fraction:
    """Same moment for the gamma = 1 Jacobi weight via Cauchy's double alternant."""
    alpha = as_rational(alpha)
    lam, mult, rhos = _rearrangements(lam, n)
    total = Fraction(0)
    for rho in rhos:
        num = 1
        for i in range(n):
            for j in range(i + 1, n):
                num *= rho[i] + i - rho[j] - j
        if not num:
            continue
        den = Fraction(1)
        for i in range(n):
            base = rho[i] + i + alpha
            for j in range(n):
                den *= base + j
        total += num / den
    vander = prod(i - j for i in range(n) for j in range(i + 1, n))
    return vander * mult * total / selberg(n, alpha, 1, 1)


def moment_tensor(provider: MomentProvider, f_exps, g_exps, h_exps) -> list:
    """Tensor int w(x) x^(f_i + g_j + h_k) dx for monomial f, g, h."""
    return [[[provider(a + b + c).value for c in h_exps] for b in g_exps] for a in f_exps]
