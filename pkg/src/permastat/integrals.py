"""Closed-form ensemble integrals.

Weights: Gaussian exp(-x^2/2) on the real line, Laguerre exp(-x) x^(alpha-1)
on x > 0, Jacobi x^(alpha-1) (1-x)^(gamma-1) on (0, 1). The joint density
carries |Vandermonde|^beta.

Jacobi moments with gamma = 1 are reached through Kadell's integral with

    a = alpha + c (N - 1),   b = 1 + c (N - 1),   c = beta / 2,

which turns the Kadell weight (1-T)^(b-c(N-1)-1) T^(a-c(N-1)-1) into T^(alpha-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import LengthExceedsAlphabet, SingularDenominator
from .exactnum import Rational, UnitScalar, as_rational, gamma_ratio
from .partitions import length, make_partition
from .symfunc import jack_J_at_ones

GAUSSIAN = "gaussian"
LAGUERRE = "laguerre"
JACOBI = "jacobi"


@dataclass(frozen=True)
class EnsembleSpec:
    family: str
    beta: int
    N: int
    alpha: Fraction = Fraction(1)
    gamma: Fraction = Fraction(1)

    def __post_init__(self):
        if self.family not in (GAUSSIAN, LAGUERRE, JACOBI):
            raise ValueError(f"unknown ensemble family {self.family!r}")
        if self.beta not in (1, 2, 4):
            raise ValueError("beta must be 1, 2 or 4")
        if self.N < 1:
            raise ValueError("N must be positive")
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "gamma", as_rational(self.gamma))
        if self.family != GAUSSIAN and self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.family == JACOBI and self.gamma <= 0:
            raise ValueError("gamma must be positive")


def selberg(n: int, a: Rational, b: Rational, c: Rational) -> Fraction:
    """Selberg integral S_n(a, b, c) by its Gamma product formula."""
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    if n < 1:
        raise ValueError("n must be positive")
    num, den = [], []
    for j in range(n):
        num += [a + j * c, b + j * c, 1 + (j + 1) * c]
        den += [a + b + (n + j - 1) * c, c + 1]
    return gamma_ratio(num, den)


def z_norm(e: EnsembleSpec) -> UnitScalar:
    """Normalization constant; Gaussian values carry the unit sqrt(2 pi)^N."""
    half = Fraction(e.beta, 2)
    if e.family == GAUSSIAN:
        num = [1 + half * j for j in range(1, e.N + 1)]
        den = [1 + half] * e.N
        return UnitScalar(gamma_ratio(num, den), e.N)
    if e.family == LAGUERRE:
        num, den = [], []
        # Gamma(1 + (j+1) beta/2) / Gamma(1 + beta/2); the variant without
        # the unit shifts is smaller by a factor N!
        for j in range(e.N):
            num += [e.alpha + j * half, 1 + (j + 1) * half]
            den.append(1 + half)
        return UnitScalar(gamma_ratio(num, den), 0)
    return UnitScalar(selberg(e.N, e.alpha, e.gamma, half), 0)


def _kadell_args(lam, alpha: Fraction, c: Fraction, n: int) -> tuple[list, list]:
    # Gamma arguments of I_lam / I_empty; rows with lam_i = 0 cancel exactly
    num, den = [], []
    for i, part in enumerate(lam, start=1):
        lo = alpha + c * (n - i)
        hi = alpha + 1 + c * (2 * n - 1 - i)
        num += [part + lo, hi]
        den += [lo, part + hi]
    return num, den


def kadell_moment_ratio(lam, alpha: Rational, beta: int, n: int) -> Fraction:
    """<J_lam^(2/beta)> under the gamma = 1 Jacobi density, i.e. I_lam / Z."""
    lam = make_partition(lam)
    alpha = as_rational(alpha)
    if length(lam) > n:
        raise LengthExceedsAlphabet(f"length of {lam} exceeds N = {n}")
    if not lam:
        return Fraction(1)
    c = Fraction(beta, 2)
    num, den = _kadell_args(lam, alpha, c, n)
    return jack_J_at_ones(lam, 1 / c, n) * gamma_ratio(num, den)


def kadell_empty_over_selberg(alpha: Rational, beta: int, n: int,
                              indexing: str = "standard") -> Fraction:
    """Kadell's product at lam = () divided by S_N(alpha, 1, beta/2).

    ``indexing="standard"`` uses Gamma(b + c (1 - i)); ``"plus_one"`` uses a
    Gamma(b + c (i + 1)) factor instead. The ratio must be 1 for a consistent
    normalization; only the standard indexing achieves that.
    """
    if indexing not in ("standard", "plus_one"):
        raise ValueError(f"unknown indexing {indexing!r}")
    alpha = as_rational(alpha)
    c = Fraction(beta, 2)
    a = alpha + c * (n - 1)
    b = 1 + c * (n - 1)
    num, den = [], []
    for i in range(1, n + 1):
        shift = c * (1 - i) if indexing == "standard" else c * (i + 1)
        num += [c * i + 1, b + shift, a + c * (1 - i)]
        den += [c + 1, a + b + c * (1 - i)]
    # divide by S_N(alpha, 1, c)
    for j in range(n):
        den += [alpha + j * c, 1 + j * c, 1 + (j + 1) * c]
        num += [alpha + 1 + (n + j - 1) * c, c + 1]
    return gamma_ratio(num, den)


def cauchy_double_alternant(xs: Sequence[Rational], ys: Sequence[Rational]) -> Fraction:
    """Closed form of det(1 / (X_i + Y_j))."""
    xs = [as_rational(x) for x in xs]
    ys = [as_rational(y) for y in ys]
    if len(xs) != len(ys):
        raise ValueError("X and Y must have the same length")
    den = Fraction(1)
    for x in xs:
        for y in ys:
            if x + y == 0:
                raise SingularDenominator(f"X + Y vanishes at ({x}, {y})")
            den *= x + y
    num = Fraction(1)
    n = len(xs)
    for i in range(n):
        for j in range(i + 1, n):
            num *= (xs[i] - xs[j]) * (ys[i] - ys[j])
    return num / den


def selberg_identity_sides(n: int, alpha: Rational) -> tuple[Fraction, Fraction]:
    alpha = as_rational(alpha)
    lhs = Fraction(factorial(n))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            lhs *= (i - j) ** 2
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lhs /= i + j + alpha - 1
    num, den = [], []
    for j in range(n):
        num += [alpha + j + 1, j + 1, j + 2]
        den.append(alpha + 1 + n + j)
    return lhs, gamma_ratio(num, den)


def selberg_identity_check(n: int, alpha: Rational) -> bool:
    """Both sides of the determinant-average identity agree exactly."""
    lhs, rhs = selberg_identity_sides(n, alpha)
    return lhs == rhs
