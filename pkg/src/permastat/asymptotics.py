"""Large-N behaviour of the beta = 2 moments.

The regime is set by alpha(N) ~ (ell - 1) N^p. Multi-part limits use the
factorization conjecture L_lam = prod_j L_[lam_j], which is unproven; the
``conjecture`` flag on results marks where it is relied on and
``convergence_probe`` is the numerical check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Iterable

from .errors import ZeroDenominatorParameter
from .exactnum import Rational, as_rational, pochhammer
from .moments import moment
from .partitions import length, make_partition

BELOW = "p<1"
LINEAR = "p=1"
ABOVE = "p>1"


@dataclass(frozen=True)
class Regime:
    p: Fraction
    ell: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "p", as_rational(self.p))
        object.__setattr__(self, "ell", as_rational(self.ell))
        if self.ell < 1:
            raise ValueError("channel ratio must be >= 1")

    @property
    def kind(self) -> str:
        if self.p < 1:
            return BELOW
        return LINEAR if self.p == 1 else ABOVE

    @classmethod
    def parse(cls, text: str, ell: Rational = 1) -> "Regime":
        """Accept ``p<1``, ``p=1``, ``p>1`` or an explicit exponent ``p=3/2``."""
        text = text.replace(" ", "")
        if text == BELOW:
            return cls(Fraction(0), ell)
        if text == ABOVE:
            return cls(Fraction(2), ell)
        if text.startswith("p="):
            return cls(Fraction(text[2:]), ell)
        raise ValueError(f"unrecognised regime {text!r}")


def limit_single(k: int, r: Regime) -> Fraction:
    """Limit of <T_1^k> for N -> infinity."""
    if k < 1:
        raise ValueError("k must be positive")
    if r.kind == ABOVE:
        return Fraction(1)
    if r.kind == BELOW:
        return Fraction(comb(2 * k - 1, k - 1), 2 ** (2 * k - 1))
    ell = r.ell
    s = sum((comb(k - 1, i // 2) * comb(k - 1, (i + 1) // 2) * ell**i
             for i in range(2 * k - 1)), Fraction(0))
    return ell * s / (ell + 1) ** (2 * k - 1)


def limit_novaes(k: int, ell: Rational) -> Fraction:
    """Novaes' finite sum for the linear regime."""
    ell = as_rational(ell)
    if k < 1 or ell <= 0:
        raise ValueError("need k >= 1 and ell > 0")
    x = ell / (ell + 1) ** 2
    s = sum((Fraction((-1) ** (p - 1), p) * comb(k - 1, p - 1) * comb(2 * (p - 1), p - 1) * x**p
             for p in range(1, k + 1)), Fraction(0))
    return (ell + 1) * s


def is_conjectural(lam) -> bool:
    return length(make_partition(lam)) > 1


def limit_partition(lam, r: Regime) -> Fraction:
    """Product of single-part limits (factorization conjecture when len > 1)."""
    out = Fraction(1)
    for part in make_partition(lam):
        out *= limit_single(part, r)
    return out


def finite_N_single(k: int, alpha: Rational, n: int) -> Fraction:
    """<T_1^k> at beta = 2 from the terminating 4F3 representation."""
    alpha = as_rational(alpha)
    if k < 1 or n < 1 or alpha <= 0:
        raise ValueError("need k >= 1, N >= 1, alpha > 0")
    pre = (pochhammer(n + alpha - 1, k) / pochhammer(2 * n + alpha - 1, k)
           * Fraction(comb(n + k - 1, k), n))
    upper = [2 - n - alpha, -2 * n - alpha + 2 - k, Fraction(1 - k), Fraction(1 - n)]
    lower = [Fraction(1 - k - n), 2 - 2 * n - alpha, 2 - n - alpha - k]
    total = Fraction(0)
    term = Fraction(1)
    i = 0
    while True:
        total += term
        num = Fraction(1)
        for a in upper:
            num *= a + i
        if num == 0:
            break
        den = Fraction(1)
        for b in lower:
            den *= b + i
        if den == 0:
            raise ZeroDenominatorParameter(
                f"lower parameter reaches zero at index {i} before the series ends")
        term = term * num / (den * (i + 1))
        i += 1
    return pre * total


def _power(n: int, p: Fraction) -> Fraction:
    # N^p, exact when it is rational, otherwise a close rational stand-in
    if p.denominator == 1:
        return Fraction(n) ** int(p)
    if p.denominator == 2:
        r = isqrt(n)
        if r * r == n:
            return Fraction(r) ** p.numerator
    return Fraction(float(n) ** float(p)).limit_denominator(10**6)


def alpha_rule(n: int, beta: int, r: Regime) -> Fraction:
    """alpha(N) = (beta/2)(ell - 1) N^p + 1."""
    return Fraction(beta, 2) * (r.ell - 1) * _power(n, r.p) + 1


def convergence_probe(lam, beta: int, r: Regime, n_list: Iterable[int]) -> list[tuple]:
    """(N, moment at alpha(N), moment - limit) for each N."""
    lam = make_partition(lam)
    target = limit_partition(lam, r)
    rows = []
    for n in n_list:
        value = moment(lam, alpha_rule(n, beta, r), beta, n)
        rows.append((n, value, value - target))
    return rows
