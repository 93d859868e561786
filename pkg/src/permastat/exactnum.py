"""Exact scalar arithmetic.

``fractions.Fraction`` is the rational type throughout the package: it is
arbitrary precision, always reduced, and keeps a positive denominator.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import (
    NonSquareMatrix,
    NonpositiveGammaArgument,
    UnitMismatch,
    UnpairableGammaArguments,
)

Rational = Union[int, Fraction]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def pochhammer(x: Rational, n: int) -> Fraction:
    """Rising factorial x (x+1) ... (x+n-1)."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    x = as_rational(x)
    if x.denominator == 1:
        a = x.numerator
        out = 1
        for m in range(n):
            out *= a + m
        return Fraction(out)
    # (p/q)_n = prod(p + m q) / q^n keeps the loop in integers
    p, q = x.numerator, x.denominator
    num = 1
    for m in range(n):
        num *= p + m * q
    return Fraction(num, q**n)


def _gamma_pair(top: Fraction, bottom: Fraction) -> Fraction:
    # Gamma(top) / Gamma(bottom) with top - bottom integral
    shift = top - bottom
    assert shift.denominator == 1
    if top <= 0 or bottom <= 0:
        raise NonpositiveGammaArgument(
            f"Gamma({top})/Gamma({bottom}) crosses a pole")
    m = int(shift)
    if m >= 0:
        return pochhammer(bottom, m)
    return 1 / pochhammer(top, -m)


def gamma_ratio(numerator_args: Iterable[Rational],
                denominator_args: Iterable[Rational]) -> Fraction:
    """Exact value of prod Gamma(numerator_args) / prod Gamma(denominator_args).

    Arguments are grouped by fractional part; within a class both sides
    are sorted (largest first) and paired in order, and each pair
    collapses to a rising factorial. Integer arguments left over after
    pairing are evaluated as factorials; any other leftover is
    irrational and rejected.
    """
    classes: dict[Fraction, list[list[Fraction]]] = defaultdict(lambda: [[], []])
    for x in numerator_args:
        x = as_rational(x)
        classes[x - (x.numerator // x.denominator)][0].append(x)
    for x in denominator_args:
        x = as_rational(x)
        classes[x - (x.numerator // x.denominator)][1].append(x)

    out = Fraction(1)
    for frac, (tops, bottoms) in classes.items():
        if len(tops) != len(bottoms) and frac != 0:
            raise UnpairableGammaArguments(
                f"fractional class {frac}: {len(tops)} numerator vs "
                f"{len(bottoms)} denominator arguments")
        tops.sort(reverse=True)
        bottoms.sort(reverse=True)
        for top, bottom in zip(tops, bottoms):
            out *= _gamma_pair(top, bottom)
        k = min(len(tops), len(bottoms))
        for top in tops[k:]:
            out *= _gamma_pair(top, Fraction(1))
        for bottom in bottoms[k:]:
            out /= _gamma_pair(bottom, Fraction(1))
    return out


def _bareiss_int(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_exact(m: Sequence[Sequence[Rational]]) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Each row is first scaled by the lcm of its denominators so that the
    elimination runs entirely on integers with exact divisions.
    """
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise NonSquareMatrix(f"expected a nonempty square matrix, got {n} rows")
    scale = 1
    rows: list[list[int]] = []
    for row in m:
        row = [as_rational(x) for x in row]
        d = lcm(*(x.denominator for x in row))
        scale *= d
        rows.append([x.numerator * (d // x.denominator) for x in row])
    if n == 1:
        return Fraction(rows[0][0], scale)
    return Fraction(_bareiss_int(rows), scale)


@dataclass(frozen=True)
class UnitScalar:
    """A rational times ``unit ** unit_exponent`` for a transcendental unit.

    The Gaussian ensemble uses sqrt(2 pi) as its unit.
    """

    value: Fraction
    unit_exponent: int = 0

    def __post_init__(self):
        object.__setattr__(self, "value", as_rational(self.value))

    def __add__(self, other: "UnitScalar") -> "UnitScalar":
        if self.value == 0:
            return other
        if other.value == 0:
            return self
        if self.unit_exponent != other.unit_exponent:
            raise UnitMismatch(
                f"cannot add unit^{self.unit_exponent} and unit^{other.unit_exponent}")
        return UnitScalar(self.value + other.value, self.unit_exponent)

    def __neg__(self) -> "UnitScalar":
        return UnitScalar(-self.value, self.unit_exponent)

    def __sub__(self, other: "UnitScalar") -> "UnitScalar":
        return self + (-other)

    def __mul__(self, other) -> "UnitScalar":
        if isinstance(other, UnitScalar):
            return UnitScalar(self.value * other.value,
                              self.unit_exponent + other.unit_exponent)
        return UnitScalar(self.value * as_rational(other), self.unit_exponent)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "UnitScalar":
        if isinstance(other, UnitScalar):
            return UnitScalar(self.value / other.value,
                              self.unit_exponent - other.unit_exponent)
        return UnitScalar(self.value / as_rational(other), self.unit_exponent)

    def to_rational(self) -> Fraction:
        if self.unit_exponent != 0 and self.value != 0:
            raise UnitMismatch(
                f"unit exponent {self.unit_exponent} did not cancel")
        return self.value


def fmt_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def inverse_exact(m: Sequence[Sequence[Rational]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquareMatrix("inverse of a non-square matrix")
    a = [[as_rational(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        inv_p = 1 / a[k][k]
        a[k] = [x * inv_p for x in a[k]]
        for r in range(n):
            if r != k and a[r][k] != 0:
                f = a[r][k]
                a[r] = [x - f * y for x, y in zip(a[r], a[k])]
    return [row[n:] for row in a]
