"""Independent ground truth for the Jacobi (gamma = 1) moments.

``integrate_simplex_exact`` integrates polynomials one variable at a time
over the ordered region T_1 > ... > T_N, where the Vandermonde is
nonnegative and |Delta|^beta is a polynomial for every beta. The
normalization is computed the same way, so the ordering factor N! cancels.

``mc_estimate`` samples T uniformly on [0, 1]^N with numpy's PCG64
generator. Chunk k of ``CHUNK`` samples draws from child k of
``SeedSequence(seed)``, so results depend only on (seed, samples).
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import sqrt
from typing import Optional

import numpy as np

from .errors import NonIntegerAlpha, UnsupportedSize
from .exactnum import Rational, as_rational
from .partitions import count_distinct_permutations, distinct_permutations, length, make_partition

CHUNK = 1 << 16
MAX_EXACT_N = 4


class Polynomial:
    """Multivariate polynomial as a map exponent-tuple -> Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[dict] = None):
        self.nvars = nvars
        self.terms = {e: Fraction(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, nvars: int, c: Rational = 1) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps, c: Rational = 1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): c})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.nvars, out)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict = defaultdict(Fraction)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return Polynomial(self.nvars, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def integrate(self, var: int, upper: Optional[int] = None) -> "Polynomial":
        """Integrate ``var`` from 0 to variable ``upper`` (or to 1 when None)."""
        out: dict = defaultdict(Fraction)
        for e, c in self.terms.items():
            k = e[var] + 1
            e2 = list(e)
            e2[var] = 0
            if upper is not None:
                e2[upper] += k
            out[tuple(e2)] += c / k
        return Polynomial(self.nvars, out)

    def integrate_ordered(self) -> Fraction:
        """Integral over 1 > x_0 > x_1 > ... > x_{n-1} > 0."""
        p = self
        for v in range(self.nvars - 1, 0, -1):
            p = p.integrate(v, v - 1)
        p = p.integrate(0)
        return p.terms.get((0,) * self.nvars, Fraction(0))

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                term *= Fraction(x) ** k
            total += term
        return total


def _vandermonde_power(n: int, beta: int) -> Polynomial:
    p = Polynomial.constant(n)
    for i in range(n):
        for j in range(i + 1, n):
            diff = Polynomial(n, {tuple(int(k == i) for k in range(n)): 1,
                                  tuple(int(k == j) for k in range(n)): -1})
            for _ in range(beta):
                p = p * diff
    return p


def jacobi_weight_polynomial(n: int, alpha: int, beta: int) -> Polynomial:
    """Delta^beta * prod T_i^(alpha-1), nonnegative on the ordered region."""
    return _vandermonde_power(n, beta) * Polynomial.monomial((alpha - 1,) * n)


def monomial_symmetric(lam, n: int) -> Polynomial:
    return Polynomial(n, {comp: 1 for comp in distinct_permutations(lam, n)})


def integrate_simplex_exact(lam, alpha: int, beta: int, n: int) -> Fraction:
    """Exact <T_1^lam_1 ... T_N^lam_N> by iterated polynomial integration."""
    lam = make_partition(lam)
    if not 1 <= n <= MAX_EXACT_N:
        raise UnsupportedSize(f"exact oracle supports 1 <= N <= {MAX_EXACT_N}")
    alpha = as_rational(alpha)
    if alpha.denominator != 1 or alpha < 1:
        raise NonIntegerAlpha("exact oracle needs a positive integer alpha")
    if beta not in (1, 2, 4):
        raise ValueError("beta must be 1, 2 or 4")
    if length(lam) > n:
        raise UnsupportedSize(f"length of {lam} exceeds N = {n}")
    w = jacobi_weight_polynomial(n, int(alpha), beta)
    z = w.integrate_ordered()
    if not lam:
        return z / z
    num = (w * monomial_symmetric(lam, n)).integrate_ordered()
    return num / (count_distinct_permutations(lam, n) * z)


def _chunk_terms(rng: np.random.Generator, m: int, lam, alpha: float, beta: int, n: int):
    # (0, 1] keeps log(t) finite
    t = 1.0 - rng.random((m, n))
    g = np.ones(m)
    for i in range(n):
        for j in range(i + 1, n):
            g *= np.abs(t[:, i] - t[:, j]) ** beta
    if alpha != 1.0:
        g *= np.prod(t ** (alpha - 1.0), axis=1)
    if not lam:
        return g, g
    comps = np.array(distinct_permutations(lam, n), dtype=float)
    # symmetrized monomial: mean over distinct rearrangements of lam
    sym = np.exp(np.log(t) @ comps.T).mean(axis=1)
    return g * sym, g


def mc_estimate(lam, alpha: Rational, beta: int, n: int, samples: int,
                seed: int) -> tuple[float, float]:
    """Ratio estimate of the moment and its delta-method standard error."""
    lam = make_partition(lam)
    alpha_f = float(as_rational(alpha))
    if samples < 1:
        raise ValueError("samples must be positive")
    n_chunks = -(-samples // CHUNK)
    children = np.random.SeedSequence(seed).spawn(n_chunks)
    fs, gs = [], []
    for k, child in enumerate(children):
        m = min(CHUNK, samples - k * CHUNK)
        f, g = _chunk_terms(np.random.Generator(np.random.PCG64(child)), m, lam, alpha_f, beta, n)
        fs.append(f)
        gs.append(g)
    f = np.concatenate(fs)
    g = np.concatenate(gs)
    ratio = float(f.sum() / g.sum())
    resid = f - ratio * g
    if samples < 2:
        return ratio, float("inf")
    se = sqrt(float(resid @ resid) / (samples * (samples - 1))) / float(g.mean())
    return ratio, se
