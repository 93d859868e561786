"""Mixed moments <T_1^lam_1 ... T_N^lam_N>_alpha of the gamma = 1 Jacobi ensemble.

The permanent perm(T_i^lam_j) equals lam^! m_lam, so the moment is
<m_lam> / (number of distinct rearrangements of lam in N slots). The
symmetric-function routes expand m_lam in a basis whose averages are
known in closed form:

* beta = 2, Schur basis. <s_mu> is a Cauchy double alternant; after
  dividing by the mu = () term it telescopes to

      prod_{i<j<=N} (mu_i - mu_j + j - i) / (j - i)
        * prod_{i<=len(mu)} (N-i+alpha)_{mu_i} / (2N-i+alpha)_{mu_i}

  so the cost depends on |lam| only, not on N.
* beta = 1, 4 (or 2), Jack basis J^(2/beta). <J_mu> comes from Kadell's
  integral (see ``integrals.kadell_moment_ratio``).

Terms with len(mu) > N vanish on an alphabet of N letters and are dropped.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Optional

from .errors import LengthExceedsAlphabet
from .exactnum import Rational, as_rational, fmt_rational, pochhammer
from .hyperdet import MomentProvider, jacobi_moment_average_cauchy, perm_average_beta2
from .integrals import JACOBI, kadell_moment_ratio, selberg
from .partitions import (
    count_distinct_permutations,
    format_partition,
    lambda_factorial_padded,
    length,
    make_partition,
    pad,
)
from .symfunc import monomial_to_jackJ, monomial_to_schur

AUTO = "auto"
SCHUR_KADELL = "schur"
JACK_KADELL = "jack"
HYPERDET_CAUCHY = "hyperdet"
HYPERDET_HEINE = "heine"
ROUTES = (AUTO, SCHUR_KADELL, JACK_KADELL, HYPERDET_CAUCHY, HYPERDET_HEINE)

ROUTE_LABELS = {
    SCHUR_KADELL: "SchurKadell",
    JACK_KADELL: "JackKadell",
    HYPERDET_CAUCHY: "HyperdetCauchy",
    HYPERDET_HEINE: "HyperdetHeine",
}


@dataclass(frozen=True)
class MomentQuery:
    lam: tuple
    alpha: Fraction
    beta: int
    N: int
    route: str = AUTO

    def __post_init__(self):
        object.__setattr__(self, "lam", make_partition(self.lam))
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        if self.beta not in (1, 2, 4):
            raise ValueError("beta must be 1, 2 or 4")
        if self.N < 1:
            raise ValueError("N must be positive")
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.route not in ROUTES:
            raise ValueError(f"unknown route {self.route!r}")
        if self.route in (SCHUR_KADELL, HYPERDET_CAUCHY, HYPERDET_HEINE) and self.beta != 2:
            raise ValueError(f"route {self.route!r} needs beta = 2")
        if length(self.lam) > self.N:
            raise LengthExceedsAlphabet(
                f"length of {format_partition(self.lam)} exceeds N = {self.N}")

    @property
    def resolved_route(self) -> str:
        if self.route != AUTO:
            return self.route
        return SCHUR_KADELL if self.beta == 2 else JACK_KADELL


@dataclass(frozen=True)
class MomentResult:
    query: MomentQuery
    value: Fraction
    route: str
    dropped_terms: int = 0

    def to_json(self) -> dict:
        return {
            "lambda": list(self.query.lam),
            "alpha": fmt_rational(self.query.alpha),
            "beta": self.query.beta,
            "N": self.query.N,
            "value": fmt_rational(self.value),
            "value_float": float(self.value),
            "route": ROUTE_LABELS[self.route],
        }


def schur_average(mu, alpha: Rational, n: int) -> Fraction:
    """<s_mu> divided by the s_() term, in telescoped form (0 if len(mu) > N)."""
    mu = make_partition(mu)
    alpha = as_rational(alpha)
    ell = len(mu)
    if ell > n:
        return Fraction(0)
    out = Fraction(1)
    for i in range(1, ell + 1):
        m_i = mu[i - 1]
        for j in range(i + 1, ell + 1):
            out *= Fraction(m_i - mu[j - 1] + j - i, j - i)
        # pairs (i, j) with j beyond len(mu) telescope
        for t in range(1, m_i + 1):
            out *= Fraction(n - i + t, ell - i + t)
        out *= pochhammer(n - i + alpha, m_i) / pochhammer(2 * n - i + alpha, m_i)
    return out


def schur_term_literal(mu, lam, alpha: Rational, n: int) -> Fraction:
    """One summand of the Schur-route master formula, written out directly.

    lam^! prod_{i<j}(j - i) / Z * prod_{i<j}(mu_i - mu_j + j - i)
    / prod_{i,j}(mu_i + N - i + j + alpha - 1), with Z = S_N(alpha, 1, 1).
    The Vandermonde prefactor is prod (j - i); see README for the sign.
    """
    alpha = as_rational(alpha)
    mu = pad(make_partition(mu), n)
    num = prod(mu[i] - mu[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod((mu[i] + n - i + j + alpha - 1 for i in range(n) for j in range(n)), start=Fraction(1))
    vander = prod(j - i for i in range(n) for j in range(i + 1, n))
    return lambda_factorial_padded(make_partition(lam), n) * vander * num / (
        selberg(n, alpha, 1, 1) * den)


def _schur_route(q: MomentQuery) -> tuple[Fraction, int]:
    total = Fraction(0)
    dropped = 0
    for mu, k in monomial_to_schur(q.lam).terms.items():
        if len(mu) > q.N:
            dropped += 1
            continue
        total += k * schur_average(mu, q.alpha, q.N)
    return total / count_distinct_permutations(q.lam, q.N), dropped


def _jack_route(q: MomentQuery) -> tuple[Fraction, int]:
    xi = Fraction(2, q.beta)
    total = Fraction(0)
    dropped = 0
    for mu, k in monomial_to_jackJ(q.lam, xi).terms.items():
        if len(mu) > q.N:
            dropped += 1
            continue
        total += k * kadell_moment_ratio(mu, q.alpha, q.beta, q.N)
    return total / count_distinct_permutations(q.lam, q.N), dropped


def moment_detail(q: MomentQuery) -> MomentResult:
    route = q.resolved_route
    dropped = 0
    if not q.lam:
        value = Fraction(1)
    elif route == SCHUR_KADELL:
        value, dropped = _schur_route(q)
    elif route == JACK_KADELL:
        value, dropped = _jack_route(q)
    elif route == HYPERDET_CAUCHY:
        value = jacobi_moment_average_cauchy(q.lam, q.alpha, q.N)
    else:
        value = perm_average_beta2(MomentProvider(JACOBI, q.alpha, 1), q.lam, q.N)
    return MomentResult(q, value, route, dropped)


def moment(lam, alpha: Rational, beta: int, n: int, route: str = AUTO) -> Fraction:
    """<T_1^lam_1 ... T_N^lam_N> for the weight T^(alpha-1) on [0, 1]^N."""
    return moment_detail(MomentQuery(lam, alpha, beta, n, route)).value


def average_determinant(alpha: Rational, n: int) -> Fraction:
    """<T_1 ... T_N> = prod_{j<N} (alpha + j) / (alpha + N + j) at beta = 2."""
    alpha = as_rational(alpha)
    return prod(((alpha + j) / (alpha + n + j) for j in range(n)), start=Fraction(1))


def _sweep_point(args) -> tuple:
    lam, beta, n, alpha = args
    return alpha, moment(lam, alpha, beta, n)


def moment_sweep(lam, beta: int, n: int, alpha_grid: Iterable[Rational],
                 workers: Optional[int] = None) -> list[tuple[Fraction, Fraction]]:
    """Evaluate the moment at each grid point; results keep grid order."""
    jobs = [(make_partition(lam), beta, n, as_rational(a)) for a in alpha_grid]
    if not workers or workers <= 1 or len(jobs) < 2:
        return [_sweep_point(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, os.cpu_count() or 1)) as pool:
        return list(pool.map(_sweep_point, jobs))
