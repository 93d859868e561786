"""Symmetric functions with exact rational coefficients.

Expansions are finite maps from partitions to Fractions, tagged with a
basis. Transition matrices and Jack polynomials are memoised per degree
(and per Jack parameter); the memo computes each key once even under
concurrent access.
"""

from __future__ import annotations

import os
import threading
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import wraps
from math import factorial
from typing import Callable, Iterable, Optional, Sequence

from .errors import DegreeTooLarge
from .exactnum import Rational, as_rational, fmt_rational, inverse_exact, gamma_ratio
from .partitions import (
    Partition,
    arm_leg_product,
    count_distinct_permutations,
    distinct_permutations,
    dominance_leq,
    length,
    make_partition,
    multiplicities,
    partitions_of,
    weight,
)

MONOMIAL = "monomial"
SCHUR = "schur"
JACK_P = "jackP"
JACK_J = "jackJ"
POWER_SUM = "powersum"
BASES = (MONOMIAL, SCHUR, JACK_P, JACK_J, POWER_SUM)

DEFAULT_MAX_DEGREE = 12


def max_degree() -> int:
    """Degree cap for transition matrices; ``PERMASTAT_MAX_DEGREE`` overrides."""
    env = os.environ.get("PERMASTAT_MAX_DEGREE")
    return int(env) if env else DEFAULT_MAX_DEGREE


def _check_degree(d: int) -> None:
    cap = max_degree()
    if d > cap:
        raise DegreeTooLarge(f"degree {d} exceeds the cap {cap} "
                             "(set PERMASTAT_MAX_DEGREE to raise it)")


def _once_per_key(fn: Callable) -> Callable:
    """Memoise ``fn``; concurrent callers with the same key wait for one computation."""
    cache: dict = {}
    locks: dict = {}
    guard = threading.Lock()

    @wraps(fn)
    def wrapper(*args):
        try:
            return cache[args]
        except KeyError:
            pass
        with guard:
            lock = locks.setdefault(args, threading.Lock())
        with lock:
            if args not in cache:
                cache[args] = fn(*args)
        return cache[args]

    wrapper.cache = cache
    _MEMOS.append(cache)
    return wrapper


_MEMOS: list = []


def clear_caches() -> None:
    """Drop every memoised transition matrix and Jack table."""
    for cache in _MEMOS:
        cache.clear()


@dataclass
class SymExpansion:
    basis: str
    terms: dict = field(default_factory=dict)
    degree: int = 0
    xi: Optional[Fraction] = None

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.terms.items():
            lam = make_partition(lam)
            c = as_rational(c)
            if weight(lam) != self.degree:
                raise ValueError(f"{lam} has weight != degree {self.degree}")
            if c:
                clean[lam] = c
        self.terms = clean

    def __getitem__(self, lam) -> Fraction:
        return self.terms.get(make_partition(lam), Fraction(0))

    def restrict_length(self, max_length: int) -> "SymExpansion":
        return SymExpansion(self.basis,
                            {k: v for k, v in self.terms.items() if length(k) <= max_length},
                            self.degree, self.xi)

    def to_json(self) -> dict:
        out = {"basis": self.basis}
        if self.xi is not None:
            out["xi"] = fmt_rational(self.xi)
        out["terms"] = [{"partition": list(lam), "coeff": fmt_rational(c)}
                        for lam, c in sorted(self.terms.items(), reverse=True)]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "SymExpansion":
        terms = {tuple(t["partition"]): Fraction(t["coeff"]) for t in data["terms"]}
        xi = Fraction(data["xi"]) if "xi" in data else None
        deg = sum(next(iter(terms))) if terms else 0
        return cls(data["basis"], terms, deg, xi)


# ---------------------------------------------------------------- Schur

def straighten(index: Sequence[int]) -> tuple[int, Optional[Partition]]:
    """Reduce a generalized Schur index to (sign, partition).

    Applies s_{..,i,j,..} = -s_{..,j-1,i+1,..} for i < j-1 and
    s_{..,i,i+1,..} = 0 until the index is weakly decreasing.
    Returns ``(0, None)`` when the function vanishes.
    """
    seq = list(index)
    sign = 1
    k = 0
    while k < len(seq) - 1:
        i, j = seq[k], seq[k + 1]
        if i >= j:
            k += 1
            continue
        if i == j - 1:
            return 0, None
        seq[k], seq[k + 1] = j - 1, i + 1
        sign = -sign
        # the swap can break order with the left neighbour
        k = max(k - 1, 0)
    return sign, make_partition(seq)


@_once_per_key
def _monomial_to_schur(lam: Partition) -> dict:
    n = weight(lam)
    acc: dict = defaultdict(int)
    for comp in distinct_permutations(lam, max(n, 1)):
        sign, mu = straighten(comp)
        if sign:
            acc[mu] += sign
    return {mu: Fraction(c) for mu, c in acc.items() if c}


def monomial_to_schur(lam: Iterable[int]) -> SymExpansion:
    """Inverse Kostka coefficients: m_lam = sum_mu K~[lam, mu] s_mu."""
    lam = make_partition(lam)
    return SymExpansion(SCHUR, dict(_monomial_to_schur(lam)), weight(lam))


# ------------------------------------------------------ scalar products

def z_lambda(lam: Partition) -> int:
    out = 1
    for part, mult in multiplicities(lam).items():
        out *= factorial(mult) * part**mult
    return out


def power_sum_scalar(lam, mu, xi: Rational) -> Fraction:
    """<p_lam, p_mu>_xi = xi^len(lam) z_lam if lam == mu else 0."""
    lam, mu = make_partition(lam), make_partition(mu)
    if lam != mu:
        return Fraction(0)
    return as_rational(xi) ** length(lam) * z_lambda(lam)


def _power_to_monomial_coeff(lam: Partition, mu: Partition) -> int:
    # coefficient of x^mu in p_lam: ways to drop the parts of lam into
    # len(mu) bins so that bin j sums to mu[j]
    bins = list(mu)

    def place(idx: int) -> int:
        if idx == len(lam):
            return int(all(b == 0 for b in bins))
        total = 0
        part = lam[idx]
        for j in range(len(bins)):
            if bins[j] >= part:
                bins[j] -= part
                total += place(idx + 1)
                bins[j] += part
        return total

    return place(0)


@_once_per_key
def _transition(src: str, dst: str, d: int) -> tuple:
    parts = partitions_of(d)
    if (src, dst) == (POWER_SUM, MONOMIAL):
        return tuple(tuple(Fraction(_power_to_monomial_coeff(lam, mu)) for mu in parts)
                     for lam in parts)
    if (src, dst) == (MONOMIAL, SCHUR):
        return tuple(tuple(_monomial_to_schur(lam).get(mu, Fraction(0)) for mu in parts)
                     for lam in parts)
    if (dst, src) in ((POWER_SUM, MONOMIAL), (MONOMIAL, SCHUR)):
        return tuple(tuple(row) for row in inverse_exact(_transition(dst, src, d)))
    if src == dst:
        return tuple(tuple(Fraction(int(i == j)) for j in range(len(parts)))
                     for i in range(len(parts)))
    raise ValueError(f"unsupported transition {src} -> {dst}")


def basis_transition(src: str, dst: str, d: int) -> tuple[tuple, tuple]:
    """Change-of-basis matrix T with src_lam = sum_mu T[lam][mu] dst_mu.

    Rows and columns are indexed by ``partitions_of(d)`` (returned first).
    Supported pairs: powersum <-> monomial and monomial <-> schur.
    """
    _check_degree(d)
    return partitions_of(d), _transition(src, dst, d)


@_once_per_key
def _monomial_gram(d: int, xi: Fraction) -> tuple:
    parts = partitions_of(d)
    m_to_p = _transition(MONOMIAL, POWER_SUM, d)
    norms = [xi ** length(rho) * z_lambda(rho) for rho in parts]
    n = len(parts)
    gram = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        ra = m_to_p[a]
        for b in range(a, n):
            rb = m_to_p[b]
            v = sum((x * y * w for x, y, w in zip(ra, rb, norms) if x and y), Fraction(0))
            gram[a][b] = gram[b][a] = v
    return tuple(tuple(r) for r in gram)


def scalar_product(f: SymExpansion, g: SymExpansion, xi: Rational) -> Fraction:
    """<f, g>_xi, computed through the power-sum basis."""
    xi = as_rational(xi)
    if f.degree != g.degree:
        return Fraction(0)
    d = f.degree
    fm, gm = to_monomial(f), to_monomial(g)
    _check_degree(d)
    parts = partitions_of(d)
    index = {p: i for i, p in enumerate(parts)}
    gram = _monomial_gram(d, xi)
    return sum((a * b * gram[index[p]][index[q]]
                for p, a in fm.terms.items() for q, b in gm.terms.items()), Fraction(0))


# ---------------------------------------------------------------- Jack

def dominance_extension(d: int) -> list:
    """Partitions of d ordered so that dominance-smaller ones come first."""
    return list(reversed(partitions_of(d)))


def alternative_extension(d: int) -> list:
    """A second linear extension of dominance: sort by sum of squared parts."""
    return sorted(partitions_of(d), key=lambda p: (sum(x * x for x in p), tuple(-x for x in p)))


@_once_per_key
def _jack_p_table(d: int, xi: Fraction, order: tuple) -> dict:
    # Gram-Schmidt of the monomial basis along ``order`` (increasing dominance)
    parts = partitions_of(d)
    index = {p: i for i, p in enumerate(parts)}
    gram = _monomial_gram(d, xi)
    n = len(parts)

    table: dict = {}
    # (P_mu, G P_mu, <P_mu, P_mu>) for every processed mu
    done: list = []
    for lam in order:
        row = index[lam]
        vec = [Fraction(0)] * n
        vec[row] = Fraction(1)
        for p_mu, g_p_mu, norm in done:
            # <m_lam, P_mu> is entry lam of G P_mu
            c = g_p_mu[row] / norm
            if c:
                vec = [x - c * y for x, y in zip(vec, p_mu)]
        support = [(b, vb) for b, vb in enumerate(vec) if vb]
        g_vec = [sum((gram[a][b] * vb for b, vb in support), Fraction(0)) for a in range(n)]
        norm = sum((vb * g_vec[b] for b, vb in support), Fraction(0))
        done.append((vec, g_vec, norm))
        table[lam] = {parts[b]: vb for b, vb in support}
    return table


def jack_P(lam, xi: Rational, order: Optional[Sequence] = None) -> SymExpansion:
    """Monic Jack polynomial P_lam^(xi) in the monomial basis."""
    lam = make_partition(lam)
    xi = as_rational(xi)
    if xi <= 0:
        raise ValueError("Jack parameter must be positive")
    d = weight(lam)
    _check_degree(d)
    order = tuple(order) if order is not None else tuple(dominance_extension(d))
    return SymExpansion(MONOMIAL, dict(_jack_p_table(d, xi, order)[lam]), d)


def jack_J(lam, xi: Rational) -> SymExpansion:
    """Integral-form Jack polynomial J = (arm/leg product) * P, monomial basis."""
    p = jack_P(lam, xi)
    c = arm_leg_product(make_partition(lam), xi)
    return SymExpansion(MONOMIAL, {k: c * v for k, v in p.terms.items()}, p.degree)


@_once_per_key
def _monomial_to_jack_p(lam: Partition, xi: Fraction) -> dict:
    # back-substitute m_lam = P_lam - sum_{mu < lam} v[lam, mu] m_mu
    d = weight(lam)
    coeffs: dict = {}
    residual = {lam: Fraction(1)}
    order = dominance_extension(d)
    for mu in reversed(order):
        c = residual.pop(mu, Fraction(0))
        if not c:
            continue
        coeffs[mu] = c
        for nu, v in jack_P(mu, xi).terms.items():
            if nu != mu:
                residual[nu] = residual.get(nu, Fraction(0)) - c * v
    assert not any(residual.values())
    return coeffs


def monomial_to_jackP(lam, xi: Rational, max_length: Optional[int] = None) -> SymExpansion:
    lam, xi = make_partition(lam), as_rational(xi)
    e = SymExpansion(JACK_P, dict(_monomial_to_jack_p(lam, xi)), weight(lam), xi)
    return e.restrict_length(max_length) if max_length is not None else e


def monomial_to_jackJ(lam, xi: Rational, max_length: Optional[int] = None) -> SymExpansion:
    """Coefficients of m_lam on the integral-form basis J_mu^(xi)."""
    lam, xi = make_partition(lam), as_rational(xi)
    terms = {mu: c / arm_leg_product(mu, xi)
             for mu, c in _monomial_to_jack_p(lam, xi).items()}
    e = SymExpansion(JACK_J, terms, weight(lam), xi)
    return e.restrict_length(max_length) if max_length is not None else e


# ---------------------------------------------------------- evaluation

def to_monomial(e: SymExpansion) -> SymExpansion:
    """Re-express any supported expansion in the monomial basis."""
    if e.basis == MONOMIAL:
        return e
    acc: dict = defaultdict(Fraction)
    if e.basis in (SCHUR, POWER_SUM):
        parts, mat = basis_transition(e.basis, MONOMIAL, e.degree)
        index = {p: i for i, p in enumerate(parts)}
        for lam, c in e.terms.items():
            for mu, v in zip(parts, mat[index[lam]]):
                if v:
                    acc[mu] += c * v
    else:
        for lam, c in e.terms.items():
            poly = jack_J(lam, e.xi) if e.basis == JACK_J else jack_P(lam, e.xi)
            for mu, v in poly.terms.items():
                acc[mu] += c * v
    return SymExpansion(MONOMIAL, dict(acc), e.degree)


def evaluate_at_ones(e: SymExpansion, n: int) -> Fraction:
    """Value of the expansion at x = (1, ..., 1) with n variables."""
    m = to_monomial(e)
    return sum((c * count_distinct_permutations(mu, n) for mu, c in m.terms.items()),
               Fraction(0))


def jack_J_at_ones(lam, xi: Rational, n: int) -> Fraction:
    lam = make_partition(lam)
    return evaluate_at_ones(SymExpansion(JACK_J, {lam: 1}, weight(lam), as_rational(xi)), n)


def jack_J_at_ones_multiplicative(lam, xi: Rational, n: int) -> Fraction:
    """The closed form xi^|lam| prod_i Gamma((n-i+1) lam_i / xi) / Gamma((n-i+1) / xi).

    Kept only so ``verify`` can report whether it matches the expansion.
    The product runs over the nonzero parts; zero parts would hit Gamma(0).
    Raises when the Gamma ratio is not rational.
    """
    lam, xi = make_partition(lam), as_rational(xi)
    num = [Fraction(n - i) * part / xi for i, part in enumerate(lam)]
    den = [Fraction(n - i) / xi for i in range(len(lam))]
    return xi ** weight(lam) * gamma_ratio(num, den)


def jack_J_at_ones_shifted(lam, xi: Rational, n: int) -> Fraction:
    """The same closed form read with an additive shift: Gamma(x + lam_i) / Gamma(x)."""
    lam, xi = make_partition(lam), as_rational(xi)
    num = [Fraction(n - i) / xi + part for i, part in enumerate(lam)]
    den = [Fraction(n - i) / xi for i in range(len(lam))]
    return xi ** weight(lam) * gamma_ratio(num, den)
