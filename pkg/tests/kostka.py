"""Brute-force Kostka numbers, used as an independent Schur oracle."""

from functools import lru_cache
from itertools import product


def _horizontal_strips(lam, size):
    # nu inside lam with lam/nu a horizontal strip of the given size
    lam = list(lam)
    ranges = []
    for i, part in enumerate(lam):
        lower = lam[i + 1] if i + 1 < len(lam) else 0
        ranges.append(range(lower, part + 1))
    for nu in product(*ranges):
        if sum(lam) - sum(nu) == size:
            yield tuple(p for p in nu if p)


@lru_cache(maxsize=None)
def kostka(lam, mu):
    """Number of SSYT of shape lam and content mu (mu any composition)."""
    if not mu:
        return int(not lam)
    return sum(kostka(nu, mu[:-1]) for nu in _horizontal_strips(lam, mu[-1]))


def schur_in_monomials(lam, parts):
    return {mu: kostka(tuple(lam), tuple(mu)) for mu in parts if kostka(tuple(lam), tuple(mu))}
