"""Integer partitions and compositions.

A partition is a plain tuple of positive integers in weakly decreasing
order; trailing zeros are stripped on construction so that ``(2, 1, 0)``
and ``(2, 1)`` are the same key. Padding to an alphabet size is always
explicit at the call site.
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .errors import PadLengthTooSmall, WeightMismatch
from .exactnum import Rational, as_rational

Partition = tuple  # tuple[int, ...], weakly decreasing, no zeros
Composition = tuple  # tuple[int, ...], any order, zeros allowed


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize a weakly decreasing sequence."""
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts must be weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def sort_partition(parts: Iterable[int]) -> Partition:
    """Partition with the multiset of parts of an arbitrary composition."""
    return tuple(sorted((p for p in parts if p), reverse=True))


_PARTITION_RE = re.compile(r"^\[\s*(\d+(\s*,\s*\d+)*)?\s*\]$")


def parse_partition(text: str) -> Partition:
    """Parse the ``[4,3,2]`` text form."""
    text = text.strip()
    if not _PARTITION_RE.match(text):
        raise ValueError(f"not a partition literal: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    return make_partition(int(tok) for tok in body.split(","))


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return sum(1 for p in lam if p)


def pad(lam: Partition, n: int) -> tuple:
    if n < length(lam):
        raise PadLengthTooSmall(f"cannot pad {lam} to length {n}")
    lam = tuple(p for p in lam if p)
    return lam + (0,) * (n - len(lam))


def multiplicities(lam: Partition) -> dict[int, int]:
    """Multiplicity of each nonzero part."""
    return dict(Counter(p for p in lam if p))


def lambda_factorial(lam: Partition) -> int:
    """Product of the factorials of the nonzero part multiplicities."""
    out = 1
    for m in multiplicities(lam).values():
        out *= factorial(m)
    return out


def lambda_factorial_padded(lam: Partition, n: int) -> int:
    """As ``lambda_factorial`` but also counting the n - len(lam) zero parts."""
    ell = length(lam)
    if n < ell:
        raise PadLengthTooSmall(f"pad length {n} < length {ell} of {lam}")
    return lambda_factorial(lam) * factorial(n - ell)


def conjugate(lam: Partition) -> Partition:
    lam = tuple(p for p in lam if p)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True when every prefix sum of mu is at most that of lam."""
    if weight(mu) != weight(lam):
        raise WeightMismatch(f"|{mu}| != |{lam}|")
    n = max(len(mu), len(lam))
    a = pad(mu, n)
    b = pad(lam, n)
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def distinct_permutations(lam: Partition, n: int) -> list[Composition]:
    """All distinct rearrangements of lam padded to length n, in lex order."""
    seq = sorted(pad(lam, n))
    out = [tuple(seq)]
    while True:
        # next lexicographic permutation of a multiset
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return out
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])
        out.append(tuple(seq))


def count_distinct_permutations(lam: Partition, n: int) -> int:
    """Number of distinct rearrangements; 0 when lam does not fit in n slots."""
    if length(lam) > n:
        return 0
    return factorial(n) // lambda_factorial_padded(lam, n)


def arm_leg_product(lam: Partition, xi: Rational) -> Fraction:
    """Product over cells s of (xi * arm(s) + leg(s) + 1)."""
    xi = as_rational(xi)
    lam = tuple(p for p in lam if p)
    conj = conjugate(lam)
    out = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - j - 1
            leg = conj[j] - i - 1
            out *= xi * arm + leg + 1
    return out


def hook_lengths(lam: Partition) -> list[int]:
    lam = tuple(p for p in lam if p)
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1
            for i in range(len(lam)) for j in range(lam[i])]


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n in reverse lexicographic order, largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(max_weight: int) -> Iterator[Partition]:
    for n in range(max_weight + 1):
        yield from partitions_of(n)
