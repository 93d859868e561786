"""Invariant suites behind ``permastat verify``.

Every check returns a ``CheckResult``; a check fails when its assertion
fails or when it overruns its time budget. ``report`` entries are
informational comparisons and never affect the exit status.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .asymptotics import (
    Regime,
    alpha_rule,
    finite_N_single,
    limit_novaes,
    limit_partition,
    limit_single,
)
from .errors import PermastatError
from .exactnum import det_exact
from .hyperdet import det_plus_expand, hyperdet_brute
from .integrals import cauchy_double_alternant, kadell_empty_over_selberg, selberg_identity_check
from .moments import HYPERDET_CAUCHY, HYPERDET_HEINE, JACK_KADELL, SCHUR_KADELL, moment
from .oracle import integrate_simplex_exact, mc_estimate
from .partitions import length, partitions_up_to
from .symfunc import (
    clear_caches,
    jack_J_at_ones,
    jack_J_at_ones_multiplicative,
    jack_J_at_ones_shifted,
    monomial_to_jackJ,
    monomial_to_schur,
)

F = Fraction

SCHUR_432 = {
    (4, 3, 2): 1, (4, 3, 1, 1): -1, (4, 2, 2, 1): -1, (4, 2, 1, 1, 1): 2,
    (4, 1, 1, 1, 1, 1): -2, (3, 3, 3): -2, (3, 3, 2, 1): 1, (3, 2, 1, 1, 1, 1): -2,
    (3, 1, 1, 1, 1, 1, 1): 4, (2, 2, 1, 1, 1, 1, 1): 2, (2, 1, 1, 1, 1, 1, 1, 1): -6,
    (1,) * 9: 6,
}
JACK_432 = {
    F(1, 2): {(3, 3, 3): F(-2, 1575), (4, 3, 2): F(4, 2025)},
    F(2): {(3, 3, 3): F(-1, 50400), (4, 3, 2): F(1, 18144)},
}
LIMIT_BELOW_432 = F(525, 16384)
LIMIT_LINEAR_432 = F(1253598528, 6103515625)


def reference_432(alpha, beta: int) -> Fraction:
    """Reference N = 3 rational functions for lam = [4,3,2]."""
    a = F(alpha)
    if beta == 2:
        return ((28 + 10 * a + a**2) * (2 + a) ** 2 * (3 + a) * a * (1 + a) ** 2
                / ((6 + a) ** 2 * (4 + a) * (7 + a) * (5 + a) ** 3 * (8 + a)))
    if beta == 4:
        return ((59 + 14 * a + a**2) * (4 + a) ** 2 * a * (1 + a) * (2 + a) * (3 + a)
                / ((7 + a) ** 2 * (8 + a) * (9 + a) ** 2 * (10 + a) * (11 + a) * (12 + a)))
    if beta == 1:
        return ((17 + 8 * a + a**2) * a * (1 + a) ** 2 * (1 + 2 * a) * (3 + 2 * a)
                / ((6 + a) * (5 + a) * (3 + a) * (4 + a) ** 2 * (2 * a + 7) * (9 + 2 * a)))
    raise ValueError("beta must be 1, 2 or 4")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    seconds: float
    budget: float
    detail: str = ""
    report: bool = False

    @property
    def ok(self) -> bool:
        return self.report or (self.passed and self.seconds <= self.budget)

    def line(self) -> str:
        if self.report:
            tag = "INFO"
        else:
            tag = "PASS" if self.ok else "FAIL"
        timing = f"{self.seconds:.2f}s/{self.budget:g}s" if not self.report else ""
        return f"{tag} {self.name} {timing} {self.detail}".rstrip().replace("  ", " ")


def run_check(name: str, budget: float, fn: Callable[[], tuple], report: bool = False) -> CheckResult:
    t0 = time.perf_counter()
    try:
        passed, detail = fn()
    except PermastatError as exc:
        passed, detail = False, f"error: {exc}"
    return CheckResult(name, bool(passed), time.perf_counter() - t0, budget, detail, report)


# ------------------------------------------------------------ criteria

def check_schur_golden() -> tuple:
    clear_caches()
    got = monomial_to_schur([4, 3, 2]).terms
    return got == {k: F(v) for k, v in SCHUR_432.items()}, f"{len(got)} terms"


def check_jack_golden() -> tuple:
    clear_caches()
    bad = [xi for xi, want in JACK_432.items()
           if monomial_to_jackJ([4, 3, 2], xi, max_length=3).terms != want]
    return not bad, f"mismatch at xi={bad}" if bad else "xi=1/2, 2"


def check_closed_forms() -> tuple:
    bad = [(a, b) for b in (1, 2, 4) for a in (F(1), F(2), F(7, 2), F(10))
           if moment([4, 3, 2], a, b, 3) != reference_432(a, b)]
    return not bad, f"mismatch at {bad}" if bad else "12 points"


def _route_cases(max_weight: int, max_n: int, alphas) -> list:
    return [(lam, n, a) for lam in partitions_up_to(max_weight)
            for n in range(max(length(lam), 1), max_n + 1) for a in alphas]


def check_route_equivalence(max_weight: int = 6, max_n: int = 6) -> tuple:
    cases = _route_cases(max_weight, max_n, (F(1), F(3, 2), F(4)))
    for lam, n, a in cases:
        ref = moment(lam, a, 2, n, SCHUR_KADELL)
        for route in (HYPERDET_CAUCHY, HYPERDET_HEINE, JACK_KADELL):
            if moment(lam, a, 2, n, route) != ref:
                return False, f"{route} differs at lam={list(lam)} N={n} alpha={a}"
    return True, f"{len(cases)} cases"


def check_oracle(max_n: int = 3, max_weight: int = 4) -> tuple:
    count = 0
    for lam in partitions_up_to(max_weight):
        for n in range(max(length(lam), 1), max_n + 1):
            for beta in (1, 2, 4):
                for a in (1, 2, 3):
                    if moment(lam, a, beta, n) != integrate_simplex_exact(lam, a, beta, n):
                        return False, f"lam={list(lam)} N={n} beta={beta} alpha={a}"
                    count += 1
    return True, f"{count} cases"


def check_identities(max_n: int = 8, cauchy_cases: int = 120) -> tuple:
    for n in range(1, max_n + 1):
        for a in (F(1), F(5, 2)):
            if not selberg_identity_check(n, a):
                return False, f"determinant-average identity fails at n={n} alpha={a}"
    rng = random.Random(1729)
    done = 0
    while done < cauchy_cases:
        n = rng.randint(1, 5)
        xs = [F(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(n)]
        ys = [F(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(n)]
        if any(x + y == 0 for x in xs for y in ys):
            continue
        if det_exact([[1 / (x + y) for y in ys] for x in xs]) != cauchy_double_alternant(xs, ys):
            return False, f"Cauchy determinant fails at X={xs} Y={ys}"
        done += 1
    return True, f"n<={max_n}, {done} Cauchy cases"


def _random_tensor(rng: random.Random, n: int) -> list:
    return [[[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)] for _ in range(n)]


def check_hyperdet(cases: int = 210) -> tuple:
    rng = random.Random(31337)
    for k in range(cases):
        t = _random_tensor(rng, 1 + k % 3)
        if det_plus_expand(t) != hyperdet_brute(t, {2, 3}):
            return False, f"Det_+ mismatch on {t}"
    for n in (2, 3):
        for _ in range(10):
            if hyperdet_brute(_random_tensor(rng, n), {1, 2, 3}) != 0:
                return False, "fully alternated order-3 hyperdeterminant is nonzero"
    return True, f"{cases} tensors"


def check_asymptotic_identity() -> tuple:
    for k in range(1, 11):
        for ell in range(1, 7):
            if limit_novaes(k, ell) != limit_single(k, Regime(1, ell)):
                return False, f"k={k} ell={ell}"
    for k in range(1, 13):
        if limit_single(k, Regime(0)) != limit_single(k, Regime(1, 1)):
            return False, f"p<1 vs ell=1 at k={k}"
    return True, "k<=10, ell<=6; k<=12"


def check_caption_limits() -> tuple:
    below = limit_partition([4, 3, 2], Regime(0))
    linear = limit_partition([4, 3, 2], Regime(1, 4))
    ok = below == LIMIT_BELOW_432 and linear == LIMIT_LINEAR_432
    return ok, f"{below}, {linear}"


def _deviations(r: Regime, ns, target: Fraction) -> list:
    return [abs(moment([4, 3, 2], alpha_rule(n, 2, r), 2, n) - target) / target for n in ns]


def check_convergence() -> tuple:
    lin = _deviations(Regime(1, 4), (50, 200, 1000, 2000), LIMIT_LINEAR_432)
    low = _deviations(Regime(0), (25, 50, 100, 200), LIMIT_BELOW_432)
    dec = all(x > y for x, y in zip(lin, lin[1:])) and all(x > y for x, y in zip(low, low[1:]))
    ok = dec and lin[-1] < F(1, 100)
    return ok, f"rel. dev. at N=2000: {float(lin[-1]):.3e}"


def check_performance() -> tuple:
    clear_caches()
    alphas = [F(k, 3) for k in range(1, 31)]
    vals = [moment([4, 3, 2], a, 2, 20) for a in alphas]
    return all(v > 0 for v in vals), "30 alpha values at N=20"


MC_SEED = 20240611


def check_monte_carlo(samples: int = 10**6) -> tuple:
    target = float(F(13, 3465))
    est, se = mc_estimate([4, 3, 2], 1, 1, 3, samples, MC_SEED)
    again = mc_estimate([4, 3, 2], 1, 1, 3, samples, MC_SEED)
    z = abs(est - target) / se
    return z < 4 and again == (est, se), f"estimate {est:.6g} +- {se:.2g} (z={z:.2f})"


def check_hypergeometric() -> tuple:
    for k in range(1, 5):
        for n in range(1, 6):
            for a in (F(1), F(2), F(5, 2)):
                if finite_N_single(k, a, n) != moment([k], a, 2, n):
                    return False, f"k={k} N={n} alpha={a}"
    return True, "k<=4, N<=5"


# ------------------------------------------------------------ reports

def report_kadell_indexing() -> tuple:
    rows = []
    for beta in (1, 4):
        for n in (2, 3):
            std = kadell_empty_over_selberg(2, beta, n, "standard")
            plus_one = kadell_empty_over_selberg(2, beta, n, "plus_one")
            rows.append(f"beta={beta},N={n}: {std} vs {plus_one}")
    return True, "normalization ratio standard vs plus-one indexing: " + "; ".join(rows)


def report_jack_at_ones() -> tuple:
    rows = []
    for lam, xi, n in (((2,), F(1, 2), 2), ((2, 1), F(2), 3), ((3, 1), F(1, 2), 3)):
        direct = jack_J_at_ones(lam, xi, n)
        rows.append(f"{list(lam)} xi={xi} N={n}: expansion {direct}, "
                    f"multiplicative {_safe(jack_J_at_ones_multiplicative, lam, xi, n)}, "
                    f"shifted {_safe(jack_J_at_ones_shifted, lam, xi, n)}")
    return True, "J(1^N): " + "; ".join(rows)


def _safe(fn, *args) -> str:
    try:
        return str(fn(*args))
    except PermastatError:
        return "irrational"


# ------------------------------------------------------------ suites

def quick_suite() -> list[CheckResult]:
    return [
        run_check("schur-golden", 1, check_schur_golden),
        run_check("jack-golden", 5, check_jack_golden),
        run_check("closed-forms", 1, check_closed_forms),
        run_check("route-equivalence(|lam|<=4,N<=4)", 60,
                  lambda: check_route_equivalence(4, 4)),
        run_check("oracle(N<=2)", 30, lambda: check_oracle(2, 4)),
        run_check("identities(n<=5)", 30, lambda: check_identities(5, 40)),
        run_check("hyperdet(50)", 30, lambda: check_hyperdet(50)),
        run_check("asymptotic-identity", 1, check_asymptotic_identity),
        run_check("limit-values", 1, check_caption_limits),
        run_check("kadell-indexing", 0, report_kadell_indexing, report=True),
        run_check("jack-at-ones", 0, report_jack_at_ones, report=True),
    ]


def full_suite() -> list[CheckResult]:
    return [
        run_check("1 schur-golden", 1, check_schur_golden),
        run_check("2 jack-golden", 5, check_jack_golden),
        run_check("3 closed-forms", 1, check_closed_forms),
        run_check("4 route-equivalence", 300, check_route_equivalence),
        run_check("5 oracle", 300, check_oracle),
        run_check("6 identities", 30, check_identities),
        run_check("7 hyperdet", 60, check_hyperdet),
        run_check("8 asymptotic-identity", 1, check_asymptotic_identity),
        run_check("9 limit-values", 1, check_caption_limits),
        run_check("10 convergence", 120, check_convergence),
        run_check("11 performance", 5, check_performance),
        run_check("12 monte-carlo", 120, check_monte_carlo),
        run_check("13 hypergeometric", 10, check_hypergeometric),
        run_check("kadell-indexing", 0, report_kadell_indexing, report=True),
        run_check("jack-at-ones", 0, report_jack_at_ones, report=True),
    ]


SUITES = {"quick": quick_suite, "full": full_suite}
