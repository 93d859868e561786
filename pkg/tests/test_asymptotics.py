from fractions import Fraction as F
from math import comb

import pytest

from permastat.asymptotics import (
    ABOVE,
    BELOW,
    LINEAR,
    Regime,
    alpha_rule,
    convergence_probe,
    finite_N_single,
    is_conjectural,
    limit_novaes,
    limit_partition,
    limit_single,
)
from permastat.moments import moment


def reference_limits(ell):
    l = F(ell)
    t4 = l * (1 + 3 * l + 9 * l**3 + 9 * l**2 + 3 * l**5 + 9 * l**4 + l**6) / (1 + l) ** 7
    t3 = l * (l**4 + 2 * l**3 + 4 * l**2 + 2 * l + 1) / (1 + l) ** 5
    t2 = l * (1 + l + l**2) / (1 + l) ** 3
    return t2, t3, t4


def test_regime_parse():
    assert Regime.parse("p<1").kind == BELOW
    assert Regime.parse("p=1", 4) == Regime(1, 4)
    assert Regime.parse("p>1").kind == ABOVE
    assert Regime.parse("p=3/2").p == F(3, 2)
    assert Regime.parse("p = 1/2").kind == BELOW
    assert Regime(1).kind == LINEAR
    with pytest.raises(ValueError):
        Regime.parse("q=1")
    with pytest.raises(ValueError):
        Regime(1, F(1, 2))


def test_limit_single_examples():
    assert limit_single(2, Regime(1, 1)) == F(3, 8)
    assert limit_single(4, Regime(0)) == F(35, 128)
    assert limit_single(5, Regime(2)) == 1
    with pytest.raises(ValueError):
        limit_single(0, Regime(0))


def test_limit_novaes_examples():
    for ell in (F(1), F(2), F(7, 3)):
        assert limit_novaes(1, ell) == ell / (ell + 1)
    assert limit_novaes(2, 1) == F(3, 8)
    assert limit_novaes(3, 4) == F(1828, 3125) == limit_single(3, Regime(1, 4))


def test_novaes_matches_regime_sum():
    for k in range(1, 11):
        for ell in range(1, 7):
            assert limit_novaes(k, ell) == limit_single(k, Regime(1, ell))


def test_linear_regime_at_ell_one_is_below_regime():
    for k in range(1, 13):
        assert limit_single(k, Regime(1, 1)) == limit_single(k, Regime(0)) == F(comb(2 * k - 1, k - 1), 2 ** (2 * k - 1))


def test_linear_regime_approaches_one():
    for k in (2, 3, 5):
        vals = [limit_single(k, Regime(1, ell)) for ell in (10, 100, 1000)]
        assert vals[0] < vals[1] < vals[2] < 1
        assert 1 - vals[2] < F(k, 100)


def test_reference_single_part_limits():
    for ell in (1, 2, 4, F(5, 2)):
        t2, t3, t4 = reference_limits(ell)
        r = Regime(1, ell)
        assert (limit_single(2, r), limit_single(3, r), limit_single(4, r)) == (t2, t3, t4)


def test_limit_partition_examples():
    assert limit_partition([4, 3, 2], Regime(0)) == F(525, 16384)
    assert limit_partition([4, 3, 2], Regime(1, 4)) == F(1253598528, 6103515625)
    for k in range(1, 6):
        assert limit_partition([k], Regime(1, 3)) == limit_single(k, Regime(1, 3))
    assert is_conjectural([4, 3, 2]) and not is_conjectural([4])


def test_finite_N_single():
    for a in (F(1), F(3, 2), F(4)):
        assert finite_N_single(1, a, 1) == a / (a + 1)
    assert finite_N_single(2, 1, 2) == F(11, 30)
    assert finite_N_single(3, 2, 4) == moment([3], 2, 2, 4)
    for k in range(1, 5):
        for n in range(1, 6):
            for a in (F(1), F(2), F(5, 2)):
                assert finite_N_single(k, a, n) == moment([k], a, 2, n)


def test_finite_N_single_terminates_before_lower_zero():
    # for alpha > 0 an upper parameter always vanishes first, so the guard
    # against a zero lower parameter never fires on valid input
    for n in range(1, 7):
        for k in range(1, 7):
            for a in (F(1), F(2), F(3), F(1, 2), F(7, 3), F(9)):
                finite_N_single(k, a, n)
    for bad in ((0, 1, 2), (1, 0, 2), (1, 1, 0)):
        with pytest.raises(ValueError):
            finite_N_single(*bad)


def test_alpha_rule():
    assert alpha_rule(10, 2, Regime(1, 4)) == 31
    assert alpha_rule(7, 1, Regime(1, 3)) == 8
    assert alpha_rule(100, 2, Regime(0)) == 1
    assert alpha_rule(16, 2, Regime(F(1, 2), 2)) == 5


def test_convergence_probe():
    target = F(1253598528, 6103515625)
    rows = convergence_probe([4, 3, 2], 2, Regime(1, 4), [10, 100, 1000])
    devs = [abs(d) for _, _, d in rows]
    assert devs[0] > devs[1] > devs[2]
    assert all(v - target == d for _, v, d in rows)
    rows2 = convergence_probe([2], 2, Regime(1, 1), [5, 50])
    assert abs(rows2[1][2]) < abs(rows2[0][2])
    rows1 = convergence_probe([1], 2, Regime(1, 3), [5, 50, 500])
    assert [abs(d) for _, _, d in rows1] == sorted((abs(d) for _, _, d in rows1), reverse=True)


@pytest.mark.parametrize("beta", [1, 4])
def test_limits_do_not_depend_on_beta(beta):
    # alpha(N) carries the beta/2 factor; the single-part limits are the beta = 2 ones
    r = Regime(1, 3)
    lim = limit_single(2, r)
    devs = [abs(moment([2], alpha_rule(n, beta, r), beta, n) - lim) for n in (20, 80, 320)]
    assert devs[0] > devs[1] > devs[2]
    assert devs[2] < F(1, 100)
