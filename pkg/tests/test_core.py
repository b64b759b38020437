import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp, mpf, power

from trunczeta import EULER_GAMMA, ZipfParams, exact_partial_sum, harmonic_approx, power_sum
from trunczeta.core import MAX_N, compensated_cumsum
from trunczeta.errors import InvalidParams, RankOutOfRange

from conftest import mp_partial_sum, ulps

# 50-digit mpmath sums
H_10 = 2.9289682539682539682539682539682539682539682539683
H_100 = 5.1873775176396202608051176756582531579089721267084
H_10000 = 9.7876060360443822641784779048516053348592629455777
S_1000_HALF = 61.801008765243232337873496499026016503453993502941

alphas = st.floats(0.0, 4.0, allow_nan=False)
ns = st.integers(1, 3000)


@pytest.mark.parametrize("n, alpha, expected", [
    (1, 2.0, 1.0),
    (100, 0.0, 100.0),
    (100, 1.0, H_100),
    (1000, 0.5, S_1000_HALF),
    (10000, 1.0, H_10000),
])
def test_exact_partial_sum_examples(n, alpha, expected):
    assert ulps(exact_partial_sum(ZipfParams(alpha, n)), expected) <= 1


@given(n=st.integers(1, 400), alpha=alphas)
def test_exact_partial_sum_matches_extended_precision(n, alpha):
    assert ulps(exact_partial_sum(ZipfParams(alpha, n)), mp_partial_sum(n, alpha)) <= 1


def test_chunk_boundaries():
    # spans two internal chunks; compare against Python-level fsum
    n = (1 << 20) + 7
    for alpha in (0.3, 1.0, 1.7):
        ref = math.fsum(i ** -alpha for i in range(1, n + 1))
        assert ulps(power_sum(n, alpha), ref) <= 2


@given(ns)
def test_sum_at_alpha_zero_is_n(n):
    assert exact_partial_sum(ZipfParams(0.0, n)) == n


@given(alphas)
def test_sum_of_single_term(alpha):
    assert exact_partial_sum(ZipfParams(alpha, 1)) == 1.0


@given(n=st.integers(1, 2000), alpha=alphas)
def test_incremental_consistency(n, alpha):
    s_n = exact_partial_sum(ZipfParams(alpha, n))
    s_n1 = exact_partial_sum(ZipfParams(alpha, n + 1))
    assert ulps(s_n1, s_n + (n + 1) ** -alpha) <= 1


@given(n=st.integers(2, 2000), a=alphas, b=alphas)
def test_strictly_decreasing_in_alpha(n, a, b):
    if a == b:
        return
    lo, hi = min(a, b), max(a, b)
    if hi - lo < 1e-9:
        return
    assert exact_partial_sum(ZipfParams(hi, n)) < exact_partial_sum(ZipfParams(lo, n))


@given(n=st.integers(1, 2000), alpha=alphas)
def test_sum_at_least_one_and_monotone_in_n(n, alpha):
    s = exact_partial_sum(ZipfParams(alpha, n))
    assert s >= 1.0
    assert exact_partial_sum(ZipfParams(alpha, n + 1)) >= s


def test_power_sum_negative_exponent():
    # sum of i over 1..100
    assert power_sum(100, -1.0) == 5050.0
    assert power_sum(0, 1.0) == 0.0


def test_euler_gamma_digits():
    with mp.workdps(30):
        assert abs(mpf(EULER_GAMMA) - mp.euler) < 1e-16


@pytest.mark.parametrize("n, expected", [
    (1, EULER_GAMMA + 0.5),
    (100, 5.1873858508896242286424949994511308462443623131975),
])
def test_harmonic_approx_values(n, expected):
    assert harmonic_approx(n) == pytest.approx(expected, rel=1e-15)


def test_harmonic_approx_close_to_harmonic_numbers():
    assert abs(harmonic_approx(100) - H_100) < 1e-5
    assert abs(harmonic_approx(10000) - H_10000) / H_10000 < 1e-9


def test_harmonic_approx_relative_error_threshold():
    # excess is about 1/(12 n^2), so 1e-4 relative is first met at n = 16
    rel = lambda n: abs(harmonic_approx(n) - exact_partial_sum(ZipfParams(1.0, n))) / exact_partial_sum(ZipfParams(1.0, n))
    assert rel(15) > 1e-4
    assert all(rel(n) < 1e-4 for n in range(16, 3000))
    assert rel(10) == pytest.approx((harmonic_approx(10) - H_10) / H_10, rel=1e-6)


@pytest.mark.parametrize("bad", [0, -3, True, 2.0, "5"])
def test_harmonic_approx_rejects(bad):
    with pytest.raises(InvalidParams):
        harmonic_approx(bad)


@pytest.mark.parametrize("alpha, n", [
    (-0.1, 10), (float("nan"), 10), (float("inf"), 10), (1.0, 0), (1.0, MAX_N + 1),
    (1.0, 2.5), ("1", 10), (True, 10), (1.0, True),
])
def test_params_validation(alpha, n):
    with pytest.raises(InvalidParams):
        ZipfParams(alpha, n)


def test_params_normalizes_types():
    p = ZipfParams(np.float32(0.5), np.int64(7))
    assert type(p.alpha) is float and type(p.n) is int
    assert ZipfParams(1, 5).alpha == 1.0


def test_check_rank():
    p = ZipfParams(1.0, 10)
    assert p.check_rank(np.int32(10)) == 10
    for r in (0, 11, 1.0, True):
        with pytest.raises(RankOutOfRange):
            p.check_rank(r)


@given(st.lists(st.floats(1e-12, 1e3), min_size=1, max_size=300))
def test_compensated_cumsum_matches_fsum_prefixes(terms):
    got = compensated_cumsum(np.array(terms))
    for i in range(len(terms)):
        assert ulps(got[i], math.fsum(terms[: i + 1])) <= 1


def test_compensated_cumsum_beats_naive():
    terms = np.power(np.arange(1, 200001, dtype=float), -0.5)
    with mp.workdps(30):
        ref = float(sum(power(mpf(i), -0.5) for i in range(1, 200001)))
    assert ulps(compensated_cumsum(terms)[-1], ref) <= 1
    assert ulps(np.cumsum(terms)[-1], ref) > 1
