import cmath
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from beatty_kloosterman import (
    DuplicateResidue,
    SizeLimit,
    YDivisible,
    beatty_kloosterman,
    completion_gap,
    correlation_average,
    correlation_sum,
    count_Xu,
    fourth_moment_sigma,
    incomplete_kloosterman,
    kloosterman,
    parse_real,
    weil_bound,
    xu_total,
)
from beatty_kloosterman.expsums import kloosterman_original_bound, xu_counts

PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101]
TINY = [3, 5, 7, 11, 13]


def test_kloosterman_examples():
    assert complex(kloosterman(11, 0, 0)) == pytest.approx(10)
    v = kloosterman(5, 1, 1)
    assert v.re == pytest.approx((3 - math.sqrt(5)) / 2, abs=1e-12)
    v = kloosterman(7, 1, 1)
    assert v.re == pytest.approx(4 * math.cos(2 * math.pi / 7) + 2 * math.cos(4 * math.pi / 7), abs=1e-12)


@given(st.sampled_from(PRIMES), st.integers(-500, 500), st.integers(-500, 500))
def test_kloosterman_matches_direct_loop(p, x, y):
    v = kloosterman(p, x, y)
    assert abs(complex(v) - oracles.kloosterman(p, x, y)) < 1e-11
    assert abs(v.im) <= v.err  # m <-> p - m pairing
    assert abs(complex(v) - complex(kloosterman(p, y, x))) <= 2 * v.err + 1e-15


def test_incomplete_examples():
    assert complex(incomplete_kloosterman(7, 0, 3, 4)) == 0
    assert complex(incomplete_kloosterman(13, 12, 3, 4)) == pytest.approx(complex(kloosterman(13, 3, 4)))
    v = complex(incomplete_kloosterman(7, 2, 0, 1))
    assert v == pytest.approx(complex(-0.27748, 0.34795), abs=1e-5)
    assert v == pytest.approx(oracles.ep(1, 7) + oracles.ep(4, 7), abs=1e-14)


def test_beatty_kloosterman_examples():
    r2 = parse_real("sqrt:2")
    assert complex(beatty_kloosterman(7, r2, 0, 0, 0, 1)) == 0
    v3 = complex(beatty_kloosterman(7, r2, 0, 3, 0, 1))
    assert v3 == pytest.approx((-1 + 1j * math.sqrt(7)) / 2, abs=1e-14)
    # n = 4 adds floor = 5; n = 5 gives floor = 7, a multiple of p, and is skipped
    v5 = complex(beatty_kloosterman(7, r2, 0, 5, 0, 1))
    assert v5 == pytest.approx(v3 + oracles.ep(oracles.inv(5, 7), 7), abs=1e-14)


@settings(max_examples=40)
@given(st.sampled_from([11, 101, 211, 1009]), st.sampled_from(["sqrt:2", "pi", "golden", "e"]),
       st.sampled_from(["0", "e", "0.5"]), st.integers(0, 500), st.integers(1, 10**6))
def test_beatty_kloosterman_matches_loop(p, alpha, beta, x, y):
    if y % p == 0:
        return
    N = p
    floors = [oracles.floor_oracle(alpha, beta, n) for n in range(1, N + 1)]
    want = sum(oracles.ep(x * f + y * oracles.inv(f % p, p), p) for f in floors if f % p)
    got = beatty_kloosterman(p, parse_real(alpha), parse_real(beta), N, x, y)
    assert abs(complex(got) - want) < 1e-9


def test_beatty_kloosterman_preconditions():
    r2 = parse_real("sqrt:2")
    with pytest.raises(YDivisible):
        beatty_kloosterman(7, r2, 0, 3, 1, 14)
    with pytest.raises(ValueError):
        beatty_kloosterman(7, r2, 0, 8, 1, 1)


def test_correlation_examples():
    assert complex(correlation_sum(5, 1, 4, 0)) == pytest.approx(4)
    assert complex(correlation_sum(5, 1, 1, 0)) == pytest.approx(-1)
    assert complex(correlation_sum(5, 1, 1, 1)) == pytest.approx(1 + 2 * math.cos(2 * math.pi / 5))


@given(st.sampled_from(PRIMES[:12]), st.integers(0, 100), st.integers(0, 100), st.integers(0, 100))
def test_correlation_matches_loop(p, x, y, w):
    assert abs(complex(correlation_sum(p, x, y, w)) - oracles.correlation(p, x, y, w)) < 1e-11


@given(st.sampled_from(PRIMES), st.integers(0, 10**4), st.integers(0, 10**4), st.integers(1, 10**4))
def test_kloosterman_transformation(p, x, y, a):
    if a % p == 0:
        return
    lhs, rhs = kloosterman(p, x, y), kloosterman(p, a * x, oracles.inv(a % p, p) * y)
    assert abs(complex(lhs) - complex(rhs)) <= 2 * max(lhs.err, rhs.err)


@given(st.sampled_from(PRIMES), st.integers(0, 10**4), st.integers(0, 10**4), st.integers(0, 10**4),
       st.integers(1, 10**4))
def test_correlation_transformation(p, x, y, w, a):
    if a % p == 0:
        return
    lhs, rhs = correlation_sum(p, x, y, w), correlation_sum(p, a * x, a * y, a * w)
    assert abs(complex(lhs) - complex(rhs)) <= 2 * max(lhs.err, rhs.err)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_weil_bound_exhaustive_small(p):
    for x in range(p):
        for y in range(p):
            assert abs(kloosterman(p, x, y)) <= weil_bound(p, x, y) + 1e-9


def test_weil_bound_random_large():
    rng = random.Random(3)
    for p in (10007, 65537, 99991):
        for _ in range(5):
            x, y = rng.randrange(1, p), rng.randrange(1, p)
            assert abs(kloosterman(p, x, y)) <= weil_bound(p, x, y) + 1e-6


def test_kloosterman_original_bound_ratio():
    ratios = [abs(kloosterman(p, x, y)) / kloosterman_original_bound(p, x, y)
              for p in (31, 37, 41) for x in range(p) for y in range(p)]
    assert max(ratios) <= 2.0


@pytest.mark.parametrize("p", [11, 31, 101])
def test_completion_bound(p):
    for M in (1, p // 3, p // 2, p - 1):
        for y in (1, 2, p - 1):
            lhs, rhs = completion_gap(p, M, y)
            assert lhs < rhs


@pytest.mark.parametrize("p, u, expected", [(3, 1, 1), (3, 2, 1), (3, 3, 6)])
def test_count_xu_examples(p, u, expected):
    assert count_Xu(p, u).count == expected
    assert count_Xu(p, u, mode="structured").count == expected


@pytest.mark.parametrize("p", [3, 5, 7])
def test_count_xu_matches_definition_loop(p):
    assert xu_counts(p, "exhaustive") == [oracles.xu_count(p, u) for u in range(1, p + 1)]


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17])
def test_structured_matches_exhaustive(p):
    assert xu_counts(p, "structured") == xu_counts(p, "exhaustive")


def test_xu_totals():
    t = xu_total(3)
    assert (t.total, t.count_bound, t.total_below_p) == (8, 102, 2)
    assert t.within_bound
    assert xu_total(5).total <= 570
    assert xu_total(7).total <= 1694
    assert all(xu_total(p, "structured").within_bound for p in (101, 211))


def test_xu_size_limits():
    with pytest.raises(SizeLimit):
        xu_counts(37, "exhaustive")
    with pytest.raises(SizeLimit):
        xu_counts(223, "structured")


def test_fourth_moment_examples():
    assert fourth_moment_sigma(3) == pytest.approx(18, abs=1e-12)
    for p in (5, 7):
        expect = p * p * xu_total(p).total_below_p
        assert abs(fourth_moment_sigma(p) - expect) / expect < 1e-9


def test_correlation_average_examples():
    empty = correlation_average(7, 1, 1, [])
    assert (empty.sum_abs, empty.fourth_sum) == (0, 0)
    avg = correlation_average(3, 1, 1, [1, 2])
    assert avg.sum_abs == pytest.approx(2) and avg.fourth_sum == pytest.approx(2)


def test_correlation_average_preconditions():
    with pytest.raises(DuplicateResidue):
        correlation_average(7, 1, 1, [1, 8])
    with pytest.raises(YDivisible):
        correlation_average(7, 1, 7, [1])


@settings(max_examples=100)
@given(st.sampled_from(TINY), st.integers(0, 12), st.integers(1, 12), st.data())
def test_holder_and_averaging(p, x, y, data):
    if y % p == 0:
        return
    # the averaging step counts copies of |S(x,y,w)|^4 at u = a*w, so it needs p not dividing w
    W = data.draw(st.sets(st.integers(1, p - 1), max_size=p - 1))
    avg = correlation_average(p, x, y, W)
    assert avg.sum_abs <= avg.holder_rhs + 1e-6
    assert (p - 1) * avg.fourth_sum <= fourth_moment_sigma(p) + 1e-6


def test_averaging_fails_for_zero_shift():
    avg = correlation_average(3, 2, 1, [0])
    assert (3 - 1) * avg.fourth_sum > fourth_moment_sigma(3)
