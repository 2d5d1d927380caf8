import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from beatty_kloosterman import (
    PreconditionError,
    contains,
    count_upto,
    enumerate_beatty,
    find_gamma,
    floor_splitting_violations,
    max_residue_class_count,
    parse_real,
    parse_shift,
    split_sets,
)
from beatty_kloosterman.irrational import as_form

SLOPES = ["sqrt:2", "golden", "pi", "e", "sqrt:11"]
SHIFTS = ["0", "e", "0.5", "sqrt:3"]


def frac(x):
    return x - math.floor(x)


@pytest.mark.parametrize("alpha, beta, N, expected", [
    ("sqrt:2", "0", 5, [1, 2, 4, 5, 7]),
    ("pi", "e", 3, [5, 9, 12]),
    ("golden", "0", 1, [1]),
])
def test_enumerate_examples(alpha, beta, N, expected):
    assert enumerate_beatty(parse_real(alpha), parse_shift(beta), N).values.tolist() == expected


@pytest.mark.parametrize("alpha", SLOPES)
@pytest.mark.parametrize("beta", SHIFTS)
def test_window_invariants(alpha, beta):
    w = enumerate_beatty(alpha, beta, 2000)
    v = w.values
    d = np.diff(v)
    a = oracles.value(alpha)
    assert np.all(d > 0)
    assert v[0] == oracles.floor_oracle(alpha, beta, 1)
    assert set(d.tolist()) <= {math.floor(a), math.ceil(a)}
    assert v.tolist() == [oracles.floor_oracle(alpha, beta, n) for n in range(1, 2001)]


@pytest.mark.parametrize("m, expected", [(3, False), (7, True), (1, True), (6, False)])
def test_contains_examples(m, expected):
    assert contains("sqrt:2", 0, m) is expected


@pytest.mark.parametrize("alpha, beta", [("sqrt:2", "0"), ("pi", "e"), ("golden", "0.5"), ("e", "sqrt:3")])
def test_contains_agrees_with_window(alpha, beta):
    a, b = parse_real(alpha), parse_shift(beta)
    members = set(enumerate_beatty(a, b, 10**4).values.tolist())
    top = 10**4
    assert all(contains(a, b, m) == (m in members) for m in range(1, top + 1))
    assert contains(a, b, oracles.floor_oracle(alpha, beta, 1))


@pytest.mark.parametrize("alpha, beta, M, expected", [
    ("sqrt:2", "0", 7, 5), ("sqrt:2", "0", 0, 0), ("pi", "e", 46, 14), ("pi", "e", 4, 0), ("pi", "e", 5, 1),
])
def test_count_upto_examples(alpha, beta, M, expected):
    assert count_upto(alpha, beta, M) == expected


@given(st.sampled_from(SLOPES), st.sampled_from(SHIFTS), st.integers(0, 10**6))
def test_count_upto_matches_oracle(alpha, beta, M):
    n = count_upto(alpha, beta, M)
    assert n == 0 or oracles.floor_oracle(alpha, beta, n) <= M
    assert oracles.floor_oracle(alpha, beta, n + 1) > M


@given(st.sampled_from(SLOPES), st.sampled_from(SHIFTS), st.integers(0, 10**5))
def test_count_upto_density(alpha, beta, M):
    a, b = float(oracles.value(alpha)), float(oracles.value(beta))
    if M >= math.ceil(a + b):
        assert count_upto(alpha, beta, M) > (M - a - b) / a


def gamma_oracle(alpha, K, delta):
    """Brute-force window search: count k <= K with {k a + g} < delta for g = -{c a}, c = 0..K."""
    a = oracles.value(alpha)
    d = oracles.Decimal(delta.numerator) / delta.denominator
    fr = [frac(k * a) for k in range(K + 1)]
    best = (-1, None)
    for c in range(K + 1):
        g = frac(-fr[c]) if c else 0
        cnt = sum(1 for k in range(1, K + 1) if frac(fr[k] + g) < d)
        if cnt > best[0]:
            best = (cnt, g)
    return best


def test_find_gamma_example():
    cert = find_gamma(parse_real("sqrt:2"), 4, Fraction(3, 10))
    assert abs(float(cert.gamma) - 0.585786) < 1e-6
    assert cert.hit_count == 2 and cert.hits == (1, 4)
    assert cert.hit_count >= cert.guaranteed == 1


@pytest.mark.parametrize("alpha", ["sqrt:2", "pi", "golden"])
def test_find_gamma_full_circle(alpha):
    cert = find_gamma(parse_real(alpha), 17, 1)
    assert float(cert.gamma) == 0 and cert.hit_count == 17


def test_find_gamma_golden():
    cert = find_gamma(parse_real("golden"), 10, Fraction(1, 5))
    cnt, g = gamma_oracle("golden", 10, Fraction(1, 5))
    assert cert.hit_count == cnt >= 1
    assert abs(float(cert.gamma) - float(g)) < 1e-12


@settings(max_examples=60)
@given(st.sampled_from(["sqrt:2", "golden", "pi", "e"]), st.integers(1, 120),
       st.fractions(min_value=Fraction(1, 100), max_value=1, max_denominator=1000))
def test_find_gamma_matches_oracle(alpha, K, delta):
    cert = find_gamma(parse_real(alpha), K, delta)
    cnt, g = gamma_oracle(alpha, K, delta)
    assert cert.hit_count == cnt == len(cert.hits)
    assert cert.hit_count >= math.ceil(Fraction(1, 2) * K * delta)
    a = oracles.value(alpha)
    gd = frac(-cert.anchor * a)
    d = oracles.Decimal(delta.numerator) / delta.denominator
    eps = oracles.Decimal("1e-100")
    for k in cert.hits:
        f = frac(k * a + gd)
        assert f < d + eps or f > 1 - eps  # k == anchor lands on 0 exactly


def test_find_gamma_rejects_rational_and_bad_delta():
    with pytest.raises(PreconditionError):
        find_gamma(parse_real("3/2"), 5, 0.5)
    with pytest.raises(PreconditionError):
        find_gamma(parse_real("pi"), 5, 0)
    with pytest.raises(PreconditionError):
        find_gamma(parse_real("pi"), 0, 0.5)


def split_oracle(alpha, beta, gamma, delta, N, K):
    a, b = oracles.value(alpha), oracles.value(beta)
    g = oracles.Decimal(str(float(gamma)))
    d = oracles.Decimal(delta.numerator) / delta.denominator
    n_set = [n for n in range(1, N + 1) if frac(n * a + b - g) < 1 - d]
    k_set = [k for k in range(1, K + 1) if frac(k * a + g) < d]
    return n_set, k_set


def test_split_sets_example():
    r2 = parse_real("sqrt:2")
    cert = find_gamma(r2, 4, Fraction(3, 10))
    s = split_sets(r2, 0, cert.gamma, Fraction(3, 10), 10, 4)
    n_set, k_set = split_oracle("sqrt:2", "0", cert.gamma, Fraction(3, 10), 10, 4)
    assert (s.n_set, s.k_set) == (n_set, k_set)
    assert s.n_complement_size == 10 - len(n_set)
    assert floor_splitting_violations(r2, 0, cert.gamma, s.n_set, s.k_set) == []


def test_split_sets_golden_zero_gamma():
    g = parse_real("golden")
    s = split_sets(g, 0, 0, Fraction(1, 2), 5, 5)
    assert (s.n_set, s.k_set) == split_oracle("golden", "0", 0, Fraction(1, 2), 5, 5)
    assert floor_splitting_violations(g, 0, 0, s.n_set, s.k_set) == []


def test_split_sets_near_full_window():
    s = split_sets(parse_real("pi"), 0, 0, Fraction(999, 1000), 50, 5)
    assert len(s.n_set) <= 1


def test_split_sets_rejects_full_window():
    with pytest.raises(PreconditionError):
        split_sets(parse_real("pi"), 0, 0, 1, 10, 10)


@settings(max_examples=40)
@given(st.sampled_from(["sqrt:2", "golden", "pi", "e"]), st.sampled_from(SHIFTS),
       st.integers(1, 60), st.integers(1, 60),
       st.fractions(min_value=Fraction(1, 50), max_value=Fraction(49, 50), max_denominator=100))
def test_floor_splitting_identity(alpha, beta, N, K, delta):
    a, b = parse_real(alpha), parse_shift(beta)
    cert = find_gamma(a, K, delta)
    s = split_sets(a, b, cert.gamma, delta, N, K)
    assert floor_splitting_violations(a, b, cert.gamma, s.n_set, s.k_set) == []


@pytest.mark.parametrize("alpha", ["sqrt:2", "golden", "pi", "e"])
@pytest.mark.parametrize("p", [101, 211, 1009])
def test_residue_class_sparsity(alpha, p):
    a = parse_real(alpha)
    N = p
    cert = find_gamma(a, 50, Fraction(1, 4))
    s = split_sets(a, 0, cert.gamma, Fraction(1, 4), N, 50)
    assert max_residue_class_count(a, 0, cert.gamma, s.n_set, p) < 1 + float(as_form(a))
