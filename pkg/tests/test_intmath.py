"""Tests for the exact integer utilities."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubetriples.intmath import (
    Factorization,
    IncompleteFactorizationError,
    factorize,
    isqrt,
    perfect_square_root,
    signed_divisors,
)

# squares of 0..1000, an independent lookup oracle for n <= 10^6
_SQUARES = {r * r: r for r in range(1001)}


class TestIsqrt:
    @pytest.mark.parametrize("n,expected", [(0, 0), (16, 4), (24, 4), (1, 1), (2, 1)])
    def test_examples(self, n, expected):
        assert isqrt(n) == expected

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            isqrt(-1)

    def test_small_against_linear_scan(self):
        for n in range(2000):
            r = 0
            while (r + 1) * (r + 1) <= n:
                r += 1
            assert isqrt(n) == r

    @given(st.integers(min_value=0, max_value=10**30))
    def test_bracketing_property(self, n):
        r = isqrt(n)
        assert r >= 0
        assert r * r <= n < (r + 1) * (r + 1)


class TestPerfectSquareRoot:
    @pytest.mark.parametrize("n,expected", [(0, 0), (16, 4), (-4, None), (33, None)])
    def test_examples(self, n, expected):
        assert perfect_square_root(n) == expected

    def test_negative_always_absent(self):
        for n in range(-50, 0):
            assert perfect_square_root(n) is None

    @given(st.integers(min_value=-(10**6), max_value=10**6))
    def test_against_square_table(self, n):
        expected = _SQUARES.get(n) if n >= 0 else None
        assert perfect_square_root(n) == expected

    @given(st.integers(min_value=0, max_value=10**15))
    def test_root_squares_back(self, n):
        r = perfect_square_root(n)
        if r is not None:
            assert r * r == n


def _is_prime_by_trial(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class TestFactorize:
    @pytest.mark.parametrize(
        "n,expected",
        [
            (8, Factorization(1, ((2, 3),))),
            (-24, Factorization(-1, ((2, 3), (3, 1)))),
            (1, Factorization(1, ())),
            (-1, Factorization(-1, ())),
            (97, Factorization(1, ((97, 1),))),
        ],
    )
    def test_examples(self, n, expected):
        assert factorize(n) == expected

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factorize(0)

    def test_large_prime_cofactor_is_certified(self):
        p = 10**9 + 7
        fac = factorize(2 * p, trial_limit=1000)
        assert fac == Factorization(1, ((2, 1), (p, 1)))

    def test_composite_cofactor_reports_incomplete(self):
        n = (10**9 + 7) * (10**9 + 9)
        with pytest.raises(IncompleteFactorizationError) as excinfo:
            factorize(n, trial_limit=1000)
        assert excinfo.value.cofactor == n
        assert str(n) in str(excinfo.value)

    @given(st.integers(min_value=-(10**9), max_value=10**9).filter(lambda n: n != 0))
    def test_reconstruction_is_identity(self, n):
        fac = factorize(n)
        assert fac.value() == n

    @given(st.integers(min_value=2, max_value=10**6))
    def test_factors_are_prime_and_sorted(self, n):
        fac = factorize(n)
        primes = [p for p, _ in fac.factors]
        assert primes == sorted(primes)
        assert len(set(primes)) == len(primes)
        assert all(e >= 1 for _, e in fac.factors)
        assert all(_is_prime_by_trial(p) for p in primes)


def _divisors_by_scan(n: int) -> list[int]:
    m = abs(n)
    positives = [e for e in range(1, m + 1) if m % e == 0]
    return [-d for d in reversed(positives)] + positives


class TestSignedDivisors:
    @pytest.mark.parametrize(
        "n,expected",
        [
            (8, [-8, -4, -2, -1, 1, 2, 4, 8]),
            (1, [-1, 1]),
            (-6, [-6, -3, -2, -1, 1, 2, 3, 6]),
        ],
    )
    def test_examples(self, n, expected):
        assert signed_divisors(n) == expected

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            signed_divisors(0)

    @settings(max_examples=150, deadline=None)
    @given(st.integers(min_value=-(10**6), max_value=10**6).filter(lambda n: n != 0))
    def test_matches_linear_scan(self, n):
        assert signed_divisors(n) == _divisors_by_scan(n)

    @given(st.integers(min_value=-(10**9), max_value=10**9).filter(lambda n: n != 0))
    def test_count_is_twice_tau(self, n):
        tau = 1
        for _, e in factorize(n).factors:
            tau *= e + 1
        assert len(signed_divisors(n)) == 2 * tau
