from collections import Counter
from math import gcd

import pytest
from hypothesis import given, strategies as st

from ptolemy.core import perp, rotate, stats
from ptolemy.count import (
    binom_ext,
    count_invariant,
    count_invariant_by_power,
    count_orbits,
    count_perp_invariant,
    count_ptolemy,
    divisors,
    euler_phi,
    multinom_ext,
    stats_classes,
)
from ptolemy.enumeration import enumerate_all, enumerate_perp_invariant
from ptolemy.qpoly import orbit_report


@pytest.mark.parametrize("a,b,expected", [(-1, -1, 1), (5, -1, 0), (8, 4, 70), (-3, -3, 1), (3, 5, 0), (-2, 1, 0), (0, 0, 1)])
def test_binom_ext(a, b, expected):
    assert binom_ext(a, b) == expected


@pytest.mark.parametrize("parts,expected", [((2, 2, 0, 0), 6), ((4, 4), 70), ((2, 0, 1), 3), ((), 1)])
def test_multinom_ext(parts, expected):
    assert multinom_ext(parts) == expected


def test_multinom_rejects_negative():
    with pytest.raises(ValueError):
        multinom_ext((2, -1))


def test_count_ptolemy_examples():
    assert count_ptolemy(1, 0, 0, 0) == 1
    assert count_ptolemy(5, 4, 0, 0) == 14
    assert count_ptolemy(3, 0, 1, 0) == 1


def test_count_ptolemy_rejects_bad_input():
    with pytest.raises(ValueError):
        count_ptolemy(0, 0, 0, 0)
    with pytest.raises(ValueError):
        count_ptolemy(3, -1, 0, 0)


def test_count_invariant_examples():
    assert count_invariant(11, 8, 1, 0, 4) == 6
    assert count_invariant(11, 4, 0, 1, 4) == 3
    assert count_invariant(5, 4, 0, 0, 2) == 6
    assert count_invariant(5, 4, 0, 0, 3) == 2
    assert count_invariant(5, 4, 0, 0, 6) == 0
    with pytest.raises(ValueError):
        count_invariant(5, 4, 0, 0, 4)


def test_count_by_power_examples():
    assert count_invariant_by_power(7, 3, 1, 0, 0) == count_ptolemy(7, 3, 1, 0)
    assert count_invariant_by_power(5, 4, 0, 0, 3) == 6
    assert count_invariant_by_power(11, 0, 0, 1, 3) == 1


def test_count_perp_examples():
    assert count_perp_invariant(5, 0, 1, 1, 3) == 6
    assert count_perp_invariant(5, 4, 0, 0, 3) == 6


def test_orbit_examples():
    assert count_orbits(5, 4, 0, 0) == 4
    assert count_orbits(1, 0, 0, 0) == 1
    assert count_orbits(3, 0, 1, 0) == 1


@pytest.mark.parametrize("n,expected", [(1, 1), (6, 2), (12, 4), (97, 96), (100, 40)])
def test_euler_phi(n, expected):
    assert euler_phi(n) == expected


def test_euler_phi_against_gcd_count():
    for n in range(1, 200):
        assert euler_phi(n) == sum(1 for j in range(1, n + 1) if gcd(j, n) == 1)


@pytest.mark.parametrize("N", range(1, 9))
def test_fixed_point_counts_against_enumeration(N, by_stats):
    n = N + 1
    for s, diagrams in by_stats(N).items():
        for b in range(0, n + 1):
            fixed = sum(1 for A in diagrams if rotate(A, b) == A)
            assert count_invariant_by_power(N, *s, b) == fixed, (N, s, b)


def perp_period(A):
    B, p = perp(A), 1
    while B != A:
        B, p = perp(B), p + 1
    return p


@pytest.mark.parametrize("N", range(1, 9))
def test_perp_counts_against_enumeration(N, by_stats):
    # perp^b(A) = A exactly when the perp-period of A divides b
    for s, diagrams in by_stats(N).items():
        periods = Counter(perp_period(A) for A in diagrams)
        for b in range(1, 2 * (N + 1) + 1):
            fixed = sum(c for p, c in periods.items() if b % p == 0)
            assert count_perp_invariant(N, *s, b) == fixed, (N, s, b)


@pytest.mark.parametrize("N,b", [(5, 3), (4, 5), (5, 1), (2, 3), (7, 4)])
def test_perp_counts_against_filter(N, b):
    tally = Counter(stats(A)[1:] for A in enumerate_perp_invariant(N, b))
    for s in stats_classes(N):
        assert count_perp_invariant(N, *s, b) == tally[s]


@pytest.mark.parametrize("N", range(1, 9))
def test_orbit_sum_identity(N, by_stats):
    for s, diagrams in by_stats(N).items():
        report = orbit_report(diagrams, N + 1)
        assert len(report.orbits) == count_orbits(N, *s)
        by_stab = Counter(o.stabilizer for o in report.orbits)
        assert sum(c * (N + 1) // d for d, c in by_stab.items()) == count_ptolemy(N, *s)


@given(st.integers(1, 40), st.integers(0, 40), st.integers(0, 20), st.integers(0, 20))
def test_vanishing_and_integrality(N, k, l, m):
    v = count_ptolemy(N, k, l, m)  # raises if the division by N is inexact
    if l + m >= 1 and N - 2 - k - l - m < l + m - 1:
        assert v == 0
    for d in divisors(N + 1)[1:]:
        assert count_invariant(N, k, l, m, d) >= 0
    assert count_orbits(N, k, l, m) >= 0


def test_stats_classes_cover_enumeration():
    for N in range(1, 9):
        total = sum(count_ptolemy(N, *s) for s in stats_classes(N))
        assert total == sum(1 for _ in enumerate_all(N))
