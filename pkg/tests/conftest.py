import itertools

import pytest
from hypothesis import settings

from ptolemy.enumeration import diagrams_by_stats

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


# Oracles below work on plain pair sets and never touch the bitmask code.

def naive_diagonals(n):
    return [(a, b) for a, b in itertools.combinations(range(n), 2) if b - a >= 2 and not (a == 0 and b == n - 1)]


def naive_cross(p, q):
    (a, b), (c, d) = sorted(p), sorted(q)
    return a < c < b < d or c < a < d < b


def naive_nc(n, pairs):
    return {p for p in naive_diagonals(n) if not any(naive_cross(p, q) for q in pairs)}


def naive_is_ptolemy(n, pairs):
    return naive_nc(n, naive_nc(n, set(pairs))) == set(pairs)


def naive_triangulations(n):
    """All maximal non-crossing diagonal sets, by brute force."""
    diags = naive_diagonals(n)
    out = []
    for r in range(len(diags) + 1):
        for sub in itertools.combinations(diags, r):
            if r == n - 3 and all(not naive_cross(p, q) for p, q in itertools.combinations(sub, 2)):
                out.append(frozenset(sub))
    return out


@pytest.fixture(scope="session")
def by_stats():
    """``by_stats(N)`` -> dict (k, l, m) -> diagrams, cached across the session."""
    return diagrams_by_stats


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
