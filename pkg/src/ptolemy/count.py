"""Closed-form counts of Ptolemy diagrams, exact in Python integers.

``N`` is the number of polygon vertices minus one; ``k``, ``l``, ``m`` count
triangles, cliques (size >= 4) and empty cells (size >= 4).
"""

from __future__ import annotations

from math import comb, factorial, gcd

from ptolemy.exact import exact_div


def binom_ext(a: int, b: int) -> int:
    """Binomial with ``binom(n, n) = 1`` for every integer ``n`` and 0 off the usual range."""
    if a == b:
        return 1
    if b < 0 or a < b or a < 0:
        return 0
    return comb(a, b)


def multinom_ext(parts) -> int:
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be non-negative: {parts}")
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def _check(N, k, l, m):
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if min(k, l, m) < 0:
        raise ValueError(f"negative region count in {(k, l, m)}")


def count_ptolemy(N: int, k: int, l: int, m: int) -> int:
    """Number of Ptolemy diagrams on the (N+1)-gon with the given region counts."""
    _check(N, k, l, m)
    num = multinom_ext((N - 1, k, l, m)) * binom_ext(N - 2 - k - l - m, l + m - 1)
    return exact_div(num, N, "count_ptolemy / N")


def _invariant_case(k, l, m, d) -> bool:
    if d == 2 and k % d == l % d == m % d == 0:
        return True
    if d == 3 and k % d == 1 and l % d == m % d == 0:
        return True
    return (k % d == 0 and l % d == 0 and m % d == 1) or (k % d == 0 and l % d == 1 and m % d == 0)


def count_invariant(N: int, k: int, l: int, m: int, d: int) -> int:
    """Diagrams fixed by rotation through ``2*pi/d``; ``d >= 2`` must divide ``N + 1``."""
    _check(N, k, l, m)
    if d < 2 or (N + 1) % d:
        raise ValueError(f"rotation order d={d} must be >= 2 and divide N+1={N + 1}")
    top, bottom = N - 2 - k - l - m, l + m - 1
    if top < bottom or not _invariant_case(k, l, m, d):
        return 0
    # floor division rounds toward -inf, so the triangulation case lands on binom_ext(-1, -1)
    return multinom_ext(((N + 1) // d - 1, k // d, l // d, m // d)) * binom_ext(top // d, bottom // d)


def count_invariant_by_power(N: int, k: int, l: int, m: int, b: int) -> int:
    """Diagrams fixed by ``rotate(., b)`` for any integer ``b``."""
    d = (N + 1) // gcd(N + 1, b)
    if d == 1:
        return count_ptolemy(N, k, l, m)
    return count_invariant(N, k, l, m, d)


def count_perp_invariant(N: int, k: int, l: int, m: int, b: int) -> int:
    """Diagrams ``A`` with ``perp^b(A) = A``.

    For odd ``b`` only the rotation ``rotate(., b)`` matters, so the order
    ``d`` is taken as ``(N+1) / gcd(N+1, b)``.  An odd ``d`` forces ``A`` to
    be a rotation-invariant triangulation (this includes ``d = 1``); ``d = 2``
    glues a diagram and its nc-image across a diameter; an even ``d >= 4``
    admits nothing.
    """
    _check(N, k, l, m)
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    if b % 2 == 0:
        return count_invariant_by_power(N, k, l, m, b)
    d = (N + 1) // gcd(N + 1, b)
    if d % 2:
        return count_invariant_by_power(N, k, l, m, b) if l == m == 0 else 0
    if d == 2 and k % 2 == 0 and l == m:
        e, h = l, (N + 1) // 2
        return 2**e * multinom_ext((h - 1, k // 2, e)) * binom_ext(h - 2 - k // 2 - e, e - 1)
    return 0


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    out, rest, p = n, n, 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            out -= out // p
        p += 1
    if rest > 1:
        out -= out // rest
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def count_orbits(N: int, k: int, l: int, m: int) -> int:
    """Rotation classes in the given stats class (Cauchy-Frobenius)."""
    total = 0
    for d in divisors(N + 1):
        fixed = count_ptolemy(N, k, l, m) if d == 1 else count_invariant(N, k, l, m, d)
        total += euler_phi(d) * fixed
    return exact_div(total, N + 1, "count_orbits / (N+1)")


def stats_classes(N: int) -> list[tuple[int, int, int]]:
    """All ``(k, l, m)`` with a nonzero count on the (N+1)-gon, in lexicographic order."""
    out = []
    for k in range(N):
        for l in range(N):
            for m in range(N - l):
                if k + 2 * (l + m) > N + 1:
                    break
                if count_ptolemy(N, k, l, m):
                    out.append((k, l, m))
    return out
