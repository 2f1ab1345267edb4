"""Truncated power series in ``z, x, y1, y2`` with integer coefficients.

Used as an oracle independent of the closed forms: the generating function
of Ptolemy diagrams is obtained by fixed-point iteration of its functional
equation, and the rotation-invariant generating functions are assembled from
it by pointing, list construction and exponent scaling.

``z`` marks vertices minus one, ``x`` triangles, ``y1`` cliques and ``y2``
empty cells.  Exponents are stored as ``(n, a, b, c)`` for
``z^n x^a y1^b y2^c``; truncation is by the ``z``-degree only.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterator, Mapping

Exponent = tuple[int, int, int, int]


class Series:
    __slots__ = ("D", "_terms")

    def __init__(self, D: int, terms: Mapping[Exponent, int] | None = None):
        if D < 0:
            raise ValueError(f"truncation degree must be >= 0, got {D}")
        self.D = D
        self._terms = {e: v for e, v in (terms or {}).items() if v and e[0] <= D}

    @classmethod
    def monomial(cls, D: int, n=0, a=0, b=0, c=0, coeff=1) -> Series:
        return cls(D, {(n, a, b, c): coeff})

    @classmethod
    def one(cls, D: int) -> Series:
        return cls.monomial(D)

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def __getitem__(self, e: Exponent) -> int:
        return self._terms.get(tuple(e), 0)

    def items(self) -> Iterator[tuple[Exponent, int]]:
        return iter(sorted(self._terms.items()))

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return isinstance(other, Series) and self.D == other.D and self._terms == other._terms

    def __repr__(self):
        return f"Series(D={self.D}, {len(self._terms)} terms)"

    def truncate(self, D: int) -> Series:
        return Series(D, self._terms)

    def __add__(self, other: Series) -> Series:
        D = min(self.D, other.D)
        out = defaultdict(int, self._terms)
        for e, v in other._terms.items():
            out[e] += v
        return Series(D, out)

    def __neg__(self) -> Series:
        return Series(self.D, {e: -v for e, v in self._terms.items()})

    def __sub__(self, other: Series) -> Series:
        return self + (-other)

    def _by_degree(self) -> dict[int, list[tuple[int, int, int, int]]]:
        out = defaultdict(list)
        for (n, a, b, c), v in self._terms.items():
            out[n].append((a, b, c, v))
        return out

    def __mul__(self, other: Series) -> Series:
        D = min(self.D, other.D)
        right = other._by_degree()
        out = defaultdict(int)
        for (n, a, b, c), v in self._terms.items():
            for n2 in range(D - n + 1):
                for a2, b2, c2, w in right.get(n2, ()):
                    out[(n + n2, a + a2, b + b2, c + c2)] += v * w
        return Series(D, out)

    def shift_z(self, k: int) -> Series:
        """Multiply by ``z**k``; negative ``k`` divides and requires every term to allow it."""
        if k < 0 and any(n + k < 0 for n, *_ in self._terms):
            raise AssertionError(f"cannot divide by z^{-k}: series has terms of lower z-degree")
        return Series(self.D + min(k, 0), {(n + k, a, b, c): v for (n, a, b, c), v in self._terms.items()})


def series_add(S: Series, T: Series) -> Series:
    return S + T


def series_mul(S: Series, T: Series) -> Series:
    return S * T


def series_geom_inverse(S: Series) -> Series:
    """``1 / (1 - S)`` for ``S`` without ``z``-free terms."""
    if any(n == 0 for n, *_ in S._terms):
        raise ValueError("geom_inverse needs every term of S to carry a positive power of z")
    D = S.D
    by_deg = S._by_degree()
    # R_n = sum_{j>=1} S_j R_{n-j}, graded by z-degree
    R: list[dict[tuple[int, int, int], int]] = [{(0, 0, 0): 1}]
    for n in range(1, D + 1):
        acc = defaultdict(int)
        for j in range(1, n + 1):
            for a, b, c, v in by_deg.get(j, ()):
                for (a2, b2, c2), w in R[n - j].items():
                    acc[(a + a2, b + b2, c + c2)] += v * w
        R.append({k: v for k, v in acc.items() if v})
    return Series(D, {(n, *k): v for n, layer in enumerate(R) for k, v in layer.items()})


def _variables(D: int):
    z = Series.monomial(D, n=1)
    x = Series.monomial(D, a=1)
    y = Series.monomial(D, b=1) + Series.monomial(D, c=1)
    return z, x, y


def ptolemy_rhs(P: Series) -> Series:
    """``z + x P^2 + (y1 + y2) P^3 / (1 - P)``."""
    z, x, y = _variables(P.D)
    P2 = P * P
    return z + x * P2 + y * (P2 * P) * series_geom_inverse(P)


@lru_cache(maxsize=32)
def solve_ptolemy_gf(D: int) -> Series:
    """Generating function of Ptolemy diagrams up to ``z^D`` by fixed-point iteration from ``P = z``."""
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    P = Series.monomial(D, n=1)
    for _ in range(D):
        nxt = ptolemy_rhs(P)
        if nxt == P:
            break
        P = nxt
    return P


def functional_residual(P: Series) -> Series:
    return P - ptolemy_rhs(P)


def pointed(S: Series) -> Series:
    """``z d/dz S``."""
    return Series(S.D, {e: e[0] * v for e, v in S._terms.items()})


def scale_exponents(S: Series, d: int, D: int | None = None) -> Series:
    """Substitute every variable by its ``d``-th power, truncating at ``D`` (default ``S.D``)."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    D = S.D if D is None else D
    return Series(D, {(n * d, a * d, b * d, c * d): v for (n, a, b, c), v in S._terms.items() if n * d <= D})


def invariant_gf(d: int, D: int) -> Series:
    """Generating function, up to ``z^D``, of diagrams fixed by rotation through ``2*pi/d``."""
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    top = D + 1  # one extra degree, consumed by the final division by z
    inner = solve_ptolemy_gf(max(1, -(-top // d)))
    Pbar = scale_exponents(inner, d, top)
    lead = scale_exponents(pointed(inner), d, top)
    _, x, y = _variables(top)
    lists = series_geom_inverse(Pbar)
    if d == 2:
        centre = Series.one(top) + Pbar * y * lists
    elif d == 3:
        centre = x + Pbar * y * lists
    else:
        centre = y * lists
    return (lead * centre).shift_z(-1)


def to_csv_rows(S: Series) -> list[tuple[int, int, int, int, int]]:
    return [(*e, v) for e, v in S.items()]
