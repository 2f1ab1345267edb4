"""Generators for Ptolemy diagrams.

``enumerate_all`` follows the recursive decomposition along the base edge,
``enumerate_invariant`` builds rotation-invariant diagrams around their
central region, and ``brute_force_ptolemy`` is the independent oracle that
tests every subset of diagonals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional

from ptolemy.core import (
    CLIQUE,
    EMPTY_CELL,
    TRIANGLE,
    Diagram,
    face_diagonals,
    geometry,
    is_ptolemy,
    perp,
    rotate_pair,
    stats,
)

BRUTE_FORCE_DEFAULT_LIMIT = 8
BRUTE_FORCE_HARD_CAP = 9


class BaseRegion(NamedTuple):
    """Top-level choice for the region sitting on the base edge ``{N, 0}``."""

    kind: str  # "degenerate", TRIANGLE, CLIQUE or EMPTY_CELL
    vertices: tuple[int, ...]


def base_region_choices(N: int) -> list[BaseRegion]:
    """The partition of ``enumerate_all(N)`` by base region, in generation order.

    The sub-streams ``enumerate_with_base(N, c)`` are disjoint and can be
    consumed independently.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if N == 1:
        return [BaseRegion("degenerate", (0, 1))]
    out = [BaseRegion(TRIANGLE, (0, v, N)) for v in range(1, N)]
    for kind in (CLIQUE, EMPTY_CELL):
        for s in range(4, N + 2):
            for inner in itertools.combinations(range(1, N), s - 2):
                out.append(BaseRegion(kind, (0, *inner, N)))
    return out


@lru_cache(maxsize=None)
def _local(N: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    # All diagrams on 0..N as pair tuples; reused as glue pieces.
    return tuple(A.diagonals for A in enumerate_all(N))


def _placed(n: int, offset: int, gap: int, copies: int = 1, step: int = 0) -> list[int]:
    """Masks of every diagram on a ``gap``-run glued at ``offset``, replicated ``copies`` times."""
    index = geometry(n).index
    out = []
    for pairs in _local(gap):
        mask = 0
        for j in range(copies):
            shift = offset + j * step
            for p in pairs:
                mask |= 1 << index[rotate_pair(p, shift, n)]
        out.append(mask)
    return out


def _cell_mask(n: int, cell: tuple[int, ...], kind: str) -> int:
    """Sides of ``cell`` that are diagonals of the n-gon, plus its interior for a clique."""
    index = geometry(n).index
    mask = 0
    s = len(cell)
    for i in range(s):
        a, b = sorted((cell[i], cell[(i + 1) % s]))
        if (a, b) in index:
            mask |= 1 << index[(a, b)]
    if kind == CLIQUE:
        for p in face_diagonals(tuple(sorted(cell))):
            mask |= 1 << index[p]
    return mask


def enumerate_with_base(N: int, choice: BaseRegion) -> Iterator[Diagram]:
    n = N + 1
    if choice.kind == "degenerate":
        yield Diagram(n)
        return
    v = choice.vertices
    base = _cell_mask(n, v, choice.kind)
    pieces = [_placed(n, v[i], v[i + 1] - v[i]) for i in range(len(v) - 1)]
    for combo in itertools.product(*pieces):
        mask = base
        for part in combo:
            mask |= part
        yield Diagram(n, mask)


def enumerate_all(N: int) -> Iterator[Diagram]:
    """Every Ptolemy diagram on the (N+1)-gon, once each, in a fixed order.

    Order: base region degenerate, then triangles, then cliques and empty
    cells by increasing size; the glued sub-diagrams vary last-edge fastest.
    Sub-diagrams on smaller polygons are cached; the top level is lazy.
    """
    for choice in base_region_choices(N):
        yield from enumerate_with_base(N, choice)


def _central_choices(n: int, d: int):
    step = n // d
    for t in range(1, step + 1):
        s = t * d
        if s == 2:
            kinds = ["diameter"]
        elif s == 3:
            kinds = [TRIANGLE]
        else:
            kinds = [CLIQUE, EMPTY_CELL]
        for kind in kinds:
            for first in itertools.combinations(range(step), t):
                cell = tuple(c + j * step for j in range(d) for c in first)
                yield kind, cell


def enumerate_invariant(N: int, d: int, check_injective: bool = False) -> Iterator[Diagram]:
    """Ptolemy diagrams on the (N+1)-gon fixed by rotation through ``2*pi/d``.

    Each diagram is built from its central region (a diameter when ``s = 2``)
    together with the diagrams glued onto the ``s/d`` sides of one sector,
    copied ``d`` times around the centre.  Choosing the central vertices inside
    ``0..(N+1)/d - 1`` fixes the position of the base vertex.
    """
    n = N + 1
    if d < 2 or n % d:
        raise ValueError(f"rotation order d={d} must be >= 2 and divide N+1={n}")
    step = n // d
    seen = set() if check_injective else None
    for kind, cell in _central_choices(n, d):
        t = len(cell) // d
        base = _cell_mask(n, cell, kind)
        s = len(cell)
        pieces = []
        for i in range(t):
            a, b = cell[i], cell[(i + 1) % s]
            gap = (b - a) % n
            pieces.append(_placed(n, a, gap, copies=d, step=step))
        for combo in itertools.product(*pieces):
            mask = base
            for part in combo:
                mask |= part
            A = Diagram(n, mask)
            if seen is not None:
                if mask in seen:
                    raise AssertionError(f"{A} produced twice")
                seen.add(mask)
            yield A


def brute_force_ptolemy(n_vertices: int, limit: int = BRUTE_FORCE_DEFAULT_LIMIT) -> Iterator[Diagram]:
    """Every subset of diagonals that satisfies ``A == nc(nc(A))``."""
    limit = min(limit, BRUTE_FORCE_HARD_CAP)
    if n_vertices > limit:
        raise ValueError(
            f"brute force over {n_vertices}-gon exceeds the limit of {limit} vertices"
            f" (hard cap {BRUTE_FORCE_HARD_CAP})"
        )
    g = geometry(n_vertices)
    for mask in range(g.full + 1):
        A = Diagram(n_vertices, mask)
        if is_ptolemy(A):
            yield A


def perp_power(A: Diagram, b: int) -> Diagram:
    for _ in range(b):
        A = perp(A)
    return A


def enumerate_perp_invariant(N: int, b: int) -> Iterator[Diagram]:
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    for A in enumerate_all(N):
        if perp_power(A, b) == A:
            yield A


@dataclass(frozen=True)
class EnumFilter:
    k: Optional[int] = None
    l: Optional[int] = None
    m: Optional[int] = None
    d: Optional[int] = None  # rotation order
    b: Optional[int] = None  # perpendicular power

    def validate(self, N: int) -> None:
        for name in ("k", "l", "m", "b"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"filter field {name} must be non-negative, got {v}")
        if self.d is not None and (self.d < 2 or (N + 1) % self.d):
            raise ValueError(f"rotation order d={self.d} must be >= 2 and divide N+1={N + 1}")
        if self.d is not None and self.b is not None:
            raise ValueError("rotation order and perpendicular power are mutually exclusive")

    def matches_stats(self, A: Diagram) -> bool:
        if self.k is None and self.l is None and self.m is None:
            return True
        _, k, l, m = stats(A)
        return all(want is None or want == got for want, got in ((self.k, k), (self.l, l), (self.m, m)))

    def apply(self, N: int) -> Iterator[Diagram]:
        self.validate(N)
        if self.d is not None:
            source: Iterable[Diagram] = enumerate_invariant(N, self.d)
        elif self.b:
            source = enumerate_perp_invariant(N, self.b)
        else:
            source = enumerate_all(N)
        return (A for A in source if self.matches_stats(A))


@lru_cache(maxsize=16)
def diagrams_by_stats(N: int) -> dict[tuple[int, int, int], tuple[Diagram, ...]]:
    """``enumerate_all(N)`` grouped by ``(k, l, m)``; materialises the whole stream."""
    groups: dict[tuple[int, int, int], list[Diagram]] = {}
    for A in enumerate_all(N):
        groups.setdefault(tuple(stats(A)[1:]), []).append(A)
    return {key: tuple(v) for key, v in groups.items()}
