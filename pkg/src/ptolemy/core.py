"""Value model for Ptolemy diagrams.

Vertices of the polygon are labelled ``0..N`` counterclockwise and the
distinguished base edge is the boundary edge ``{N, 0}``.  A diagram is stored
as a bit set over the proper diagonals of its polygon; the bit order is the
lexicographic order of the sorted endpoint pairs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

MAX_VERTICES = 64

TRIANGLE = "triangle"
CLIQUE = "clique"
EMPTY_CELL = "empty_cell"


def is_proper(n: int, a: int, b: int) -> bool:
    """True when ``{a, b}`` is a diagonal (not a side) of the ``n``-gon."""
    if a > b:
        a, b = b, a
    return 0 <= a and b < n and b - a >= 2 and not (a == 0 and b == n - 1)


class _Geometry(NamedTuple):
    n: int
    pairs: tuple[tuple[int, int], ...]
    index: dict[tuple[int, int], int]
    cross: tuple[int, ...]  # cross[i]: mask of diagonals crossing diagonal i
    full: int


@lru_cache(maxsize=None)
def geometry(n: int) -> _Geometry:
    if not 2 <= n <= MAX_VERTICES:
        raise ValueError(f"polygon size must be in 2..{MAX_VERTICES}, got {n}")
    pairs = tuple((a, b) for a in range(n) for b in range(a + 2, n) if is_proper(n, a, b))
    index = {p: i for i, p in enumerate(pairs)}
    cross = []
    for a, b in pairs:
        m = 0
        for j, (c, d) in enumerate(pairs):
            if a < c < b < d or c < a < d < b:
                m |= 1 << j
        cross.append(m)
    return _Geometry(n, pairs, index, tuple(cross), (1 << len(pairs)) - 1)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, order=True)
class Diagonal:
    """A proper diagonal of the ``n``-gon, endpoints stored as ``a < b``."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        if a > b:
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)
        if a == b:
            raise ValueError(f"diagonal endpoints must differ: {a}")
        if not is_proper(self.n, self.a, self.b):
            raise ValueError(f"{{{self.a},{self.b}}} is not a proper diagonal of the {self.n}-gon")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)


def crosses(d1: Diagonal, d2: Diagonal) -> bool:
    """Strict interleaving of endpoints; diagonals sharing an endpoint never cross."""
    if d1.n != d2.n:
        raise ValueError(f"diagonals live on different polygons ({d1.n} vs {d2.n})")
    a, b = d1.pair
    c, d = d2.pair
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class Diagram:
    """A set of proper diagonals of the ``n``-gon (``n = N + 1``)."""

    n: int
    mask: int = 0

    def __post_init__(self):
        g = geometry(self.n)
        if self.mask < 0 or self.mask & ~g.full:
            raise ValueError(f"mask {self.mask:#x} has bits outside the {self.n}-gon")

    @classmethod
    def from_diagonals(cls, n: int, diagonals: Iterable) -> Diagram:
        g = geometry(n)
        mask = 0
        for d in diagonals:
            if isinstance(d, Diagonal):
                if d.n != n:
                    raise ValueError(f"diagonal of the {d.n}-gon given for the {n}-gon")
                a, b = d.pair
            else:
                a, b = sorted(d)
            if a == b:
                raise ValueError(f"diagonal endpoints must differ: {a}")
            if not is_proper(n, a, b):
                raise ValueError(f"{{{a},{b}}} is not a proper diagonal of the {n}-gon")
            bit = 1 << g.index[(a, b)]
            if mask & bit:
                raise ValueError(f"duplicate diagonal {{{a},{b}}}")
            mask |= bit
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> Diagram:
        return cls(n, geometry(n).full)

    @property
    def N(self) -> int:
        return self.n - 1

    @property
    def diagonals(self) -> tuple[tuple[int, int], ...]:
        pairs = geometry(self.n).pairs
        return tuple(pairs[i] for i in _bits(self.mask))

    def __iter__(self):
        return iter(self.diagonals)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, pair) -> bool:
        a, b = sorted(pair)
        i = geometry(self.n).index.get((a, b))
        return i is not None and bool(self.mask >> i & 1)

    def issubset(self, other: Diagram) -> bool:
        return self.n == other.n and self.mask & ~other.mask == 0

    def __str__(self):
        return canonical_encoding(self).decode()

    def __repr__(self):
        return f"Diagram({str(self)!r})"

    def to_json(self) -> dict:
        return {"n": self.n, "diagonals": [list(p) for p in self.diagonals]}

    @classmethod
    def from_json(cls, obj) -> Diagram:
        if isinstance(obj, (str, bytes)):
            obj = json.loads(obj)
        return cls.from_diagonals(int(obj["n"]), [tuple(p) for p in obj["diagonals"]])


def canonical_encoding(A: Diagram) -> bytes:
    body = ",".join(f"{a}-{b}" for a, b in A.diagonals)
    return f"{A.n}:{body}".encode()


def parse_diagram(text: str | bytes) -> Diagram:
    """Inverse of :func:`canonical_encoding`; pair order in the input is not enforced."""
    if isinstance(text, bytes):
        text = text.decode()
    head, sep, body = text.strip().partition(":")
    if not sep:
        raise ValueError(f"missing ':' in diagram text {text!r}")
    pairs = []
    for item in filter(None, body.split(",")):
        a, dash, b = item.partition("-")
        if not dash:
            raise ValueError(f"bad diagonal {item!r}")
        pairs.append((int(a), int(b)))
    return Diagram.from_diagonals(int(head), pairs)


def nc(A: Diagram) -> Diagram:
    """All diagonals of the polygon that cross no diagonal of ``A``."""
    g = geometry(A.n)
    mask = 0
    for i, c in enumerate(g.cross):
        if not c & A.mask:
            mask |= 1 << i
    return Diagram(A.n, mask)


def is_ptolemy(A: Diagram) -> bool:
    return nc(nc(A)) == A


def skeleton(A: Diagram) -> Diagram:
    """Diagonals of ``A`` crossed by no other diagonal of ``A``."""
    cross = geometry(A.n).cross
    mask = 0
    for i in _bits(A.mask):
        if not cross[i] & A.mask:
            mask |= 1 << i
    return Diagram(A.n, mask)


class RegionError(ValueError):
    """The diagonal set does not decompose into triangles, cliques and empty cells."""


@dataclass(frozen=True)
class Region:
    vertices: tuple[int, ...]
    kind: str

    def __post_init__(self):
        size = len(self.vertices)
        if size < 3:
            raise ValueError("a region has at least three vertices")
        if (self.kind == TRIANGLE) != (size == 3) or self.kind not in (TRIANGLE, CLIQUE, EMPTY_CELL):
            raise ValueError(f"kind {self.kind!r} does not fit a region with {size} vertices")


class RegionStats(NamedTuple):
    N: int
    k: int
    l: int
    m: int


def faces(n: int, chords: Iterable[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Faces of a non-crossing dissection, each as an ascending vertex tuple."""
    out = [tuple(range(n))]
    for a, b in chords:
        for i, f in enumerate(out):
            if a in f and b in f:
                ia, ib = f.index(a), f.index(b)
                if ib - ia >= 2 and not (ia == 0 and ib == len(f) - 1):
                    out[i] = f[ia:ib + 1]
                    out.append(f[:ia + 1] + f[ib:])
                    break
        else:
            raise ValueError(f"chord {(a, b)} is not inside any face")
    return out


def face_diagonals(face: tuple[int, ...]) -> list[tuple[int, int]]:
    s = len(face)
    return [(face[i], face[j]) for i in range(s) for j in range(i + 2, s) if not (i == 0 and j == s - 1)]


def regions(A: Diagram) -> list[Region]:
    """Faces of the skeleton dissection, classified as triangle / clique / empty cell.

    Raises :class:`RegionError` if some face of size at least four is partly
    filled, or if ``A`` has diagonals outside its skeleton and clique interiors.
    """
    if A.n == 2:
        return []
    g = geometry(A.n)
    skel = skeleton(A)
    covered = skel.mask
    out = []
    for f in faces(A.n, skel.diagonals):
        if len(f) == 3:
            out.append(Region(f, TRIANGLE))
            continue
        inner = 0
        for p in face_diagonals(f):
            inner |= 1 << g.index[p]
        present = A.mask & inner
        if present == inner:
            out.append(Region(f, CLIQUE))
            covered |= inner
        elif present == 0:
            out.append(Region(f, EMPTY_CELL))
        else:
            raise RegionError(f"face {f} of {A} is neither a clique nor empty")
    if covered != A.mask:
        raise RegionError(f"{A} is not its skeleton plus clique interiors")
    return out


def stats(A: Diagram) -> RegionStats:
    if A.n == 2:
        return RegionStats(1, 0, 0, 0)
    k = l = m = 0
    for r in regions(A):
        if r.kind == TRIANGLE:
            k += 1
        elif r.kind == CLIQUE:
            l += 1
        else:
            m += 1
    return RegionStats(A.N, k, l, m)


def rotate_pair(pair: tuple[int, int], steps: int, n: int) -> tuple[int, int]:
    a, b = (pair[0] + steps) % n, (pair[1] + steps) % n
    return (a, b) if a < b else (b, a)


def rotate(A: Diagram, steps: int) -> Diagram:
    """Relabel vertex ``i`` as ``i + steps`` (mod n); one step is the AR translation."""
    steps %= A.n
    if not steps or not A.mask:
        return A
    index = geometry(A.n).index
    mask = 0
    for p in A.diagonals:
        mask |= 1 << index[rotate_pair(p, steps, A.n)]
    return Diagram(A.n, mask)


def perp(A: Diagram) -> Diagram:
    """The perpendicular diagram ``rotate(nc(A), 1)``; meant for Ptolemy ``A``."""
    return rotate(nc(A), 1)
