"""Ptolemy diagrams on a convex polygon: enumeration, exact counting and cyclic sieving checks."""

from ptolemy.core import (
    Diagonal,
    Diagram,
    Region,
    RegionError,
    RegionStats,
    canonical_encoding,
    crosses,
    is_ptolemy,
    nc,
    perp,
    regions,
    rotate,
    skeleton,
    stats,
)
from ptolemy.count import (
    binom_ext,
    count_invariant,
    count_invariant_by_power,
    count_orbits,
    count_perp_invariant,
    count_ptolemy,
    euler_phi,
    multinom_ext,
)

__all__ = [
    "Diagonal",
    "Diagram",
    "Region",
    "RegionError",
    "RegionStats",
    "binom_ext",
    "canonical_encoding",
    "count_invariant",
    "count_invariant_by_power",
    "count_orbits",
    "count_perp_invariant",
    "count_ptolemy",
    "crosses",
    "euler_phi",
    "is_ptolemy",
    "multinom_ext",
    "nc",
    "perp",
    "regions",
    "rotate",
    "skeleton",
    "stats",
]
