"""Limit points of the pentagram map via the conserved collineation.

Coordinates may be ints or "p/q" strings (exact rational mode) or floats
(float mode). Exact results come back as strings.
"""

from pentalimit._core import (
    __version__,
    charpoly,
    collapse_point,
    detect_axis_aligned,
    is_convex,
    is_generic,
    iterate,
    la_matrix,
    la_trace,
    limit_by_iteration,
    limit_point,
    pentagram,
    pentagram_inverse,
    verify_conservation,
    verify_incidence,
    verify_small_n,
)

__all__ = [
    "__version__",
    "charpoly",
    "collapse_point",
    "detect_axis_aligned",
    "is_convex",
    "is_generic",
    "iterate",
    "la_matrix",
    "la_trace",
    "limit_by_iteration",
    "limit_point",
    "pentagram",
    "pentagram_inverse",
    "verify_conservation",
    "verify_incidence",
    "verify_small_n",
]
