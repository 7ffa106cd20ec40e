"""Elnitsky polygons, their rhombic tilings and forced perimeter tiles."""

from .errors import ElnitskyError
from .forced import ForcedReport, forced_tiles, tile_frequency
from .perm import Permutation, ValuePair, parse_permutation
from .tiling import PerimeterType, Tiling, tilings

__all__ = [
    "ElnitskyError",
    "ForcedReport",
    "PerimeterType",
    "Permutation",
    "Tiling",
    "ValuePair",
    "forced_tiles",
    "parse_permutation",
    "tile_frequency",
    "tilings",
]
