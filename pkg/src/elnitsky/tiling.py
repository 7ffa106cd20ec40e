"""Rhombic tilings of Elnitsky polygons.

The polygon X(w) is embedded with integer direction vectors
``d_i = (2i - n - 1, -2)``: the left boundary walks d_1..d_n, the right
boundary walks d_{w(1)}..d_{w(n)}. A tiling is a commutation class of reduced
words; walking its canonical word sweeps strand paths from the left boundary
to the right one, and each letter lays down one rhombus.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from threading import Lock
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from ..config import settings
from .errors import ClassPermutationMismatch, LetterOutOfRange, NotFullySupported, SizeLimitExceeded
from .perm import Permutation, ValuePair, inverse, inversion_count, is_fully_supported
from .words import (
    CommutationClass,
    ReducedWord,
    canonical_form,
    clear_word_cache,
    evaluate,
    final_letters,
    initial_letters,
    reverse_class,
)

logger = logging.getLogger(__name__)

Point = Tuple[int, int]
Segment = FrozenSet[Point]


class PerimeterType(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    TOP = "top"
    BOTTOM = "bottom"


def _add(p: Tuple, q: Tuple) -> Tuple:
    return (p[0] + q[0], p[1] + q[1])


def _segment(p: Point, q: Point) -> Segment:
    return frozenset((p, q))


def direction(i: int, n: int) -> Point:
    return (2 * i - n - 1, -2)


# ---------------------------------------------------------------------------
# Polygon
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolygonEmbedding:
    """Exact integer embedding of X(w)."""

    n: int
    left_vertices: Tuple[Point, ...]
    right_vertices: Tuple[Point, ...]
    directions: Tuple[Point, ...]

    @property
    def top(self) -> Point:
        return self.left_vertices[0]

    @property
    def bottom(self) -> Point:
        return self.left_vertices[-1]

    @cached_property
    def left_segments(self) -> Tuple[Segment, ...]:
        v = self.left_vertices
        return tuple(_segment(v[j - 1], v[j]) for j in range(1, self.n + 1))

    @cached_property
    def right_segments(self) -> Tuple[Segment, ...]:
        v = self.right_vertices
        return tuple(_segment(v[j - 1], v[j]) for j in range(1, self.n + 1))

    def boundary(self) -> Tuple[Point, ...]:
        """Vertices in cyclic order: down the left side, back up the right side."""
        return self.left_vertices + tuple(reversed(self.right_vertices[1:-1]))


@lru_cache(maxsize=4096)
def embed_polygon(w: Permutation) -> PolygonEmbedding:
    if not is_fully_supported(w):
        raise NotFullySupported(f"{w} is not fully supported; its polygon pinches.")
    n = w.n
    directions = tuple(direction(i, n) for i in range(1, n + 1))
    left = [(0, 0)]
    right = [(0, 0)]
    for j in range(1, n + 1):
        left.append(_add(left[-1], directions[j - 1]))
        right.append(_add(right[-1], directions[w(j) - 1]))
    return PolygonEmbedding(n, tuple(left), tuple(right), directions)


def polygon_area2(embedding: PolygonEmbedding) -> int:
    """Twice the enclosed area (shoelace), exact."""
    points = embedding.boundary()
    total = 0
    for (x1, y1), (x2, y2) in zip(points, points[1:] + points[:1]):
        total += x1 * y2 - x2 * y1
    return abs(total)


# ---------------------------------------------------------------------------
# Tiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Tile:
    """A rhombus of a tiling. Identity is the label alone."""

    label: ValuePair
    row: int = field(compare=False)
    corner: Point = field(compare=False)
    spanned_by: Tuple[Point, Point] = field(compare=False)

    @cached_property
    def vertices(self) -> Tuple[Point, Point, Point, Point]:
        first, second = self.spanned_by
        opposite = _add(_add(self.corner, first), second)
        return (self.corner, _add(self.corner, first), opposite, _add(self.corner, second))

    @cached_property
    def edges(self) -> FrozenSet[Segment]:
        v = self.vertices
        return frozenset(_segment(v[i], v[(i + 1) % 4]) for i in range(4))


def tile_area2(tile: Tile) -> int:
    (ax, ay), (bx, by) = tile.spanned_by
    return 2 * abs(ax * by - ay * bx)


def strand_walk(
    word: Sequence[int], n: int, vector: Callable[[int], Tuple]
) -> Iterator[Tuple[int, int, int, Tuple]]:
    """Yield (row, u(row), u(row+1), corner) for every letter of ``word``.

    ``u`` is the strand permutation before the letter is applied and
    ``corner`` the sum of ``vector(u(i))`` over i < row. Any vector field
    works, so the renderer reuses the walk with equilateral directions.
    """
    u = list(range(1, n + 1))
    for row in word:
        corner: Tuple = (0, 0)
        for i in range(row - 1):
            corner = _add(corner, vector(u[i]))
        first, second = u[row - 1], u[row]
        yield row, first, second, corner
        u[row - 1], u[row] = second, first


@dataclass(frozen=True)
class Tiling:
    """One element of T(w): a commutation class with its tiles placed."""

    owner: Permutation
    commutation_class: CommutationClass
    tiles: Tuple[Tile, ...] = field(compare=False)
    embedding: PolygonEmbedding = field(compare=False, repr=False)

    @property
    def word(self) -> ReducedWord:
        return self.commutation_class.canonical

    def labels(self) -> Tuple[ValuePair, ...]:
        return tuple(tile.label for tile in self.tiles)

    def tile_for(self, label: ValuePair) -> Optional[Tile]:
        return next((tile for tile in self.tiles if tile.label == label), None)


def place_tiles(w: Permutation, cls: CommutationClass) -> Tiling:
    """Realise a commutation class of w as placed rhombi."""
    embedding = embed_polygon(w)
    word = cls.canonical
    try:
        reached = evaluate(word, w.n)
    except LetterOutOfRange as exc:
        raise ClassPermutationMismatch(str(exc)) from exc
    if reached != w or len(word) != inversion_count(w):
        raise ClassPermutationMismatch(f"Class {list(word)} is not a commutation class of {w}.")

    vectors = embedding.directions
    tiles = tuple(
        Tile(ValuePair.of(first, second), row, corner, (vectors[first - 1], vectors[second - 1]))
        for row, first, second, corner in strand_walk(word, w.n, lambda value: vectors[value - 1])
    )
    return Tiling(owner=w, commutation_class=cls, tiles=tiles, embedding=embedding)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

# Classes per sub-permutation, shared across calls; inserts are idempotent.
_class_memo: Dict[Tuple[int, ...], Tuple[ReducedWord, ...]] = {}
_memo_lock = Lock()


def clear_tiling_cache() -> None:
    with _memo_lock:
        _class_memo.clear()
    embed_polygon.cache_clear()
    clear_word_cache()


def _classes_for(entries: Tuple[int, ...], cap: int) -> Tuple[ReducedWord, ...]:
    cached = _class_memo.get(entries)
    if cached is None:
        n = len(entries)
        found: Set[ReducedWord] = set()
        descents = [k for k in range(1, n) if entries[k - 1] > entries[k]]
        if not descents:
            found.add(())
        for k in descents:
            shorter = list(entries)
            shorter[k - 1], shorter[k] = shorter[k], shorter[k - 1]
            for word in _classes_for(tuple(shorter), cap):
                found.add(canonical_form(word + (k,)))
                if len(found) > cap:
                    raise SizeLimitExceeded(f"More than {cap} tilings for {entries}.")
        with _memo_lock:
            cached = _class_memo.setdefault(entries, tuple(sorted(found)))
    if len(cached) > cap:
        raise SizeLimitExceeded(f"More than {cap} tilings for {entries}.")
    return cached


def tiling_classes(w: Permutation, max_tilings: Optional[int] = None) -> Tuple[CommutationClass, ...]:
    """Commutation classes of w, sorted by canonical word, without geometry."""
    if not is_fully_supported(w):
        raise NotFullySupported(f"{w} is not fully supported; its polygon pinches.")
    cap = max_tilings if max_tilings is not None else settings.max_tilings
    words = _classes_for(w.entries, cap)
    logger.debug("Enumerated %d tilings for %s", len(words), w)
    return tuple(CommutationClass(word) for word in words)


def count_tilings(w: Permutation, max_tilings: Optional[int] = None) -> int:
    return len(tiling_classes(w, max_tilings))


def tilings(w: Permutation, max_tilings: Optional[int] = None) -> Tuple[Tiling, ...]:
    """T(w), one tiling per commutation class, sorted by canonical word."""
    return tuple(place_tiles(w, cls) for cls in tiling_classes(w, max_tilings))


# ---------------------------------------------------------------------------
# Perimeter and subhexagons
# ---------------------------------------------------------------------------


def _boundary_pairs(embedding: PolygonEmbedding, kind: PerimeterType) -> List[Tuple[Segment, Segment]]:
    left, right = embedding.left_segments, embedding.right_segments
    if kind is PerimeterType.LEFT:
        return list(zip(left, left[1:]))
    if kind is PerimeterType.RIGHT:
        return list(zip(right, right[1:]))
    if kind is PerimeterType.TOP:
        return [(left[0], right[0])]
    return [(left[-1], right[-1])]


def perimeter_tiles(t: Tiling, kind: PerimeterType) -> FrozenSet[Tile]:
    """Tiles sharing the two consecutive boundary edges that define ``kind``."""
    pairs = _boundary_pairs(t.embedding, kind)
    return frozenset(
        tile for tile in t.tiles if any(a in tile.edges and b in tile.edges for a, b in pairs)
    )


def perimeter_labels_from_word(t: Tiling, kind: PerimeterType) -> FrozenSet[ValuePair]:
    """Perimeter labels read off the canonical word instead of the geometry."""
    w, word = t.owner, t.word
    if kind is PerimeterType.RIGHT:
        return frozenset(ValuePair.of(w(k), w(k + 1)) for k in final_letters(t.commutation_class))
    if kind is PerimeterType.LEFT:
        return frozenset(ValuePair(k, k + 1) for k in initial_letters(t.commutation_class))
    if kind is PerimeterType.TOP:
        return frozenset({ValuePair.of(1, w(1))}) if word.count(1) == 1 else frozenset()
    n = w.n
    return frozenset({ValuePair.of(n, w(n))}) if word.count(n - 1) == 1 else frozenset()


def perimeter_types_of(t: Tiling) -> Dict[ValuePair, FrozenSet[PerimeterType]]:
    """Map each perimeter tile's label to every type it has."""
    types: Dict[ValuePair, Set[PerimeterType]] = {}
    for kind in PerimeterType:
        for tile in perimeter_tiles(t, kind):
            types.setdefault(tile.label, set()).add(kind)
    return {label: frozenset(kinds) for label, kinds in sorted(types.items())}


def _forms_hexagon(a: Tile, b: Tile, c: Tile) -> bool:
    if len(set(a.vertices) & set(b.vertices) & set(c.vertices)) != 1:
        return False
    return all(len(p.edges & q.edges) == 1 for p, q in ((a, b), (a, c), (b, c)))


def subhexagons(t: Tiling) -> FrozenSet[Tuple[int, int, int]]:
    """Triples (x, y, z) whose three tiles meet around one vertex as a hexagon."""
    by_label = {tile.label: tile for tile in t.tiles}
    found = set()
    for x, y, z in itertools.combinations(range(1, t.owner.n + 1), 3):
        trio = [by_label.get(ValuePair(x, y)), by_label.get(ValuePair(x, z)), by_label.get(ValuePair(y, z))]
        if all(trio) and _forms_hexagon(*trio):
            found.add((x, y, z))
    return frozenset(found)


# ---------------------------------------------------------------------------
# Left-right reflection
# ---------------------------------------------------------------------------


def transpose_label(label: ValuePair, w: Permutation) -> ValuePair:
    """Relabel a tile of T(w) as its counterpart in T(w^{-1})."""
    w_inv = inverse(w)
    return ValuePair.of(w_inv(label.low), w_inv(label.high))


def transpose_tiling(t: Tiling) -> Tiling:
    """The mirror tiling in T(w^{-1}) whose class holds the reversed words."""
    return place_tiles(inverse(t.owner), reverse_class(t.commutation_class, t.owner))
