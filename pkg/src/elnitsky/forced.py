"""Forced and alpha-forced perimeter tiles.

``forced_tiles`` is the brute-force answer: enumerate T(w), collect the
perimeter tiles of every type, intersect and average. The ``predicted_*``
functions are the closed-form answers in terms of 321-patterns and
left-to-right / right-to-left extrema. With ``settings.cross_check`` on, each
predicate evaluates both of its formulations and raises ``ConsistencyError``
when they disagree.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, FrozenSet, List, Mapping, Optional

from ..config import settings
from .errors import ConsistencyError
from .perm import (
    Permutation,
    ValuePair,
    descents,
    inverse,
    lr_maxima,
    rl_minima,
    together_in_321,
)
from .tiling import PerimeterType, Tiling, perimeter_tiles, tilings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ForcedReport:
    """Per-type forced tiles and appearance frequencies for one permutation."""

    owner: Permutation
    tiling_count: int
    forced: Mapping[PerimeterType, FrozenSet[ValuePair]]
    frequencies: Mapping[PerimeterType, Mapping[ValuePair, Fraction]]

    def frequency(self, tile: ValuePair, kind: PerimeterType) -> Fraction:
        return self.frequencies[kind].get(tile, Fraction(0))

    def sorted_forced(self, kind: PerimeterType) -> List[ValuePair]:
        return sorted(self.forced[kind])


def perimeter_labels(t: Tiling) -> Dict[PerimeterType, FrozenSet[ValuePair]]:
    """Labels of the perimeter tiles of ``t``, per type."""
    return {kind: frozenset(tile.label for tile in perimeter_tiles(t, kind)) for kind in PerimeterType}


@lru_cache(maxsize=2048)
def _forced_tiles(w: Permutation, cap: int) -> ForcedReport:
    all_tilings = tilings(w, cap)
    counts: Dict[PerimeterType, Counter] = {kind: Counter() for kind in PerimeterType}
    for t in all_tilings:
        for kind, labels in perimeter_labels(t).items():
            counts[kind].update(labels)

    total = len(all_tilings)
    forced = {
        kind: frozenset(label for label, seen in counts[kind].items() if seen == total) for kind in PerimeterType
    }
    frequencies = {
        kind: MappingProxyType({label: Fraction(seen, total) for label, seen in sorted(counts[kind].items())})
        for kind in PerimeterType
    }
    logger.debug("Forced tiles for %s over %d tilings: %s", w, total, forced)
    return ForcedReport(
        owner=w,
        tiling_count=total,
        forced=MappingProxyType(forced),
        frequencies=MappingProxyType(frequencies),
    )


def forced_tiles(w: Permutation, max_tilings: Optional[int] = None) -> ForcedReport:
    """Brute force over every tiling of X(w)."""
    cap = max_tilings if max_tilings is not None else settings.max_tilings
    return _forced_tiles(w, cap)


def tile_frequency(w: Permutation, tile: ValuePair, kind: PerimeterType) -> Fraction:
    """Proportion of tilings of X(w) in which ``tile`` is a ``kind`` perimeter tile."""
    return forced_tiles(w).frequency(tile, kind)


# ---------------------------------------------------------------------------
# Closed-form predicates
# ---------------------------------------------------------------------------


def _agree(condition: str, w: Permutation, extremum_form: object, pattern_form: object) -> None:
    if extremum_form != pattern_form:
        raise ConsistencyError(
            f"{condition} for {w}: extremum form gives {extremum_form}, pattern form gives {pattern_form}."
        )


def predicted_forced_right(w: Permutation) -> FrozenSet[ValuePair]:
    """Descent pairs {w(k+1) < w(k)} with w(k) a LR-max and w(k+1) a RL-min."""
    maxima, minima = lr_maxima(w), rl_minima(w)
    steps = sorted(descents(w))
    result = frozenset(ValuePair.of(w(k), w(k + 1)) for k in steps if w(k) in maxima and w(k + 1) in minima)
    if settings.cross_check:
        pattern = frozenset(ValuePair.of(w(k), w(k + 1)) for k in steps if not together_in_321(w, k, k + 1))
        _agree("force-right", w, result, pattern)
    return result


def predicted_forced_left(w: Permutation) -> FrozenSet[ValuePair]:
    """Pairs {k, k+1} inverted in w whose entries never share a 321-pattern."""
    w_inv = inverse(w)
    maxima, minima = lr_maxima(w), rl_minima(w)
    inverted = [k for k in range(1, w.n) if w_inv(k) > w_inv(k + 1)]
    result = frozenset(ValuePair(k, k + 1) for k in inverted if k + 1 in maxima and k in minima)
    if settings.cross_check:
        pattern = frozenset(
            ValuePair(k, k + 1) for k in inverted if not together_in_321(w, w_inv(k + 1), w_inv(k))
        )
        _agree("force-left", w, result, pattern)
    return result


def predicted_forced_top(w: Permutation) -> Optional[ValuePair]:
    """{1, w(1)} when the first LR-min after w(1) is 1."""
    if w.n < 2 or w(1) == 1:
        return None
    first_minimum = next(value for value in w.entries[1:] if value < w(1))
    result = ValuePair.of(1, w(1)) if first_minimum == 1 else None
    if settings.cross_check:
        pattern = None if together_in_321(w, 1, inverse(w)(1)) else ValuePair.of(1, w(1))
        _agree("force-top", w, result, pattern)
    return result


def predicted_forced_bottom(w: Permutation) -> Optional[ValuePair]:
    """{n, w(n)} when the first RL-max before w(n) is n."""
    n = w.n
    if n < 2 or w(n) == n:
        return None
    first_maximum = next(value for value in reversed(w.entries[:-1]) if value > w(n))
    result = ValuePair.of(n, w(n)) if first_maximum == n else None
    if settings.cross_check:
        pattern = None if together_in_321(w, inverse(w)(n), n) else ValuePair.of(n, w(n))
        _agree("force-bottom", w, result, pattern)
    return result


def predicted_forced(w: Permutation) -> Dict[PerimeterType, FrozenSet[ValuePair]]:
    """All four closed-form predictions in the shape of ``ForcedReport.forced``."""
    top = predicted_forced_top(w)
    bottom = predicted_forced_bottom(w)
    return {
        PerimeterType.LEFT: predicted_forced_left(w),
        PerimeterType.RIGHT: predicted_forced_right(w),
        PerimeterType.TOP: frozenset({top}) if top else frozenset(),
        PerimeterType.BOTTOM: frozenset({bottom}) if bottom else frozenset(),
    }
