"""Permutations with the largest possible number of forced right-perimeter tiles.

For n = 2m the maximum is m, and it is reached exactly by the fully
supported down-up alternating 321-avoiding permutations. ``phi`` grows such a
permutation of size 2m-2 into one of size 2m; both families are counted by
Catalan numbers.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from ..config import settings
from .errors import ConsistencyError, DomainViolation, SizeLimitExceeded
from .forced import predicted_forced_right
from .perm import (
    Permutation,
    all_permutations,
    is_321_avoiding,
    is_alternating,
    is_fully_supported,
    make_permutation,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OptimalWitness:
    w: Permutation
    m: int
    forced_right_count: int

    @property
    def is_optimal(self) -> bool:
        return self.w.n == 2 * self.m and self.forced_right_count == self.m


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError(f"Catalan index must be non-negative, got {k}.")
    return math.comb(2 * k, k) // (k + 1)


def is_max_forced_right(w: Permutation) -> bool:
    """Odd-position descents with increasing odd and even subsequences."""
    n = w.n
    if n % 2:
        return False
    e = w.entries
    odd, even = e[0::2], e[1::2]
    if any(a <= b for a, b in zip(odd, even)):
        return False
    return all(a < b for a, b in zip(odd, odd[1:])) and all(a < b for a, b in zip(even, even[1:]))


def optimal_witness(w: Permutation) -> OptimalWitness:
    """Wrap w with its closed-form forced-right count."""
    return OptimalWitness(w=w, m=w.n // 2, forced_right_count=len(predicted_forced_right(w)))


# ---------------------------------------------------------------------------
# phi and its inverse
# ---------------------------------------------------------------------------


def _require_alternating_321_avoiding(w: Permutation, role: str) -> None:
    if w.n % 2 or not is_alternating(w) or not is_321_avoiding(w):
        raise DomainViolation(f"{role} {w} must be an even-size alternating 321-avoiding permutation.")


def phi(v: Permutation) -> Permutation:
    """Map v in S_{2m-2} to a fully supported alternating 321-avoiding w in S_{2m}."""
    _require_alternating_321_avoiding(v, "Argument")
    size = v.n + 2
    entries: List[int] = []
    for i in range(1, size + 1):
        if i == 2:
            entries.append(1)
        elif i == size - 1:
            entries.append(size)
        elif i % 2:
            entries.append(v(i) + 1)
        else:
            entries.append(v(i - 2) + 1)
    w = make_permutation(entries)
    if settings.cross_check:
        if not is_fully_supported(w):
            raise ConsistencyError(f"phi({v}) = {w} is not fully supported.")
        if not is_alternating(w) or not is_321_avoiding(w):
            raise ConsistencyError(f"phi({v}) = {w} is not alternating and 321-avoiding.")
    return w


def phi_inverse(w: Permutation) -> Permutation:
    if w.n < 4:
        raise DomainViolation(f"{w} has no preimage: phi only produces sizes of at least 4.")
    _require_alternating_321_avoiding(w, "Argument")
    if not is_fully_supported(w):
        raise DomainViolation(f"{w} is not fully supported.")
    entries = [w(i) - 1 if i % 2 else w(i + 2) - 1 for i in range(1, w.n - 1)]
    v = make_permutation(entries)
    if settings.cross_check and phi(v) != w:
        raise ConsistencyError(f"phi(phi_inverse({w})) = {phi(v)}.")
    return v


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _extend(prefix: List[int], remaining: List[int], size: int) -> Iterator[Tuple[int, ...]]:
    position = len(prefix) + 1
    if position > size:
        yield tuple(prefix)
        return
    if position % 2 == 0:
        # Every later entry exceeds this one, so it is the smallest left.
        low = remaining[0]
        if low < prefix[-1] and (position < 4 or low > prefix[-2]):
            yield from _extend(prefix + [low], remaining[1:], size)
        return
    floor = prefix[-2] if position >= 3 else 0
    for index, value in enumerate(remaining):
        if value <= floor:
            continue
        rest = remaining[:index] + remaining[index + 1 :]
        # The next even entry is min(rest) and must sit below this one.
        if rest and rest[0] > value:
            continue
        yield from _extend(prefix + [value], rest, size)


def enumerate_321_avoiding_alternating(m: int, max_optimal: Optional[int] = None) -> Tuple[Permutation, ...]:
    """Down-up alternating 321-avoiding permutations of size 2m, sorted."""
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}.")
    cap = max_optimal if max_optimal is not None else settings.max_optimal
    found: List[Permutation] = []
    for entries in _extend([], list(range(1, 2 * m + 1)), 2 * m):
        found.append(Permutation(entries))
        if len(found) > cap:
            raise SizeLimitExceeded(f"More than {cap} alternating 321-avoiding permutations of size {2 * m}.")
    logger.debug("Enumerated %d alternating 321-avoiding permutations of size %d", len(found), 2 * m)
    return tuple(sorted(found))


def enumerate_max_forced(m: int, max_optimal: Optional[int] = None) -> Tuple[Permutation, ...]:
    """Fully supported permutations of size 2m with m forced right-perimeter tiles."""
    result = tuple(w for w in enumerate_321_avoiding_alternating(m, max_optimal) if is_fully_supported(w))
    if settings.cross_check and m >= 2:
        images = tuple(sorted(phi(v) for v in enumerate_321_avoiding_alternating(m - 1, max_optimal)))
        if images != result:
            raise ConsistencyError(f"phi image differs from the optimal family for m = {m}.")
    return result


def alternating_321_avoiding_bruteforce(m: int) -> Tuple[Permutation, ...]:
    """Filter all of S_{2m}; feasible up to 2m = 10."""
    return tuple(w for w in all_permutations(2 * m) if is_alternating(w) and is_321_avoiding(w))
