"""Permutation arithmetic and the 321/extremum predicates.

Positions and values are 1-indexed at every public boundary: ``w(i)`` is the
value at position ``i`` and ``entries[i - 1]`` is its storage slot.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import BadPositions, NotABijection


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of 1..n in one-line notation."""

    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if n < 1:
            raise NotABijection("A permutation needs at least one entry.")
        seen = set()
        for value in entries:
            if not isinstance(value, int) or isinstance(value, bool):
                raise NotABijection(f"Entry {value!r} is not an integer.")
            if value < 1 or value > n:
                raise NotABijection(f"Entry {value} is outside 1..{n}.")
            if value in seen:
                raise NotABijection(f"Entry {value} is repeated.")
            seen.add(value)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, position: int) -> int:
        return self.entries[position - 1]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __str__(self) -> str:
        return format_permutation(self)


@dataclass(frozen=True, order=True)
class ValuePair:
    """An unordered pair of values {low < high}; the label of a tile."""

    low: int
    high: int

    def __post_init__(self) -> None:
        if not 1 <= self.low < self.high:
            raise ValueError(f"Invalid value pair ({self.low}, {self.high}).")

    @classmethod
    def of(cls, a: int, b: int) -> "ValuePair":
        return cls(min(a, b), max(a, b))

    def as_list(self) -> List[int]:
        return [self.low, self.high]

    def __str__(self) -> str:
        return f"{{{self.low},{self.high}}}"


# ---------------------------------------------------------------------------
# Construction and parsing
# ---------------------------------------------------------------------------


def make_permutation(entries: Iterable[int]) -> Permutation:
    """Validate one-line notation and wrap it."""
    return Permutation(tuple(entries))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def parse_permutation(text: str) -> Permutation:
    """Parse ``34251`` (n <= 9 only) or ``3,4,2,5,1``.

    Raises ``ValueError`` for text that is neither form and ``NotABijection``
    for well-formed text that is not a permutation.
    """
    cleaned = text.strip()
    if not cleaned:
        raise ValueError("Empty permutation.")
    if "," in cleaned:
        parts = [part.strip() for part in cleaned.split(",")]
        if not all(part.isdigit() for part in parts):
            raise ValueError(f"Cannot parse permutation {text!r}.")
        return make_permutation(int(part) for part in parts)
    if not cleaned.isdigit():
        raise ValueError(f"Cannot parse permutation {text!r}.")
    if len(cleaned) > 9:
        raise ValueError("Compact notation is only accepted for n <= 9; use commas.")
    return make_permutation(int(ch) for ch in cleaned)


def format_permutation(w: Permutation) -> str:
    if w.n <= 9:
        return "".join(str(value) for value in w.entries)
    return ",".join(str(value) for value in w.entries)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    for entries in itertools.permutations(range(1, n + 1)):
        yield Permutation(entries)


def fully_supported_permutations(n: int) -> Iterator[Permutation]:
    return (w for w in all_permutations(n) if is_fully_supported(w))


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------


def inverse(w: Permutation) -> Permutation:
    result = [0] * w.n
    for position, value in enumerate(w.entries, start=1):
        result[value - 1] = position
    return Permutation(tuple(result))


def apply_simple(w: Permutation, k: int) -> Permutation:
    """Return w·s_k, i.e. w with the entries at positions k and k+1 swapped."""
    entries = list(w.entries)
    entries[k - 1], entries[k] = entries[k], entries[k - 1]
    return Permutation(tuple(entries))


def descents(w: Permutation) -> FrozenSet[int]:
    e = w.entries
    return frozenset(k for k in range(1, w.n) if e[k - 1] > e[k])


def inversion_pairs(w: Permutation) -> FrozenSet[ValuePair]:
    """All {x<y} whose positions are inverted (y sits left of x)."""
    e = w.entries
    pairs = set()
    for i in range(w.n):
        for j in range(i + 1, w.n):
            if e[i] > e[j]:
                pairs.add(ValuePair(e[j], e[i]))
    return frozenset(pairs)


def inversion_count(w: Permutation) -> int:
    e = w.entries
    return sum(1 for i in range(w.n) for j in range(i + 1, w.n) if e[i] > e[j])


def is_fully_supported(w: Permutation) -> bool:
    """True iff no proper prefix of w is {1..r}."""
    running_max = 0
    for r, value in enumerate(w.entries[:-1], start=1):
        running_max = max(running_max, value)
        if running_max == r:
            return False
    return True


# ---------------------------------------------------------------------------
# Left-to-right / right-to-left extrema
# ---------------------------------------------------------------------------


def _scan_records(values: Sequence[int], larger: bool) -> FrozenSet[int]:
    records = set()
    best: Optional[int] = None
    for value in values:
        if best is None or (value > best if larger else value < best):
            records.add(value)
            best = value
    return frozenset(records)


def lr_maxima(w: Permutation) -> FrozenSet[int]:
    return _scan_records(w.entries, larger=True)


def lr_minima(w: Permutation) -> FrozenSet[int]:
    return _scan_records(w.entries, larger=False)


def rl_maxima(w: Permutation) -> FrozenSet[int]:
    return _scan_records(tuple(reversed(w.entries)), larger=True)


def rl_minima(w: Permutation) -> FrozenSet[int]:
    return _scan_records(tuple(reversed(w.entries)), larger=False)


# ---------------------------------------------------------------------------
# 321 machinery
# ---------------------------------------------------------------------------


def _prefix_max(entries: Sequence[int]) -> List[int]:
    """prefix[i] = max(entries[:i]), 0 when empty."""
    prefix = [0] * (len(entries) + 1)
    for i, value in enumerate(entries):
        prefix[i + 1] = max(prefix[i], value)
    return prefix


def _suffix_min(entries: Sequence[int]) -> List[int]:
    """suffix[i] = min(entries[i:]), n+1 when empty."""
    n = len(entries)
    suffix = [n + 1] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = min(suffix[i + 1], entries[i])
    return suffix


def _check_positions(w: Permutation, i: int, j: int) -> None:
    if not 1 <= i < j <= w.n:
        raise BadPositions(f"Positions ({i}, {j}) must satisfy 1 <= i < j <= {w.n}.")


def together_in_321(w: Permutation, i: int, j: int) -> bool:
    """True iff positions i < j extend to a 321-occurrence with a third position."""
    _check_positions(w, i, j)
    e = w.entries
    high, low = e[i - 1], e[j - 1]
    if high < low:
        return False
    if _prefix_max(e)[i - 1] > high:
        return True
    if _suffix_min(e)[j] < low:
        return True
    return any(low < e[h] < high for h in range(i, j - 1))


def together_in_321_bruteforce(w: Permutation, i: int, j: int) -> bool:
    _check_positions(w, i, j)
    e = w.entries
    for h in range(1, w.n + 1):
        if h in (i, j):
            continue
        a, b, c = (e[p - 1] for p in sorted((i, j, h)))
        if a > b > c:
            return True
    return False


def is_321_avoiding(w: Permutation) -> bool:
    e = w.entries
    prefix = _prefix_max(e)
    suffix = _suffix_min(e)
    return not any(prefix[k] > e[k] > suffix[k + 1] for k in range(w.n))


def is_321_avoiding_bruteforce(w: Permutation) -> bool:
    return not any(a > b > c for a, b, c in itertools.combinations(w.entries, 3))


def occurrences_321(w: Permutation) -> FrozenSet[Tuple[int, int, int]]:
    """Value triples (x, y, z), x<y<z, with z, y, x appearing left to right."""
    return frozenset((c, b, a) for a, b, c in itertools.combinations(w.entries, 3) if a > b > c)


def is_alternating(w: Permutation) -> bool:
    """Down-up alternation: w(1) > w(2) < w(3) > w(4) < ..."""
    e = w.entries
    for k in range(w.n - 1):
        falling = k % 2 == 0
        if falling and not e[k] > e[k + 1]:
            return False
        if not falling and not e[k] < e[k + 1]:
            return False
    return True
