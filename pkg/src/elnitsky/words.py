"""Reduced words and their commutation classes.

Words act by right multiplication starting from the identity: the letter
``k`` swaps the entries at positions ``k`` and ``k+1``. Two letters commute
when they differ by at least two. Each commutation class is represented by
its lexicographically least word.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from ..config import settings
from .errors import ClassPermutationMismatch, LetterOutOfRange, MixedPermutations, NotReduced, SizeLimitExceeded
from .perm import Permutation, inverse, inversion_count

logger = logging.getLogger(__name__)

ReducedWord = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class CommutationClass:
    """A commutation class, identified by its canonical (lex-least) word."""

    canonical: ReducedWord

    def __len__(self) -> int:
        return len(self.canonical)

    def word_count(self) -> int:
        """Number of words in the class (computed on demand by BFS)."""
        return len(expand_class(self.canonical))


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def evaluate(word: Sequence[int], n: int) -> Permutation:
    entries = list(range(1, n + 1))
    for letter in word:
        if not 1 <= letter <= n - 1:
            raise LetterOutOfRange(f"Letter {letter} is outside 1..{n - 1}.")
        entries[letter - 1], entries[letter] = entries[letter], entries[letter - 1]
    return Permutation(tuple(entries))


def is_reduced(word: Sequence[int], n: int) -> bool:
    return inversion_count(evaluate(word, n)) == len(word)


def _size_for(words: Iterable[Sequence[int]]) -> int:
    largest = max((max(word) for word in words if word), default=0)
    return largest + 1


# ---------------------------------------------------------------------------
# Reduced words
# ---------------------------------------------------------------------------


@lru_cache(maxsize=4096)
def _reduced_words(entries: Tuple[int, ...], cap: int) -> Tuple[ReducedWord, ...]:
    n = len(entries)
    if all(entries[i] < entries[i + 1] for i in range(n - 1)):
        return ((),)
    collected: List[ReducedWord] = []
    for k in range(1, n):
        if entries[k - 1] < entries[k]:
            continue
        shorter = list(entries)
        shorter[k - 1], shorter[k] = shorter[k], shorter[k - 1]
        for prefix in _reduced_words(tuple(shorter), cap):
            collected.append(prefix + (k,))
            if len(collected) > cap:
                raise SizeLimitExceeded(f"More than {cap} reduced words for {entries}.")
    return tuple(sorted(collected))


def reduced_words(w: Permutation, max_words: Optional[int] = None) -> Tuple[ReducedWord, ...]:
    """All reduced words of w, sorted lexicographically."""
    cap = max_words if max_words is not None else settings.max_words
    return _reduced_words(w.entries, cap)


def clear_word_cache() -> None:
    """Drop memoised reduced words."""
    _reduced_words.cache_clear()


def word_cache_size() -> int:
    return _reduced_words.cache_info().currsize


# ---------------------------------------------------------------------------
# Commutation classes
# ---------------------------------------------------------------------------


def _blocked(letter: int, seen: Set[int]) -> bool:
    return letter in seen or letter - 1 in seen or letter + 1 in seen


def canonical_form(word: Sequence[int]) -> ReducedWord:
    """Lexicographically least word of the commutation class of ``word``.

    Greedy: repeatedly emit the smallest letter among occurrences with no
    earlier remaining occurrence of a letter within distance 1.
    """
    remaining = list(word)
    result: List[int] = []
    while remaining:
        seen: Set[int] = set()
        best_index = -1
        for index, letter in enumerate(remaining):
            if not _blocked(letter, seen) and (best_index < 0 or letter < remaining[best_index]):
                best_index = index
            seen.add(letter)
        result.append(remaining.pop(best_index))
    return tuple(result)


def expand_class(word: Sequence[int]) -> FrozenSet[ReducedWord]:
    """Every word reachable from ``word`` by swapping adjacent commuting letters."""
    start = tuple(word)
    found = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for i in range(len(current) - 1):
            a, b = current[i], current[i + 1]
            if abs(a - b) < 2:
                continue
            swapped = current[:i] + (b, a) + current[i + 2 :]
            if swapped not in found:
                found.add(swapped)
                queue.append(swapped)
    return frozenset(found)


def commutation_classes(words: Iterable[Sequence[int]]) -> Tuple[CommutationClass, ...]:
    """Partition words of one permutation into commutation classes."""
    materialised = [tuple(word) for word in words]
    if not materialised:
        return ()
    n = _size_for(materialised)
    target = evaluate(materialised[0], n)
    classes: Dict[ReducedWord, CommutationClass] = {}
    for word in materialised:
        if evaluate(word, n) != target:
            raise MixedPermutations(f"Word {list(word)} does not evaluate to {target}.")
        canonical = canonical_form(word)
        classes.setdefault(canonical, CommutationClass(canonical))
    return tuple(sorted(classes.values()))


def initial_letters(cls: CommutationClass) -> FrozenSet[int]:
    """Letters some word of the class begins with."""
    seen: Set[int] = set()
    letters = set()
    for letter in cls.canonical:
        if not _blocked(letter, seen):
            letters.add(letter)
        seen.add(letter)
    return frozenset(letters)


def final_letters(cls: CommutationClass) -> FrozenSet[int]:
    """Letters some word of the class ends with."""
    return initial_letters(CommutationClass(tuple(reversed(cls.canonical))))


def reverse_class(cls: CommutationClass, w: Optional[Permutation] = None) -> CommutationClass:
    """Class of the reversed words: a commutation class of w^{-1}."""
    if w is not None:
        if evaluate(cls.canonical, w.n) != w:
            raise ClassPermutationMismatch(f"Class {list(cls.canonical)} is not a class of {w}.")
        logger.debug("Reversing class %s of %s into a class of %s", cls.canonical, w, inverse(w))
    return CommutationClass(canonical_form(tuple(reversed(cls.canonical))))


def class_of(word: Sequence[int], n: int) -> CommutationClass:
    """Commutation class of a single reduced word, validated against S_n."""
    if not is_reduced(word, n):
        raise NotReduced(f"Word {list(word)} is not reduced in S_{n}.")
    return CommutationClass(canonical_form(word))
