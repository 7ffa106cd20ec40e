"""Permutation arithmetic, extrema and 321 machinery."""

from __future__ import annotations

import itertools

import pytest

from src.elnitsky.errors import BadPositions, NotABijection
from src.elnitsky.perm import (
    ValuePair,
    all_permutations,
    apply_simple,
    descents,
    format_permutation,
    fully_supported_permutations,
    identity,
    inverse,
    inversion_count,
    inversion_pairs,
    is_321_avoiding,
    is_321_avoiding_bruteforce,
    is_alternating,
    is_fully_supported,
    lr_maxima,
    lr_minima,
    make_permutation,
    occurrences_321,
    parse_permutation,
    rl_maxima,
    rl_minima,
    together_in_321,
    together_in_321_bruteforce,
)


def p(text: str):
    return parse_permutation(text)


def test_make_permutation_rejects_non_bijections() -> None:
    for bad in ([1, 1], [0, 1], [1, 3], []):
        with pytest.raises(NotABijection):
            make_permutation(bad)


def test_parse_accepts_compact_and_comma_forms() -> None:
    assert p("34251") == make_permutation([3, 4, 2, 5, 1])
    assert p(" 3, 4,2,5,1 ") == p("34251")
    ten = p("10,9,8,7,6,5,4,3,2,1")
    assert ten.n == 10
    assert format_permutation(ten) == "10,9,8,7,6,5,4,3,2,1"
    assert format_permutation(p("34251")) == "34251"


def test_parse_rejects_malformed_text() -> None:
    for bad in ("", "3a2", "1,,2", "1234567890"):
        with pytest.raises(ValueError):
            parse_permutation(bad)
    with pytest.raises(NotABijection):
        parse_permutation("1,1")


def test_inverse_and_basic_statistics_of_34251() -> None:
    w = p("34251")
    assert inverse(w) == p("53124")
    assert inversion_count(w) == 6
    assert descents(w) == frozenset({2, 4})
    assert inversion_pairs(w) == frozenset(
        ValuePair.of(a, b) for a, b in [(2, 3), (1, 3), (2, 4), (1, 4), (1, 2), (1, 5)]
    )
    assert apply_simple(w, 2) == p("32451")


def test_inversion_count_of_3614725() -> None:
    assert inversion_count(p("3614725")) == 9


def test_extrema() -> None:
    w = p("325164")
    assert lr_maxima(w) == frozenset({3, 5, 6})
    assert lr_minima(w) == frozenset({3, 2, 1})
    assert rl_minima(w) == frozenset({4, 1})
    assert rl_maxima(w) == frozenset({4, 6})


def test_fully_supported_counts(examples) -> None:
    counts = [sum(1 for _ in fully_supported_permutations(n)) for n in range(1, 7)]
    assert counts == examples["fully_supported_counts"]
    assert not is_fully_supported(p("2143"))
    assert is_fully_supported(p("21"))
    assert is_fully_supported(identity(1))


def test_inverse_is_an_involution_preserving_full_support_up_to_7() -> None:
    for n in range(1, 8):
        for w in all_permutations(n):
            w_inv = inverse(w)
            assert inverse(w_inv) == w
            assert is_fully_supported(w_inv) == is_fully_supported(w), w


def test_together_in_321_matches_bruteforce_up_to_7() -> None:
    for n in range(3, 8):
        for w in all_permutations(n):
            for i, j in itertools.combinations(range(1, n + 1), 2):
                assert together_in_321(w, i, j) == together_in_321_bruteforce(w, i, j), (w, i, j)


def test_together_in_321_rejects_bad_positions() -> None:
    w = p("321")
    for i, j in ((2, 1), (0, 2), (1, 4), (2, 2)):
        with pytest.raises(BadPositions):
            together_in_321(w, i, j)


def test_321_avoidance_matches_bruteforce() -> None:
    for n in range(1, 8):
        for w in all_permutations(n):
            assert is_321_avoiding(w) == is_321_avoiding_bruteforce(w)
            assert is_321_avoiding(w) == (not occurrences_321(w))


def test_occurrences_321_are_value_triples() -> None:
    assert occurrences_321(p("34251")) == frozenset({(1, 2, 3), (1, 2, 4)})
    assert occurrences_321(p("321")) == frozenset({(1, 2, 3)})


def test_alternation_is_down_up() -> None:
    assert is_alternating(p("315264"))
    assert is_alternating(p("21"))
    assert not is_alternating(p("1324"))
    assert not is_alternating(p("3412"))
