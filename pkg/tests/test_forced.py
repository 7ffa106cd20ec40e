"""Forced perimeter tiles: brute force against the closed-form predicates."""

from __future__ import annotations

from fractions import Fraction

import pytest

from src.config import settings
from src.elnitsky import forced as forced_module
from src.elnitsky.errors import ConsistencyError, NotFullySupported
from src.elnitsky.forced import (
    forced_tiles,
    perimeter_labels,
    predicted_forced,
    predicted_forced_bottom,
    predicted_forced_left,
    predicted_forced_right,
    predicted_forced_top,
    tile_frequency,
)
from src.elnitsky.perm import (
    ValuePair,
    all_permutations,
    fully_supported_permutations,
    inverse,
    inversion_pairs,
    parse_permutation,
)
from src.elnitsky.tiling import PerimeterType, tilings, transpose_label


def p(text: str):
    return parse_permutation(text)


def pairs(raw):
    return frozenset(ValuePair(a, b) for a, b in raw)


def test_published_forced_sets(examples) -> None:
    for text, expected in examples["forced"].items():
        report = forced_tiles(p(text))
        assert report.tiling_count == expected["tiling_count"], text
        for kind in PerimeterType:
            assert report.forced[kind] == pairs(expected[kind.value]), (text, kind)


def test_published_forced_right_sets(examples) -> None:
    for text, expected in examples["forced_right"].items():
        assert predicted_forced_right(p(text)) == pairs(expected), text
        assert forced_tiles(p(text)).forced[PerimeterType.RIGHT] == pairs(expected), text


def test_2341_top_is_forced_but_23_is_not_forced_right() -> None:
    w = p("2341")
    assert predicted_forced_top(w) == ValuePair(1, 2)
    assert ValuePair(2, 3) not in forced_tiles(w).forced[PerimeterType.RIGHT]


def test_325164_has_a_tiling_with_two_right_perimeter_tiles() -> None:
    w = p("325164")
    assert len(forced_tiles(w).forced[PerimeterType.RIGHT]) == 2
    assert any(len(perimeter_labels(t)[PerimeterType.RIGHT]) == 2 for t in tilings(w))


def test_3614725_perimeter_tiles_are_all_forced() -> None:
    w = p("3614725")
    report = forced_tiles(w)
    assert report.tiling_count == 2
    for t in tilings(w):
        labels = perimeter_labels(t)
        for kind in PerimeterType:
            assert labels[kind] == report.forced[kind], kind


def test_frequencies() -> None:
    assert tile_frequency(p("34251"), ValuePair(1, 5), PerimeterType.RIGHT) == 1
    assert tile_frequency(p("34251"), ValuePair(2, 4), PerimeterType.RIGHT) == Fraction(2, 3)
    assert tile_frequency(p("321"), ValuePair(1, 3), PerimeterType.TOP) == Fraction(1, 2)
    assert tile_frequency(p("34251"), ValuePair(3, 4), PerimeterType.LEFT) == 0
    with pytest.raises(NotFullySupported):
        tile_frequency(p("2143"), ValuePair(1, 2), PerimeterType.LEFT)


def test_report_invariants_up_to_6() -> None:
    for n in range(1, 7):
        for w in fully_supported_permutations(n):
            report = forced_tiles(w)
            inversions = inversion_pairs(w)
            for kind in PerimeterType:
                frequencies = report.frequencies[kind]
                assert set(frequencies) <= inversions
                assert all(0 < value <= 1 for value in frequencies.values())
                assert report.forced[kind] == {label for label, value in frequencies.items() if value == 1}


def test_predicates_match_brute_force_up_to_6() -> None:
    for n in range(1, 7):
        for w in fully_supported_permutations(n):
            assert dict(forced_tiles(w).forced) == predicted_forced(w), w


def test_top_and_bottom_have_fixed_labels() -> None:
    for n in range(2, 8):
        for w in all_permutations(n):
            top, bottom = predicted_forced_top(w), predicted_forced_bottom(w)
            assert top is None or top == ValuePair.of(1, w(1))
            assert bottom is None or bottom == ValuePair.of(n, w(n))


def test_left_is_right_of_the_inverse_up_to_7() -> None:
    for n in range(2, 8):
        for w in all_permutations(n):
            w_inv = inverse(w)
            reflected = frozenset(transpose_label(label, w_inv) for label in predicted_forced_right(w_inv))
            assert predicted_forced_left(w) == reflected, w


def test_disagreeing_formulations_raise(monkeypatch) -> None:
    monkeypatch.setattr(forced_module, "together_in_321", lambda w, i, j: True)
    with pytest.raises(ConsistencyError):
        predicted_forced_right(p("34251"))


def test_cross_check_off_skips_the_pattern_form(monkeypatch) -> None:
    monkeypatch.setattr(settings, "cross_check", False)
    monkeypatch.setattr(forced_module, "together_in_321", lambda w, i, j: True)
    assert predicted_forced_right(p("34251")) == {ValuePair(1, 5)}
