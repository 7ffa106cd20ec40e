"""Maximally forced permutations, phi and the Catalan counts."""

from __future__ import annotations

import pytest

from src.elnitsky.errors import ConsistencyError, DomainViolation, SizeLimitExceeded
from src.elnitsky.forced import forced_tiles
from src.elnitsky.optimal import (
    alternating_321_avoiding_bruteforce,
    catalan,
    enumerate_321_avoiding_alternating,
    enumerate_max_forced,
    is_max_forced_right,
    optimal_witness,
    phi,
    phi_inverse,
)
from src.elnitsky import optimal as optimal_module
from src.elnitsky.perm import (
    all_permutations,
    fully_supported_permutations,
    is_321_avoiding,
    is_alternating,
    parse_permutation,
)
from src.elnitsky.tiling import PerimeterType, count_tilings


def p(text) -> object:
    return parse_permutation(str(text))


def test_catalan_numbers() -> None:
    assert [catalan(k) for k in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    with pytest.raises(ValueError):
        catalan(-1)


def test_is_max_forced_right_examples() -> None:
    assert is_max_forced_right(p("315264"))
    assert not is_max_forced_right(p("325164"))
    assert not is_max_forced_right(p("3412"))
    assert not is_max_forced_right(p("21543"))
    assert is_max_forced_right(p("21"))


def test_optimal_witness() -> None:
    witness = optimal_witness(p("315264"))
    assert (witness.m, witness.forced_right_count) == (3, 3)
    assert witness.is_optimal
    assert not optimal_witness(p("3412")).is_optimal


def test_is_max_forced_right_is_alternating_and_321_avoiding() -> None:
    for m in range(1, 5):
        for w in all_permutations(2 * m):
            assert is_max_forced_right(w) == (is_alternating(w) and is_321_avoiding(w)), w


def test_is_max_forced_right_matches_brute_force_up_to_m_3() -> None:
    for m in range(1, 4):
        for w in fully_supported_permutations(2 * m):
            count = len(forced_tiles(w).forced[PerimeterType.RIGHT])
            assert is_max_forced_right(w) == (count == m), w
            assert count <= m


def test_optimal_permutations_have_one_tiling() -> None:
    for m in range(1, 5):
        for w in enumerate_max_forced(m):
            assert count_tilings(w) == 1


def test_phi_table(examples) -> None:
    for left, right in examples["phi_table"]:
        assert phi(p(left)) == p(right)
        assert phi_inverse(p(right)) == p(left)
    assert phi(p("21")) == p("3142")


def test_phi_domain() -> None:
    with pytest.raises(DomainViolation):
        phi(p("12"))
    with pytest.raises(DomainViolation):
        phi(p("213"))
    with pytest.raises(DomainViolation):
        phi_inverse(p("21"))
    with pytest.raises(DomainViolation):
        phi_inverse(p("2143"))
    with pytest.raises(DomainViolation):
        phi_inverse(p("3412"))


def test_phi_lemma_violation_is_reported(monkeypatch) -> None:
    monkeypatch.setattr(optimal_module, "is_fully_supported", lambda w: False)
    with pytest.raises(ConsistencyError):
        phi(p("21"))


def test_enumeration_of_table_column() -> None:
    found = {"".join(map(str, w.entries)) for w in enumerate_321_avoiding_alternating(3)}
    assert found == {"214365", "215364", "314265", "315264", "415263"}
    assert [w.entries for w in enumerate_321_avoiding_alternating(1)] == [(2, 1)]


def test_enumeration_of_max_forced() -> None:
    found = {"".join(map(str, w.entries)) for w in enumerate_max_forced(4)}
    assert found == {"31527486", "31627485", "41527386", "41627385", "51627384"}
    assert [w.entries for w in enumerate_max_forced(2)] == [(3, 1, 4, 2)]
    assert [w.entries for w in enumerate_max_forced(1)] == [(2, 1)]


def test_backtracking_matches_full_filter() -> None:
    for m in range(1, 5):
        assert enumerate_321_avoiding_alternating(m) == alternating_321_avoiding_bruteforce(m)


def test_catalan_counts_up_to_6() -> None:
    for m in range(1, 7):
        assert len(enumerate_321_avoiding_alternating(m)) == catalan(m)
        assert len(enumerate_max_forced(m)) == catalan(m - 1)


def test_phi_round_trip_up_to_6() -> None:
    for m in range(2, 7):
        optimal = set(enumerate_max_forced(m))
        images = [phi(v) for v in enumerate_321_avoiding_alternating(m - 1)]
        assert len(set(images)) == len(images)
        assert set(images) == optimal
        for w in optimal:
            assert phi(phi_inverse(w)) == w


def test_enumeration_cap() -> None:
    with pytest.raises(SizeLimitExceeded):
        enumerate_321_avoiding_alternating(4, max_optimal=10)
    with pytest.raises(ValueError):
        enumerate_321_avoiding_alternating(0)
