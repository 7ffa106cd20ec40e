"""Exhaustive verification of the closed-form claims against brute force."""

from __future__ import annotations

import logging
import time
import uuid
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import yaml

from src.config import THEOREMS_KNOWLEDGE, ensure_directories, settings
from src.elnitsky.errors import UnknownTheorem
from src.elnitsky.forced import (
    forced_tiles,
    perimeter_labels,
    predicted_forced_bottom,
    predicted_forced_left,
    predicted_forced_right,
    predicted_forced_top,
)
from src.elnitsky.optimal import (
    catalan,
    enumerate_321_avoiding_alternating,
    enumerate_max_forced,
    is_max_forced_right,
    phi,
    phi_inverse,
)
from src.elnitsky.perm import (
    Permutation,
    ValuePair,
    all_permutations,
    format_permutation,
    fully_supported_permutations,
    inverse,
    inversion_pairs,
    is_321_avoiding,
    is_alternating,
    is_fully_supported,
    occurrences_321,
)
from src.elnitsky.tiling import (
    PerimeterType,
    perimeter_labels_from_word,
    polygon_area2,
    subhexagons,
    tile_area2,
    tiling_classes,
    tilings,
    transpose_label,
    transpose_tiling,
)
from src.elnitsky.words import reverse_class
from src.qa.run_log import VerificationLogger
from src.schemas import Counterexample, VerificationReport

logger = logging.getLogger(__name__)

Check = Callable[[Permutation, int], Optional[str]]

MIRROR = {
    PerimeterType.LEFT: PerimeterType.RIGHT,
    PerimeterType.RIGHT: PerimeterType.LEFT,
    PerimeterType.TOP: PerimeterType.TOP,
    PerimeterType.BOTTOM: PerimeterType.BOTTOM,
}


def _show(labels: Iterable[ValuePair]) -> str:
    return "{" + ", ".join(str(label) for label in sorted(labels)) + "}"


# ---------------------------------------------------------------------------
# Per-permutation checks (top level so worker processes can pickle them)
# ---------------------------------------------------------------------------


def _compare_forced(w: Permutation, kind: PerimeterType, predicted: Iterable[ValuePair]) -> Optional[str]:
    brute = forced_tiles(w).forced[kind]
    predicted = frozenset(predicted)
    if brute != predicted:
        return f"{kind.value}: brute force {_show(brute)}, predicted {_show(predicted)}"
    return None


def check_force_right(w: Permutation, _size: int) -> Optional[str]:
    return _compare_forced(w, PerimeterType.RIGHT, predicted_forced_right(w))


def check_force_left(w: Permutation, _size: int) -> Optional[str]:
    return _compare_forced(w, PerimeterType.LEFT, predicted_forced_left(w))


def check_force_top(w: Permutation, _size: int) -> Optional[str]:
    top = predicted_forced_top(w)
    return _compare_forced(w, PerimeterType.TOP, [top] if top else [])


def check_force_bottom(w: Permutation, _size: int) -> Optional[str]:
    bottom = predicted_forced_bottom(w)
    return _compare_forced(w, PerimeterType.BOTTOM, [bottom] if bottom else [])


def check_right_at_top(w: Permutation, _size: int) -> Optional[str]:
    n = w.n
    if n < 2:
        return None
    right, left = predicted_forced_right(w), predicted_forced_left(w)
    top, bottom = predicted_forced_top(w), predicted_forced_bottom(w)
    implications = [
        ("right", ValuePair.of(w(1), w(2)), right, top, "top"),
        ("right", ValuePair.of(w(n - 1), w(n)), right, bottom, "bottom"),
        ("left", ValuePair(1, 2), left, top, "top"),
        ("left", ValuePair(n - 1, n), left, bottom, "bottom"),
    ]
    for side, tile, forced, end, end_name in implications:
        if tile in forced and end != tile:
            return f"forced {side} tile {tile} but forced {end_name} tile is {end}"
    return None


def check_hexagon(w: Permutation, _size: int) -> Optional[str]:
    occurrences = occurrences_321(w)
    seen = set()
    all_tilings = tilings(w)
    for t in all_tilings:
        found = subhexagons(t)
        stray = found - occurrences
        if stray:
            return f"tiling {list(t.word)} has subhexagons {sorted(stray)} outside the 321-occurrences"
        seen |= found
    if seen != occurrences:
        return f"321-occurrences {sorted(occurrences - seen)} never appear as subhexagons"
    if is_321_avoiding(w) != (len(all_tilings) == 1):
        return f"321-avoiding is {is_321_avoiding(w)} but there are {len(all_tilings)} tilings"
    return None


def check_tau(w: Permutation, _size: int) -> Optional[str]:
    w_inv = inverse(w)
    mirrored = sorted(reverse_class(cls) for cls in tiling_classes(w))
    if mirrored != sorted(tiling_classes(w_inv)):
        return f"reversed classes of {w} differ from the classes of {w_inv}"
    for t in tilings(w):
        ours, theirs = perimeter_labels(t), perimeter_labels(transpose_tiling(t))
        for kind in PerimeterType:
            moved = frozenset(transpose_label(label, w) for label in ours[kind])
            if moved != theirs[MIRROR[kind]]:
                return (
                    f"tiling {list(t.word)}: {kind.value} tiles {_show(moved)} after reflection, "
                    f"{MIRROR[kind].value} tiles {_show(theirs[MIRROR[kind]])} in the mirror"
                )
    dual = frozenset(transpose_label(label, w_inv) for label in predicted_forced_right(w_inv))
    if dual != predicted_forced_left(w):
        return f"forced left {_show(predicted_forced_left(w))}, reflected forced right {_show(dual)}"
    return None


def check_labels(w: Permutation, _size: int) -> Optional[str]:
    expected = inversion_pairs(w)
    for t in tilings(w):
        labels = t.labels()
        if len(labels) != len(expected) or frozenset(labels) != expected:
            return f"tiling {list(t.word)} has labels {_show(labels)}, inversions {_show(expected)}"
        covered = sum(tile_area2(tile) for tile in t.tiles)
        if covered != polygon_area2(t.embedding):
            return f"tiling {list(t.word)} covers area {covered}/2 of {polygon_area2(t.embedding)}/2"
        geometric = perimeter_labels(t)
        for kind in PerimeterType:
            shortcut = perimeter_labels_from_word(t, kind)
            if shortcut != geometric[kind]:
                return (
                    f"tiling {list(t.word)}: {kind.value} tiles {_show(geometric[kind])} by geometry, "
                    f"{_show(shortcut)} from the word"
                )
    return None


def check_optimal_char(w: Permutation, size: int) -> Optional[str]:
    optimal = is_max_forced_right(w)
    if optimal != (is_alternating(w) and is_321_avoiding(w)):
        return f"is_max_forced_right is {optimal} but alternating and 321-avoiding is not"
    if is_fully_supported(w):
        count = len(forced_tiles(w).forced[PerimeterType.RIGHT])
        if optimal != (count == size):
            return f"{count} forced right tiles for m = {size}, is_max_forced_right is {optimal}"
    return None


def check_phi(v: Permutation, size: int) -> Optional[str]:
    w = phi(v)
    if w not in _max_forced(size):
        return f"phi({format_permutation(v)}) = {format_permutation(w)} is not maximally forced"
    if phi_inverse(w) != v:
        return f"phi_inverse(phi({format_permutation(v)})) = {format_permutation(phi_inverse(w))}"
    return None


@lru_cache(maxsize=None)
def _max_forced(m: int) -> frozenset:
    return frozenset(enumerate_max_forced(m))


def catalan_totals(m: int) -> List[str]:
    problems = []
    alternating = enumerate_321_avoiding_alternating(m)
    if len(alternating) != catalan(m):
        problems.append(f"{len(alternating)} alternating 321-avoiding permutations, C_{m} = {catalan(m)}")
    optimal = enumerate_max_forced(m)
    if len(optimal) != catalan(m - 1):
        problems.append(f"{len(optimal)} maximally forced permutations, C_{m - 1} = {catalan(m - 1)}")
    if m >= 2:
        images = sorted(phi(v) for v in enumerate_321_avoiding_alternating(m - 1))
        if len(set(images)) != len(images):
            problems.append("phi is not injective")
        if images != sorted(optimal):
            problems.append("phi image differs from the maximally forced permutations")
    return problems


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    check: Check
    cases: Callable[[int], Iterable[Permutation]]
    totals: Optional[Callable[[int], List[str]]] = None


def _alternating_below(m: int) -> Iterable[Permutation]:
    return enumerate_321_avoiding_alternating(m - 1) if m >= 2 else ()


CLAIMS: Dict[str, Claim] = {
    "force-right": Claim(check_force_right, fully_supported_permutations),
    "force-left": Claim(check_force_left, fully_supported_permutations),
    "force-top": Claim(check_force_top, fully_supported_permutations),
    "force-bottom": Claim(check_force_bottom, fully_supported_permutations),
    "right-at-top": Claim(check_right_at_top, fully_supported_permutations),
    "hexagon": Claim(check_hexagon, fully_supported_permutations),
    "tau": Claim(check_tau, fully_supported_permutations),
    "labels": Claim(check_labels, fully_supported_permutations),
    "optimal-char": Claim(check_optimal_char, lambda m: all_permutations(2 * m)),
    "catalan": Claim(check_phi, _alternating_below, catalan_totals),
}


def load_theorem_catalog(path: Path = THEOREMS_KNOWLEDGE) -> Dict[str, Dict[str, str]]:
    """Load claim metadata (parameter, title, statement) from YAML."""
    with Path(path).open("r", encoding="utf-8") as handle:
        data = yaml.safe_load(handle) or {}
    return data.get("theorems", {})


def normalize_theorem_name(name: str) -> str:
    return name.strip().lower().replace("_", "-").replace(" ", "-")


def theorem_parameter(name: str) -> str:
    normalized = normalize_theorem_name(name)
    catalog = load_theorem_catalog()
    if normalized not in CLAIMS or normalized not in catalog:
        raise UnknownTheorem(f"No claim named '{name}'. Known: {', '.join(sorted(CLAIMS))}.")
    return catalog[normalized]["parameter"]


def _run_case(job: Tuple[str, Permutation, int]) -> Tuple[Permutation, Optional[str]]:
    name, w, size = job
    return w, CLAIMS[name].check(w, size)


def verify_theorem(
    name: str,
    size: int,
    workers: Optional[int] = None,
    run_logger: Optional[VerificationLogger] = None,
) -> VerificationReport:
    """Check one claim for every permutation of the given size."""
    normalized = normalize_theorem_name(name)
    parameter = theorem_parameter(normalized)
    claim = CLAIMS[normalized]
    meta = load_theorem_catalog()[normalized]
    workers = workers if workers is not None else settings.workers

    report = VerificationReport(theorem=normalized, title=meta.get("title", ""), parameter=parameter, size=size)
    jobs = [(normalized, w, size) for w in claim.cases(size)]
    start_ts = time.time()
    logger.info("Verifying %s for %s = %d over %d permutations", normalized, parameter, size, len(jobs))

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_case, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        outcomes = [_run_case(job) for job in jobs]

    for w, detail in outcomes:
        report.checked += 1
        if detail is not None:
            logger.warning("Counterexample to %s: %s (%s)", normalized, w, detail)
            report.counterexamples.append(Counterexample(permutation=list(w.entries), detail=detail))
            if run_logger:
                run_logger.counterexample(detail, format_permutation(w))

    if claim.totals is not None:
        for detail in claim.totals(size):
            report.counterexamples.append(Counterexample(detail=detail))
            if run_logger:
                run_logger.counterexample(detail)

    if run_logger:
        run_logger.summary(report, time.time() - start_ts)
    return report


def new_run_logger(name: str) -> VerificationLogger:
    """Open a JSONL run log under ``settings.log_dir``."""
    ensure_directories()
    run_id = f"{normalize_theorem_name(name)}_{uuid.uuid4().hex[:8]}"
    return VerificationLogger(run_id, settings.log_dir)
