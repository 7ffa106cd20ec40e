"""Pydantic schemas describing CLI and harness payloads."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from src.elnitsky.forced import ForcedReport
from src.elnitsky.perm import Permutation, ValuePair
from src.elnitsky.tiling import PerimeterType, Tiling

Parameter = Literal["n", "m"]
TilePair = List[int]


class Ratio(BaseModel):
    num: int
    den: int

    @classmethod
    def of(cls, value: Fraction) -> "Ratio":
        return cls(num=value.numerator, den=value.denominator)


class TilePayload(BaseModel):
    label: TilePair
    row: int


class TilingPayload(BaseModel):
    index: int
    word: List[int]
    tiles: List[TilePayload]
    perimeter: Dict[str, List[TilePair]]


class TilingsPayload(BaseModel):
    permutation: List[int]
    tiling_count: int
    tilings: Optional[List[TilingPayload]] = None


class FrequencyPayload(BaseModel):
    tile: TilePair
    frequency: Ratio


class ForcedPayload(BaseModel):
    permutation: List[int]
    tiling_count: int
    forced: Dict[str, List[TilePair]]
    frequencies: Dict[str, List[FrequencyPayload]]


class FreqPayload(BaseModel):
    permutation: List[int]
    tile: TilePair
    type: PerimeterType
    frequency: Ratio


class OptimalPayload(BaseModel):
    m: int
    count: int
    catalan: int
    permutations: Optional[List[List[int]]] = None


class PhiPayload(BaseModel):
    input: List[int]
    output: List[int]
    inverse: bool = False


class Counterexample(BaseModel):
    permutation: Optional[List[int]] = None
    detail: str


class VerificationReport(BaseModel):
    theorem: str
    title: str = ""
    parameter: Parameter
    size: int
    checked: int = 0
    counterexamples: List[Counterexample] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def payload(self) -> Dict[str, Any]:
        """Machine-readable form; the size is keyed by its parameter name."""
        return {
            "theorem": self.theorem,
            self.parameter: self.size,
            "checked": self.checked,
            "counterexamples": [example.model_dump() for example in self.counterexamples],
            "passed": self.passed,
        }


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


def _pairs(labels) -> List[TilePair]:
    return [label.as_list() for label in sorted(labels)]


def tiling_payload(index: int, t: Tiling, perimeter: Dict[PerimeterType, Any]) -> TilingPayload:
    tiles = sorted(t.tiles, key=lambda tile: tile.label)
    return TilingPayload(
        index=index,
        word=list(t.word),
        tiles=[TilePayload(label=tile.label.as_list(), row=tile.row) for tile in tiles],
        perimeter={kind.value: _pairs(perimeter[kind]) for kind in PerimeterType},
    )


def forced_payload(report: ForcedReport, kinds: List[PerimeterType]) -> ForcedPayload:
    return ForcedPayload(
        permutation=list(report.owner.entries),
        tiling_count=report.tiling_count,
        forced={kind.value: _pairs(report.forced[kind]) for kind in kinds},
        frequencies={
            kind.value: [
                FrequencyPayload(tile=label.as_list(), frequency=Ratio.of(value))
                for label, value in sorted(report.frequencies[kind].items())
            ]
            for kind in kinds
        },
    )


def freq_payload(w: Permutation, tile: ValuePair, kind: PerimeterType, value: Fraction) -> FreqPayload:
    return FreqPayload(permutation=list(w.entries), tile=tile.as_list(), type=kind, frequency=Ratio.of(value))
