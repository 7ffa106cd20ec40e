"""SVG drawings of tilings.

Tiles are laid out by re-walking the canonical word with either the exact
integer directions or unit vectors fanned evenly through the lower half
plane, so every polygon has equal sides as in the usual pictures.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from src.elnitsky.errors import RenderWriteError
from src.elnitsky.forced import forced_tiles
from src.elnitsky.perm import ValuePair
from src.elnitsky.tiling import Tiling, strand_walk

logger = logging.getLogger(__name__)

Vector = Tuple[float, float]

PREAMBLE = """\
<?xml version="1.0" encoding="UTF-8" standalone="no"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="%(width).2f" height="%(height).2f" \
viewBox="%(min_x).3f %(min_y).3f %(width).3f %(height).3f">
<title>%(title)s</title>
"""

POSTAMBLE = "</svg>\n"

SHADE = "#cccccc"


@dataclass
class RenderOptions:
    equilateral: bool = True
    shade_forced: bool = False
    scale: float = 40.0
    output_path: Optional[Path] = None

    def __post_init__(self) -> None:
        if not self.scale > 0:
            raise ValueError(f"Scale must be positive, got {self.scale}.")


class _Canvas:
    """Collects SVG elements and the bounding box they need."""

    def __init__(self) -> None:
        self.min_x: Optional[float] = None
        self.max_x: Optional[float] = None
        self.min_y: Optional[float] = None
        self.max_y: Optional[float] = None
        self.commands: List[str] = []

    def require(self, x: float, y: float) -> None:
        if self.min_x is None:
            self.min_x = self.max_x = x
            self.min_y = self.max_y = y
        else:
            self.min_x = min(self.min_x, x)
            self.max_x = max(self.max_x, x)
            self.min_y = min(self.min_y, y)
            self.max_y = max(self.max_y, y)

    @staticmethod
    def _points(points: Iterable[Vector]) -> str:
        return " ".join(f"{x:.3f},{y:.3f}" for x, y in points)

    def polygon(self, points: Sequence[Vector], fill: str, label: str) -> None:
        for x, y in points:
            self.require(x, y)
        self.commands.append(
            f'<polygon points="{self._points(points)}" data-label="{label}" '
            f'style="fill:{fill};stroke:#000000;stroke-width:1" />'
        )

    def polyline(self, points: Sequence[Vector], width: float) -> None:
        for x, y in points:
            self.require(x, y)
        self.commands.append(
            f'<polyline points="{self._points(points)}" style="fill:none;stroke:#000000;stroke-width:{width}" />'
        )

    def dot(self, x: float, y: float, radius: float) -> None:
        self.require(x - radius, y - radius)
        self.require(x + radius, y + radius)
        self.commands.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{radius:.3f}" style="fill:#000000" />')

    def document(self, title: str) -> str:
        pad = max(self.max_x - self.min_x, self.max_y - self.min_y) * 0.05 + 1.0
        params = {
            "min_x": self.min_x - pad,
            "min_y": self.min_y - pad,
            "width": self.max_x - self.min_x + 2 * pad,
            "height": self.max_y - self.min_y + 2 * pad,
            "title": title,
        }
        return PREAMBLE % params + "\n".join(self.commands) + "\n" + POSTAMBLE


def equilateral_direction(i: int, n: int) -> Vector:
    angle = -math.pi / 2 + (i - (n + 1) / 2) * math.pi / (n + 1)
    return (math.cos(angle), math.sin(angle))


def _vector_field(t: Tiling, opts: RenderOptions) -> Callable[[int], Vector]:
    n = t.owner.n
    if opts.equilateral:
        table = [equilateral_direction(i, n) for i in range(1, n + 1)]
    else:
        table = [(float(x), float(y)) for x, y in t.embedding.directions]
    return lambda value: table[value - 1]


def render_tiling(t: Tiling, opts: RenderOptions, forced_labels: Optional[Iterable[ValuePair]] = None) -> str:
    """Return an SVG document with one polygon per tile of ``t``.

    ``forced_labels`` names the tiles to shade when ``opts.shade_forced`` is
    set; by default every tile forced for some perimeter type is shaded.
    """
    vector = _vector_field(t, opts)
    scale = opts.scale

    def to_svg(point: Vector) -> Vector:
        return (point[0] * scale, -point[1] * scale)

    shaded = set()
    if opts.shade_forced:
        if forced_labels is None:
            report = forced_tiles(t.owner)
            forced_labels = [label for labels in report.forced.values() for label in labels]
        shaded = set(forced_labels)

    canvas = _Canvas()
    for _row, first, second, corner in strand_walk(t.word, t.owner.n, vector):
        a, b = vector(first), vector(second)
        points = [
            corner,
            (corner[0] + a[0], corner[1] + a[1]),
            (corner[0] + a[0] + b[0], corner[1] + a[1] + b[1]),
            (corner[0] + b[0], corner[1] + b[1]),
        ]
        label = ValuePair.of(first, second)
        fill = SHADE if label in shaded else "#ffffff"
        canvas.polygon([to_svg(p) for p in points], fill, f"{label.low},{label.high}")

    w = t.owner
    left: List[Vector] = [(0.0, 0.0)]
    right: List[Vector] = [(0.0, 0.0)]
    for j in range(1, w.n + 1):
        step_left, step_right = vector(j), vector(w(j))
        left.append((left[-1][0] + step_left[0], left[-1][1] + step_left[1]))
        right.append((right[-1][0] + step_right[0], right[-1][1] + step_right[1]))
    canvas.polyline([to_svg(p) for p in left + list(reversed(right))], width=2)

    radius = scale * 0.08
    for vertex in (left[0], left[-1]):
        canvas.dot(*to_svg(vertex), radius)

    logger.debug("Rendered %d tiles for %s", len(t.tiles), w)
    return canvas.document(f"Tiling {list(t.word)} of {w}")


def write_svg(document: str, path: Path) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(document, encoding="utf-8")
    except OSError as exc:
        raise RenderWriteError(f"Cannot write {path}: {exc}") from exc
    return path
