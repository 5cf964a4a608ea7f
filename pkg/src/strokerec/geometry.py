"""Weighted quadratic Bezier stroke geometry.

A stroke is a quadratic Bezier curve whose three control points each carry a
radius, so the curve traces a variable-width mark. Control points live in
normalized [0,1] coordinates; drawing happens on a 256x256 canvas where pixel
centers sit at integer coordinates 0..255 and radii span [2, 32].

The canonical flattened parameter order, used for network outputs, files and
the CLI alike, is (x0, y0, w0, x1, y1, w1, x2, y2, w2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PARAMS_PER_STROKE = 9
STROKES_PER_CHAR = 4

COORD_MAX = 255.0
RADIUS_MIN = 2.0
RADIUS_MAX = 32.0


def _check_range(name: str, value: float, lo: float, hi: float) -> None:
    if not (lo <= value <= hi):
        raise ValueError(f"{name} must lie in [{lo:g}, {hi:g}], got {value!r}")


@dataclass(frozen=True)
class WeightedPoint:
    """Normalized control point: coordinates and radius all in [0, 1]."""

    x: float
    y: float
    w: float

    def __post_init__(self) -> None:
        _check_range("x", self.x, 0.0, 1.0)
        _check_range("y", self.y, 0.0, 1.0)
        _check_range("w", self.w, 0.0, 1.0)


@dataclass(frozen=True)
class CanvasPoint:
    """Denormalized point: x, y in [0, 255], radius w in [2, 32]."""

    x: float
    y: float
    w: float

    def __post_init__(self) -> None:
        _check_range("x", self.x, 0.0, COORD_MAX)
        _check_range("y", self.y, 0.0, COORD_MAX)
        _check_range("w", self.w, RADIUS_MIN, RADIUS_MAX)


@dataclass(frozen=True)
class Stroke:
    """One weighted quadratic Bezier stroke: start, control, end point."""

    p0: WeightedPoint
    p1: WeightedPoint
    p2: WeightedPoint

    @classmethod
    def from_array(cls, params) -> "Stroke":
        arr = validate_params(params)
        pts = [WeightedPoint(*arr[3 * k : 3 * k + 3]) for k in range(3)]
        return cls(*pts)

    def to_array(self) -> np.ndarray:
        return np.array(
            [c for p in (self.p0, self.p1, self.p2) for c in (p.x, p.y, p.w)],
            dtype=np.float64,
        )

    def reversed(self) -> "Stroke":
        return Stroke(self.p2, self.p1, self.p0)


@dataclass(frozen=True)
class StrokeSet:
    """An ordered group of exactly four strokes representing one character."""

    strokes: tuple

    def __post_init__(self) -> None:
        if len(self.strokes) != STROKES_PER_CHAR:
            raise ValueError(
                f"a stroke set holds exactly {STROKES_PER_CHAR} strokes, "
                f"got {len(self.strokes)}"
            )

    @classmethod
    def from_array(cls, params) -> "StrokeSet":
        arr = np.asarray(params, dtype=np.float64).reshape(-1)
        if arr.size != STROKES_PER_CHAR * PARAMS_PER_STROKE:
            raise ValueError(f"expected 36 parameters, got {arr.size}")
        strokes = tuple(
            Stroke.from_array(arr[9 * k : 9 * k + 9]) for k in range(STROKES_PER_CHAR)
        )
        return cls(strokes)

    def to_array(self) -> np.ndarray:
        return np.stack([s.to_array() for s in self.strokes])


def validate_params(params) -> np.ndarray:
    """Return params as a float64 (9,) array, checking the [0,1] range."""
    arr = np.asarray(params, dtype=np.float64).reshape(-1)
    if arr.size != PARAMS_PER_STROKE:
        raise ValueError(f"expected 9 stroke parameters, got {arr.size}")
    if not np.all((arr >= 0.0) & (arr <= 1.0)):
        raise ValueError("stroke parameters must lie in [0, 1]")
    return arr


def denormalize(p: WeightedPoint) -> CanvasPoint:
    """Map a normalized point to canvas space: affine in every component."""
    return CanvasPoint(
        COORD_MAX * p.x,
        COORD_MAX * p.y,
        RADIUS_MIN + (RADIUS_MAX - RADIUS_MIN) * p.w,
    )


def denormalize_array(params) -> np.ndarray:
    """Denormalize a flat 9-vector into a (3, 3) array of (x, y, w) rows."""
    arr = validate_params(params).reshape(3, 3)
    out = np.empty_like(arr)
    out[:, 0] = COORD_MAX * arr[:, 0]
    out[:, 1] = COORD_MAX * arr[:, 1]
    out[:, 2] = RADIUS_MIN + (RADIUS_MAX - RADIUS_MIN) * arr[:, 2]
    return out


def blend(p0, p1, p2, t):
    """Quadratic Bezier blend (1-t)^2 p0 + 2(1-t)t p1 + t^2 p2.

    Accepts scalars or arrays; t may be an array for vectorized sampling.
    """
    omt = 1.0 - t
    return omt * omt * p0 + 2.0 * omt * t * p1 + t * t * p2


def eval_curve(stroke: Stroke, t: float) -> CanvasPoint:
    """Evaluate the denormalized curve (x, y and radius) at parameter t."""
    if not (0.0 <= t <= 1.0):
        raise ValueError(f"curve parameter t must lie in [0, 1], got {t!r}")
    a = denormalize(stroke.p0)
    b = denormalize(stroke.p1)
    c = denormalize(stroke.p2)
    return CanvasPoint(
        blend(a.x, b.x, c.x, t),
        blend(a.y, b.y, c.y, t),
        blend(a.w, b.w, c.w, t),
    )
