"""Exact, non-differentiable stroke rasterizer.

Strokes are drawn as a train of filled discs on a 256x256 binary canvas and
then box-averaged down to 64x64, which is what removes the aliasing a direct
64x64 drawing would show. The drawing loop samples the curve at t = i/T for
i = 0..T-1, so t = 1 itself is never stamped; reversal symmetry therefore
only holds in the large-T limit.
"""

from __future__ import annotations

import numpy as np

from .geometry import CanvasPoint, Stroke, StrokeSet, blend, denormalize_array

CANVAS_SIZE = 256
IMAGE_SIZE = 64
BLOCK = CANVAS_SIZE // IMAGE_SIZE
DEFAULT_STEPS = 512


def new_canvas() -> np.ndarray:
    return np.zeros((CANVAS_SIZE, CANVAS_SIZE), dtype=np.float32)


def _stamp(canvas: np.ndarray, x: float, y: float, w: float) -> None:
    # Closed-disc test at integer pixel centers; the bounding box clips the
    # disc at the canvas edges.
    i0 = max(int(np.ceil(y - w)), 0)
    i1 = min(int(np.floor(y + w)), CANVAS_SIZE - 1)
    j0 = max(int(np.ceil(x - w)), 0)
    j1 = min(int(np.floor(x + w)), CANVAS_SIZE - 1)
    if i0 > i1 or j0 > j1:
        return
    ii = np.arange(i0, i1 + 1, dtype=np.float64) - y
    jj = np.arange(j0, j1 + 1, dtype=np.float64) - x
    inside = ii[:, None] ** 2 + jj[None, :] ** 2 <= w * w
    block = canvas[i0 : i1 + 1, j0 : j1 + 1]
    block[inside] = 1.0


def stamp_disc(canvas: np.ndarray, center) -> np.ndarray:
    """Return a copy of canvas with the disc at center set to ink (1.0).

    Pixel (i, j) turns on iff (i - y)^2 + (j - x)^2 <= w^2; everything else
    is left untouched.
    """
    if not isinstance(center, CanvasPoint):
        center = CanvasPoint(*center)
    if canvas.shape != (CANVAS_SIZE, CANVAS_SIZE):
        raise ValueError(f"canvas must be {CANVAS_SIZE}x{CANVAS_SIZE}, got {canvas.shape}")
    out = canvas.copy()
    _stamp(out, center.x, center.y, center.w)
    return out


def downsample(canvas: np.ndarray) -> np.ndarray:
    """Box-average 4x4 blocks of the canvas into a 64x64 image."""
    if canvas.shape != (CANVAS_SIZE, CANVAS_SIZE):
        raise ValueError(f"canvas must be {CANVAS_SIZE}x{CANVAS_SIZE}, got {canvas.shape}")
    return canvas.reshape(IMAGE_SIZE, BLOCK, IMAGE_SIZE, BLOCK).mean(axis=(1, 3))


def rasterize_params(params, steps: int = DEFAULT_STEPS) -> np.ndarray:
    """Rasterize a flat 9-parameter stroke into a 64x64 image in [0, 1]."""
    if int(steps) != steps or steps < 2:
        raise ValueError(f"step count must be an integer >= 2, got {steps!r}")
    steps = int(steps)
    pts = denormalize_array(params)
    ts = np.arange(steps, dtype=np.float64) / steps
    xs = blend(pts[0, 0], pts[1, 0], pts[2, 0], ts)
    ys = blend(pts[0, 1], pts[1, 1], pts[2, 1], ts)
    ws = blend(pts[0, 2], pts[1, 2], pts[2, 2], ts)
    canvas = new_canvas()
    for x, y, w in zip(xs.tolist(), ys.tolist(), ws.tolist()):
        _stamp(canvas, x, y, w)
    return downsample(canvas)


def rasterize_stroke(stroke, steps: int = DEFAULT_STEPS) -> np.ndarray:
    """Rasterize a Stroke (or anything from_array accepts) to 64x64."""
    if isinstance(stroke, Stroke):
        params = stroke.to_array()
    else:
        params = stroke
    return rasterize_params(params, steps)


def compose(images) -> np.ndarray:
    """Overlay per-stroke images by pixelwise maximum."""
    images = list(images)
    if not images:
        raise ValueError("compose needs at least one image")
    for img in images:
        if img.shape != (IMAGE_SIZE, IMAGE_SIZE):
            raise ValueError(f"expected {IMAGE_SIZE}x{IMAGE_SIZE} images, got {img.shape}")
    return np.maximum.reduce(images)


def render_strokeset(strokes, steps: int = DEFAULT_STEPS) -> np.ndarray:
    """Rasterize and overlay a 4-stroke character; accepts (4, 9) arrays."""
    if isinstance(strokes, StrokeSet):
        arrays = strokes.to_array()
    else:
        arrays = np.asarray(strokes, dtype=np.float64).reshape(-1, 9)
    return compose([rasterize_params(row, steps) for row in arrays])


def binarize(img: np.ndarray, threshold: float = 0.5) -> np.ndarray:
    return img > threshold


def iou(a: np.ndarray, b: np.ndarray, threshold: float = 0.5) -> float:
    """Intersection-over-union of the binarized ink masks of two images."""
    ma = binarize(np.asarray(a), threshold)
    mb = binarize(np.asarray(b), threshold)
    union = np.logical_or(ma, mb).sum()
    if union == 0:
        return 1.0
    return float(np.logical_and(ma, mb).sum() / union)
