"""Per-row transform of grayscale images.

Rows (scan lines) are the transform axis; columns are never transformed.
Each row is independent, so processing order cannot change results.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import forward_dht

__all__ = ["GrayImage", "image_forward_dht", "normalize_for_display", "denormalize"]


@dataclass(eq=False)
class GrayImage:
    """Row-major gray levels; real-valued in memory, 8-bit on disk."""

    pixels: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.pixels, dtype=np.float64)
        if p.ndim != 2 or p.size == 0:
            raise ValueError(f"image must be a non-empty 2-D array, got shape {p.shape}")
        if not np.all(np.isfinite(p)):
            raise ValueError("image contains non-finite pixels")
        self.pixels = p

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]


def image_forward_dht(img: GrayImage, parallel: bool = False) -> GrayImage:
    """Transform every row independently; output is real-valued.

    With parallel=True rows are processed by a thread pool; per-row purity
    makes the result bit-identical to the sequential path.
    """
    rows = list(img.pixels)
    if parallel:
        with ThreadPoolExecutor() as pool:
            out = list(pool.map(forward_dht, rows))
    else:
        out = [forward_dht(r) for r in rows]
    return GrayImage(pixels=np.vstack(out))


def normalize_for_display(img: GrayImage) -> tuple[GrayImage, float, float]:
    """Affine-map [min, max] to [0, 255]; constant input maps to mid-gray.

    Returns the 8-bit image plus the (min, max) pair needed to invert the
    mapping with :func:`denormalize`.
    """
    lo = float(img.pixels.min())
    hi = float(img.pixels.max())
    if hi == lo:
        return GrayImage(np.full_like(img.pixels, 128.0)), lo, hi
    scaled = (img.pixels - lo) * (255.0 / (hi - lo))
    return GrayImage(np.floor(scaled + 0.5)), lo, hi


def denormalize(img: GrayImage, lo: float, hi: float) -> GrayImage:
    """Invert :func:`normalize_for_display` given the recorded range."""
    if hi == lo:
        return GrayImage(np.full_like(img.pixels, lo))
    return GrayImage(lo + img.pixels * ((hi - lo) / 255.0))
