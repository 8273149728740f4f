"""Reconstruction-error measurement and a deliberately naive spectrum.

average_sq_error is the literal sum-of-squared-differences over N; rms is
its square root.  Both are exposed because published error tables of this
kind are ambiguous about the root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import as_samples

__all__ = ["ErrorReport", "error_report", "boundary_concentration", "magnitude_spectrum"]


@dataclass
class ErrorReport:
    per_sample: np.ndarray  # squared differences, one per sample
    average_sq_error: float
    rms: float
    argmax_index: int


def error_report(original, reconstructed) -> ErrorReport:
    """Per-sample squared differences plus their average, root, and argmax.

    Ties in the per-sample maximum resolve to the lowest index.
    """
    f = as_samples(original)
    g = as_samples(reconstructed)
    if f.size != g.size:
        raise ValueError(f"length mismatch: {f.size} vs {g.size}")
    per = (f - g) ** 2
    avg = float(per.sum() / per.size)
    return ErrorReport(
        per_sample=per,
        average_sq_error=avg,
        rms=math.sqrt(avg),
        argmax_index=int(per.argmax()),
    )


def boundary_concentration(report: ErrorReport, fraction: float = 0.1) -> bool:
    """True when the worst sample sits in the first or last fraction of indices."""
    if not 0.0 < fraction <= 0.5:
        raise ValueError("fraction must be in (0, 0.5]")
    n = report.per_sample.size
    edge = math.ceil(fraction * n)
    return report.argmax_index < edge or report.argmax_index >= n - edge


def magnitude_spectrum(f) -> np.ndarray:
    """|DFT| by direct O(N^2) evaluation.

    Intentionally not an FFT: the workbench studies the plain transform
    definitions, and N stays at desk scale.
    """
    x = as_samples(f)
    n = x.size
    k = np.arange(n)
    basis = np.exp(-2j * np.pi * np.outer(k, k) / n)
    return np.abs(basis @ x.astype(complex))
