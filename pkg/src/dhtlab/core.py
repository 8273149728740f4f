"""Direct-summation form of the finite discrete Hilbert transform.

The forward transform of a length-N sequence f is

    g(k) = (2/pi) * sum_{n : (k - n) odd} f(n) / (k - n),   n in 0..N-1

and the inverse applies the same parity-restricted kernel with a leading
minus sign.  Only opposite-parity index pairs contribute; same-parity
terms do not exist in the sum (they are not zero-valued terms, there is
simply no summand).  Both directions are truncated to the indices
actually present in the input, which makes them exactly equal to the
explicit matrix operators in :mod:`dhtlab.matrixform`.

Summation runs in ascending index order with plain accumulation, so
results are bit-identical across runs for identical input.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

TWO_OVER_PI = 2.0 / np.pi

__all__ = ["Signal", "forward_dht", "inverse_dht", "round_trip", "TWO_OVER_PI"]


def as_samples(values) -> np.ndarray:
    """Validate and convert input to a 1-D float64 sample array.

    Accepts any array-like of reals, or a :class:`Signal`.  Rejects empty
    input, non-finite values, and inputs with more than one dimension.
    """
    if isinstance(values, Signal):
        return values.samples
    x = np.asarray(values, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError(f"expected a 1-D sequence of samples, got shape {x.shape}")
    if x.size == 0:
        raise ValueError("signal must contain at least one sample")
    if not np.all(np.isfinite(x)):
        raise ValueError("signal contains non-finite samples")
    return x


@dataclass(eq=False)
class Signal:
    """A finite real-valued sequence with a display label.

    Parameters
    ----------
    samples : array-like
        The sample values; validated to 1-D, non-empty, finite.
    label : str
        Free text carried through transforms and files, e.g. a
        generator name.
    origin_index : int
        Index of the first sample.  Fixed at 0 in this library; the field
        exists so that positions in `samples` read directly as the k and n
        of the transform kernel.
    """

    samples: np.ndarray
    label: str = ""
    origin_index: int = 0
    n: int = field(init=False)

    def __post_init__(self):
        if isinstance(self.samples, Signal):
            raise TypeError("samples must be an array, not a Signal")
        self.samples = as_samples(self.samples)
        if self.origin_index != 0:
            raise ValueError("origin_index must be 0")
        self.n = self.samples.size


def _parity_kernel_sum(x: np.ndarray, sign: float) -> np.ndarray:
    """Apply sign * (2/pi) * sum f(n)/(k-n) over opposite-parity n.

    The cumulative-sum accumulation is equivalent to a plain ascending
    loop per output element: masked (same-parity) terms are +0.0 and
    adding +0.0 never changes a partial sum.
    """
    n = x.size
    idx = np.arange(n)
    diff = idx[:, None] - idx[None, :]
    odd = diff % 2 != 0
    denom = np.where(odd, diff, 1)  # placeholder 1 avoids 0-division; masked out below
    terms = np.where(odd, x[None, :] / denom, 0.0)
    return sign * TWO_OVER_PI * np.cumsum(terms, axis=1)[:, -1]


def forward_dht(f) -> np.ndarray:
    """Forward finite discrete Hilbert transform.

    Parameters
    ----------
    f : array-like or Signal
        Input samples, length N >= 1.

    Returns
    -------
    numpy.ndarray
        g with g[k] = (2/pi) * sum over opposite-parity n of f[n]/(k-n).
        Length N.  For N=1 there is no opposite-parity partner and the
        result is [0.0].
    """
    return _parity_kernel_sum(as_samples(f), 1.0)


def inverse_dht(g) -> np.ndarray:
    """Inverse finite discrete Hilbert transform.

    f[n] = -(2/pi) * sum over opposite-parity k of g[k]/(n-k), truncated
    to the indices present in the input.  Same validation and ordering
    guarantees as :func:`forward_dht`.
    """
    return _parity_kernel_sum(as_samples(g), -1.0)


def round_trip(f) -> np.ndarray:
    """inverse_dht(forward_dht(f)), the truncation-error study operator."""
    return inverse_dht(forward_dht(f))
