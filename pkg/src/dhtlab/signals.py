"""Deterministic test-signal generators and the 14-entry benchmark catalog.

Every generator is a pure function of its spec.  Catalog defaults are the
library's own desk-scale choices, tuned so the round-trip error study has
the documented directional structure (guarded rows below unguarded ones,
boundary-vanishing rows far below the plain sine row).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import diric

from .core import Signal

__all__ = [
    "GuardBand",
    "SignalSpec",
    "generate",
    "catalog_default_specs",
    "apply_guard",
    "KINDS",
]


@dataclass(frozen=True)
class GuardBand:
    """Forced-zero runs at the front and back of a signal."""

    front: int = 0
    back: int = 0

    def __post_init__(self):
        if self.front < 0 or self.back < 0:
            raise ValueError("guard widths must be non-negative")


@dataclass
class SignalSpec:
    kind: str
    n: int
    params: dict = field(default_factory=dict)
    guard: GuardBand | None = None
    label: str | None = None


def apply_guard(samples: np.ndarray, guard: GuardBand | None) -> np.ndarray:
    """Zero the guarded sample runs; idempotent for equal widths."""
    out = np.array(samples, dtype=np.float64, copy=True)
    if guard is not None:
        if guard.front:
            out[: guard.front] = 0.0
        if guard.back:
            out[-guard.back :] = 0.0
    return out


def _indices(n: int) -> np.ndarray:
    return np.arange(n, dtype=np.float64)


def _gen_sine(n, cycles=4.0, amplitude=1.0):
    return amplitude * np.sin(2.0 * np.pi * cycles * _indices(n) / n)


def _gen_cosine(n, cycles=4.0, amplitude=1.0):
    return amplitude * np.cos(2.0 * np.pi * cycles * _indices(n) / n)


def _gen_tangent(n, span=1.4, amplitude=1.0, clip=None):
    if span <= 0:
        raise ValueError("tangent span must be positive")
    points = np.linspace(-span, span, n)
    # distance from each sample point to the nearest pole pi/2 + m*pi
    u = points - np.pi / 2.0
    pole_dist = np.abs((u + np.pi / 2.0) % np.pi - np.pi / 2.0)
    if clip is None and pole_dist.min() < 1e-6:
        raise ValueError(
            "tangent sample points fall within 1e-6 of a pole; supply a clip bound"
        )
    raw = np.tan(points)
    if clip is not None:
        if clip <= 0:
            raise ValueError("clip bound must be positive")
        raw = np.clip(raw, -clip, clip)
    peak = np.abs(raw).max()
    return amplitude * raw / peak


def _gen_on_off(n, period=32, duty=0.5, amplitude=0.5):
    if period < 1:
        raise ValueError("period must be >= 1")
    if not 0.0 < duty < 1.0:
        raise ValueError("duty must be in (0, 1)")
    on_len = round(duty * period)
    phase = np.arange(n) % period
    return np.where(phase < on_len, amplitude, -amplitude)


def _gen_triangular(n, support=None, amplitude=1.0):
    # bipolar triangular pulse in the middle of the record: up to +amplitude,
    # through zero mid-record, down to -amplitude, exactly zero outside
    s = n // 2 if support is None else support
    if not 4 <= s <= n:
        raise ValueError("triangular support must be in [4, n]")
    a = (n - s) / 2.0
    xp = np.array([a, a + s / 4.0, a + s / 2.0, a + 3.0 * s / 4.0, a + s])
    fp = np.array([0.0, amplitude, 0.0, -amplitude, 0.0])
    return np.interp(_indices(n), xp, fp)


def _gen_sawtooth(n, period=32, amplitude=0.5):
    if period < 1:
        raise ValueError("period must be >= 1")
    phase = np.arange(n) % period
    return amplitude * (2.0 * phase / period - 1.0)


def _gen_gauss_sinusoid(n, cycles=4.0, sigma=None, amplitude=1.0):
    s = n / 8.0 if sigma is None else sigma
    if s <= 0:
        raise ValueError("sigma must be positive")
    k = _indices(n)
    center = (n - 1) / 2.0
    return amplitude * np.sin(2.0 * np.pi * cycles * k / n) * np.exp(
        -0.5 * ((k - center) / s) ** 2
    )


def _gen_dirichlet(n, order=7, amplitude=1.0):
    if order < 1:
        raise ValueError("order must be >= 1")
    x = -np.pi + 2.0 * np.pi * _indices(n) / n
    return amplitude * diric(x, int(order))


def _gen_pulse_train(n, period=64, width=4, amplitude=1.0):
    if period < 1:
        raise ValueError("period must be >= 1")
    if not 0 <= width <= period:
        raise ValueError("width must be in [0, period]")
    phase = np.arange(n) % period
    return np.where(phase < width, amplitude, 0.0)


def _gen_chirp(n, f0=0.5, f1=7.5, amplitude=1.0):
    t = _indices(n) / n
    return amplitude * np.sin(2.0 * np.pi * (f0 * t + 0.5 * (f1 - f0) * t * t))


def _gen_constant(n, value=1.0):
    return np.full(n, float(value))


def _gen_delta(n, position=0, amplitude=1.0):
    if not 0 <= position < n:
        raise ValueError("delta position out of range")
    x = np.zeros(n)
    x[position] = amplitude
    return x


def _gen_uniform_random(n, seed=None, amplitude=1.0):
    if seed is None:
        raise ValueError("uniform_random requires an explicit integer seed")
    rng = np.random.default_rng(int(seed))
    return rng.uniform(-amplitude, amplitude, n)


KINDS = {
    "sine": _gen_sine,
    "cosine": _gen_cosine,
    "tangent": _gen_tangent,
    "on_off": _gen_on_off,
    "triangular": _gen_triangular,
    "sawtooth": _gen_sawtooth,
    "gauss_sinusoid": _gen_gauss_sinusoid,
    "dirichlet": _gen_dirichlet,
    "pulse_train": _gen_pulse_train,
    "chirp": _gen_chirp,
    "constant": _gen_constant,
    "delta": _gen_delta,
    "uniform_random": _gen_uniform_random,
}

_INT_PARAMS = {"period", "width", "order", "position", "seed", "support"}


def _validate_params(kind: str, params: dict) -> dict:
    gen = KINDS[kind]
    allowed = set(gen.__code__.co_varnames[1 : gen.__code__.co_argcount])
    clean = {}
    for name, value in params.items():
        if name not in allowed:
            raise ValueError(f"unknown parameter {name!r} for kind {kind!r}")
        if value is None:
            continue
        if name in _INT_PARAMS:
            iv = int(value)
            if iv != value:
                raise ValueError(f"parameter {name!r} must be an integer, got {value!r}")
            clean[name] = iv
        else:
            fv = float(value)
            if not math.isfinite(fv):
                raise ValueError(f"parameter {name!r} must be finite, got {value!r}")
            clean[name] = fv
    return clean


def generate(spec: SignalSpec) -> Signal:
    """Generate the signal described by `spec`.

    Deterministic for a fixed spec (random kinds require an explicit
    seed).  Guard samples are exactly zero.  Raises ValueError on unknown
    kinds, unknown or non-finite parameters, invalid guard widths, and
    tangent specs that sample within 1e-6 of a pole without a clip bound.
    """
    if spec.kind not in KINDS:
        raise ValueError(f"unknown signal kind {spec.kind!r}")
    if spec.n < 1:
        raise ValueError("sample count must be >= 1")
    guard = spec.guard
    if guard is not None and guard.front + guard.back >= spec.n:
        raise ValueError("guard bands leave no samples")
    params = _validate_params(spec.kind, spec.params)
    samples = KINDS[spec.kind](spec.n, **params)
    samples = apply_guard(samples, guard)
    return Signal(samples=samples, label=spec.label or spec.kind)


def catalog_default_specs() -> list[SignalSpec]:
    """The 14 benchmark configurations, labels in fixed catalog order."""
    n = 256
    gb = GuardBand(front=n // 16, back=n // 16)
    return [
        SignalSpec("sine", n, label="Sine"),
        SignalSpec("sine", n, guard=gb, label="Sine with guard band"),
        SignalSpec("cosine", n, label="Cosine"),
        SignalSpec("cosine", n, guard=gb, label="Cosine with guard band"),
        SignalSpec("tangent", n, guard=gb, label="Tangent with guard band"),
        SignalSpec("on_off", n, label="On and Off"),
        SignalSpec("triangular", n, label="Triangular"),
        SignalSpec("sawtooth", n, label="Sawtooth"),
        SignalSpec("gauss_sinusoid", n, label="Gauss Sinusoidal"),
        SignalSpec("sawtooth", n, guard=gb, label="Sawtooth with guard band"),
        SignalSpec("dirichlet", n, label="Dirichlet"),
        SignalSpec("pulse_train", n, label="Pulse Train"),
        SignalSpec("pulse_train", n, guard=gb, label="Pulse Train with guard band"),
        SignalSpec("chirp", n, label="Chirp"),
    ]
