"""Frame-clocked information hiding: transmit each frame either verbatim
(bit 0) or replaced by its forward transform (bit 1).

Extraction is informed: the receiver holds the cover and decides per frame
which of the two candidates the received frame is closer to.  Only frames
with enough energy AND a transform that actually differs from the frame
are eligible to carry data; everything else passes through untouched.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import as_samples, forward_dht
from .metrics import magnitude_spectrum

__all__ = [
    "FrameClock",
    "EmbedResult",
    "ImperceptibilityReport",
    "embed",
    "extract",
    "imperceptibility_report",
    "default_energy_threshold",
    "bits_to_text",
    "text_to_bits",
    "bits_to_bytes",
    "bytes_to_bits",
]

# below this, forward_dht(frame) == frame for decoding purposes
_DHT_DISTINCT_TOL = 1e-12


@dataclass(frozen=True)
class FrameClock:
    """Shared segmentation: fixed frame length starting at `offset`.

    Samples before the offset and any trailing partial frame never carry
    data.  Frames are numbered 0, 1, ... from the offset.
    """

    frame_len: int
    offset: int = 0

    def __post_init__(self):
        if self.frame_len < 8:
            raise ValueError("frame_len must be >= 8")
        if self.offset < 0:
            raise ValueError("offset must be non-negative")

    def slices(self, n: int) -> list[slice]:
        out = []
        start = self.offset
        while start + self.frame_len <= n:
            out.append(slice(start, start + self.frame_len))
            start += self.frame_len
        return out


@dataclass
class EmbedResult:
    stego: np.ndarray
    frames_used: int
    skipped_frames: list[int] = field(default_factory=list)


@dataclass
class ImperceptibilityReport:
    """Per-frame spectrum deviation between cover and stego.

    Deviations are per-bin |stego - cover| magnitudes normalized by the
    cover frame's peak magnitude; interior bins exclude DC and (for even
    frame lengths) Nyquist.  peak_bin is the relative change at the cover's
    strongest bin.  Both are invariant under common amplitude scaling.
    """

    max_interior: np.ndarray
    peak_bin: np.ndarray

    @property
    def worst_interior(self) -> float:
        return float(self.max_interior.max()) if self.max_interior.size else 0.0


def default_energy_threshold(clock: FrameClock) -> float:
    return 1e-6 * clock.frame_len


def _validate_bits(bits) -> np.ndarray:
    b = np.asarray(bits)
    if b.ndim != 1:
        raise ValueError("bits must be a 1-D sequence")
    if b.size and not np.all((b == 0) | (b == 1)):
        raise ValueError("bits must contain only 0 and 1")
    return b.astype(np.int64)


def _eligible(frame: np.ndarray, threshold: float):
    """Return (eligible, dht_of_frame); the transform is reused by callers."""
    if float((frame**2).sum()) < threshold:
        return False, None
    g = forward_dht(frame)
    if np.abs(g - frame).max() <= _DHT_DISTINCT_TOL:
        return False, g
    return True, g


def embed(cover, bits, clock: FrameClock, energy_threshold: float | None = None) -> EmbedResult:
    """Hide `bits` in `cover` under the given frame clock.

    Eligible frames consume one bit each, in order: bit 1 replaces the
    frame with its forward transform, bit 0 leaves it untouched.
    Ineligible frames are listed in skipped_frames and carry nothing.
    Raises ValueError when the cover has fewer eligible frames than bits.
    """
    x = as_samples(cover)
    b = _validate_bits(bits)
    threshold = default_energy_threshold(clock) if energy_threshold is None else energy_threshold
    stego = x.copy()
    used = 0
    skipped = []
    for index, sl in enumerate(clock.slices(x.size)):
        frame = x[sl]
        ok, g = _eligible(frame, threshold)
        if not ok:
            skipped.append(index)
            continue
        if used < b.size:
            if b[used] == 1:
                stego[sl] = g
            used += 1
    if used < b.size:
        raise ValueError(
            f"insufficient capacity: {b.size} bits but only {used} eligible frames"
        )
    return EmbedResult(stego=stego, frames_used=used, skipped_frames=skipped)


def extract(
    stego,
    cover,
    clock: FrameClock,
    energy_threshold: float | None = None,
    count: int | None = None,
) -> np.ndarray:
    """Recover one bit per eligible frame by informed discrimination.

    Per frame: d0 = distance to the cover frame, d1 = distance to its
    forward transform; emit 1 iff d1 < d0 (ties read as 0).  `count`
    truncates the result to the first `count` bits.
    """
    s = as_samples(stego)
    c = as_samples(cover)
    if s.size != c.size:
        raise ValueError(f"length mismatch: stego {s.size} vs cover {c.size}")
    threshold = default_energy_threshold(clock) if energy_threshold is None else energy_threshold
    out = []
    for sl in clock.slices(c.size):
        frame = c[sl]
        ok, g = _eligible(frame, threshold)
        if not ok:
            continue
        received = s[sl]
        d0 = float(((received - frame) ** 2).sum())
        d1 = float(((received - g) ** 2).sum())
        out.append(1 if d1 < d0 else 0)
    bits = np.array(out, dtype=np.int64)
    if count is not None:
        bits = bits[:count]
    return bits


def imperceptibility_report(cover, stego, clock: FrameClock) -> ImperceptibilityReport:
    """Quantify how much each frame's magnitude spectrum moved."""
    c = as_samples(cover)
    s = as_samples(stego)
    if s.size != c.size:
        raise ValueError(f"length mismatch: stego {s.size} vs cover {c.size}")
    n = clock.frame_len
    interior = np.ones(n, dtype=bool)
    interior[0] = False
    if n % 2 == 0:
        interior[n // 2] = False
    max_interior = []
    peak_bin = []
    for sl in clock.slices(c.size):
        mc = magnitude_spectrum(c[sl])
        ms = magnitude_spectrum(s[sl])
        peak = float(mc.max())
        if peak == 0.0:
            # silent cover frame: ineligible, stego passes it through
            max_interior.append(0.0 if np.array_equal(ms, mc) else np.inf)
            peak_bin.append(0.0)
            continue
        dev = np.abs(ms - mc) / peak
        max_interior.append(float(dev[interior].max()))
        pb = int(mc.argmax())
        peak_bin.append(float(abs(ms[pb] - mc[pb]) / mc[pb]))
    return ImperceptibilityReport(
        max_interior=np.array(max_interior),
        peak_bin=np.array(peak_bin),
    )


def bits_to_text(bits) -> str:
    """Serialize bits as one line of '0'/'1' characters."""
    b = _validate_bits(bits)
    return "".join(str(int(v)) for v in b) + "\n"


def text_to_bits(text: str) -> np.ndarray:
    """Parse '0'/'1' characters, ignoring all whitespace."""
    stripped = "".join(text.split())
    bad = set(stripped) - {"0", "1"}
    if bad:
        raise ValueError(f"bit text contains invalid characters: {sorted(bad)}")
    return np.array([int(ch) for ch in stripped], dtype=np.int64)


def bits_to_bytes(bits) -> bytes:
    """Pack bits MSB-first, zero-padding the final byte."""
    b = _validate_bits(bits)
    return np.packbits(b.astype(np.uint8)).tobytes()


def bytes_to_bits(data: bytes) -> np.ndarray:
    """Unpack bytes MSB-first; yields a multiple of 8 bits."""
    return np.unpackbits(np.frombuffer(data, dtype=np.uint8)).astype(np.int64)
