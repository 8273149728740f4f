"""Bit-exact file formats: mono PCM16 WAV, PGM images, CSV signals and reports.

Readers reject malformed input with the byte offset of the problem instead
of guessing.  Writers emit one canonical form, so write(read(x)) is a fixed
point after at most one rewrite.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .core import Signal
from .image import GrayImage
from .metrics import ErrorReport

__all__ = [
    "WavAudio",
    "read_wav",
    "write_wav",
    "signal_to_pcm16",
    "pcm16_to_signal",
    "read_pgm",
    "write_pgm",
    "read_csv_signal",
    "write_csv_signal",
    "write_error_report_csv",
]


# -- WAV ------------------------------------------------------------------

@dataclass
class WavAudio:
    """Mono 16-bit PCM audio."""

    sample_rate: int
    samples: np.ndarray  # int16

    def __post_init__(self):
        s = np.asarray(self.samples)
        if s.dtype != np.int16:
            raise ValueError("samples must be int16")
        if s.ndim != 1:
            raise ValueError("samples must be 1-D")
        if self.sample_rate < 1:
            raise ValueError("sample_rate must be positive")
        self.samples = s


def _need(data: bytes, offset: int, count: int, what: str) -> bytes:
    if offset + count > len(data):
        raise ValueError(f"truncated file: expected {what} at byte {offset}")
    return data[offset : offset + count]


def read_wav(data: bytes) -> WavAudio:
    """Parse a RIFF/WAVE container holding mono PCM16; skip unknown chunks."""
    if _need(data, 0, 4, "RIFF magic") != b"RIFF":
        raise ValueError("not a RIFF file: bad magic at byte 0")
    if _need(data, 8, 4, "WAVE form type") != b"WAVE":
        raise ValueError("not a WAVE file: bad form type at byte 8")
    pos = 12
    fmt = None
    while pos + 8 <= len(data):
        cid = _need(data, pos, 4, "chunk id")
        (size,) = struct.unpack_from("<I", data, pos + 4)
        body = pos + 8
        if cid == b"fmt ":
            if size < 16:
                raise ValueError(f"fmt chunk at byte {pos} declares {size} bytes, need 16")
            raw = _need(data, body, 16, "fmt chunk body")
            codec, channels, rate, _, _, bits = struct.unpack("<HHIIHH", raw)
            if codec != 1:
                raise ValueError(f"unsupported audio format code {codec} at byte {body}")
            if channels != 1:
                raise ValueError(f"only mono is supported, got {channels} channels at byte {body + 2}")
            if bits != 16:
                raise ValueError(f"only 16-bit samples are supported, got {bits} at byte {body + 14}")
            fmt = rate
        elif cid == b"data":
            if fmt is None:
                raise ValueError(f"data chunk at byte {pos} precedes fmt chunk")
            raw = _need(data, body, size, "data chunk body")
            if size % 2 != 0:
                raise ValueError(f"data chunk at byte {pos} has odd byte count {size}")
            samples = np.frombuffer(raw, dtype="<i2").astype(np.int16)
            return WavAudio(sample_rate=fmt, samples=samples)
        # unknown chunk: skip, respecting RIFF word alignment
        pos = body + size + (size % 2)
        continue
    raise ValueError("no data chunk found")


def write_wav(audio: WavAudio) -> bytes:
    """Canonical minimal RIFF: fmt then data, nothing else."""
    payload = audio.samples.astype("<i2").tobytes()
    hdr = struct.pack(
        "<4sI4s4sIHHIIHH4sI",
        b"RIFF",
        36 + len(payload),
        b"WAVE",
        b"fmt ",
        16,
        1,  # PCM
        1,  # mono
        audio.sample_rate,
        audio.sample_rate * 2,
        2,
        16,
        b"data",
        len(payload),
    )
    return hdr + payload


def signal_to_pcm16(samples) -> tuple[np.ndarray, int]:
    """Scale [-1, 1) floats to int16, rounding half away from zero.

    Out-of-range values clamp to the int16 limits; the count of clamped
    samples is returned so callers can report it.
    """
    x = np.asarray(samples, dtype=np.float64)
    v = x * 32768.0
    r = np.copysign(np.floor(np.abs(v) + 0.5), v)
    clipped = int(((r < -32768.0) | (r > 32767.0)).sum())
    r = np.clip(r, -32768.0, 32767.0)
    return r.astype(np.int16), clipped


def pcm16_to_signal(samples: np.ndarray) -> np.ndarray:
    return np.asarray(samples, dtype=np.float64) / 32768.0


# -- PGM ------------------------------------------------------------------

def _pgm_tokens(data: bytes, count: int, start: int):
    """Read `count` whitespace-separated header tokens, honoring # comments.

    Returns (tokens, next_offset); raises with the byte offset on failure.
    """
    tokens = []
    pos = start
    while len(tokens) < count:
        if pos >= len(data):
            raise ValueError(f"truncated header: expected value at byte {pos}")
        ch = data[pos : pos + 1]
        if ch.isspace():
            pos += 1
        elif ch == b"#":
            while pos < len(data) and data[pos : pos + 1] not in (b"\n", b""):
                pos += 1
        else:
            begin = pos
            while pos < len(data) and not data[pos : pos + 1].isspace() and data[pos : pos + 1] != b"#":
                pos += 1
            tok = data[begin:pos]
            if not tok.isdigit():
                raise ValueError(f"malformed header token {tok!r} at byte {begin}")
            tokens.append(int(tok))
    return tokens, pos


def read_pgm(data: bytes) -> GrayImage:
    """Parse P2 (ASCII) or P5 (binary) PGM with maxval <= 255."""
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise ValueError(f"not a PGM file: bad magic {magic!r} at byte 0")
    (width, height, maxval), pos = _pgm_tokens(data, 3, 2)
    if width < 1 or height < 1:
        raise ValueError(f"invalid dimensions {width}x{height} in header")
    if maxval > 255 or maxval < 1:
        raise ValueError(f"unsupported maxval {maxval} (must be 1..255)")
    if magic == b"P5":
        if not data[pos : pos + 1].isspace():
            raise ValueError(f"expected whitespace after maxval at byte {pos}")
        pos += 1
        raw = data[pos : pos + width * height]
        if len(raw) < width * height:
            raise ValueError(f"short pixel data: expected {width * height} bytes at byte {pos}")
        pixels = np.frombuffer(raw, dtype=np.uint8).astype(np.float64)
    else:
        values = []
        while len(values) < width * height:
            got, pos = _pgm_tokens(data, 1, pos)
            values.append(got[0])
        pixels = np.array(values, dtype=np.float64)
    if pixels.max() > maxval:
        raise ValueError(f"pixel value {int(pixels.max())} exceeds maxval {maxval}")
    return GrayImage(pixels=pixels.reshape(height, width))


def write_pgm(img: GrayImage, binary: bool = True) -> bytes:
    """Canonical PGM, maxval 255; requires pixels already in [0, 255]."""
    p = img.pixels
    r = np.floor(p + 0.5)
    if r.min() < 0 or r.max() > 255:
        raise ValueError("pixels outside [0, 255]; normalize before writing")
    header = f"{'P5' if binary else 'P2'}\n{img.width} {img.height}\n255\n"
    if binary:
        return header.encode("ascii") + r.astype(np.uint8).tobytes()
    body = "\n".join(" ".join(str(int(v)) for v in row) for row in r)
    return header.encode("ascii") + body.encode("ascii") + b"\n"


# -- CSV ------------------------------------------------------------------

def write_csv_signal(sig: Signal, out) -> None:
    """Label line, then one sample per line at 17 significant digits."""
    own = isinstance(out, (str, bytes)) or hasattr(out, "__fspath__")
    fh = open(out, "w", encoding="utf-8", newline="") if own else out
    try:
        fh.write(sig.label + "\n")
        for v in sig.samples:
            fh.write(format(v, ".16e"))
            fh.write("\n")
    finally:
        if own:
            fh.close()


def read_csv_signal(src) -> Signal:
    """Inverse of write_csv_signal; the first line is always the label."""
    own = isinstance(src, (str, bytes)) or hasattr(src, "__fspath__")
    fh = open(src, "r", encoding="utf-8") if own else src
    try:
        lines = fh.read().splitlines()
    finally:
        if own:
            fh.close()
    if not lines:
        raise ValueError("empty signal file")
    label = lines[0].strip()
    values = []
    for ln, line in enumerate(lines[1:], start=2):
        text = line.strip()
        if not text:
            continue
        try:
            values.append(float(text))
        except ValueError:
            raise ValueError(f"line {ln}: not a number: {text!r}") from None
    if not values:
        raise ValueError("signal file contains no samples")
    return Signal(samples=np.array(values), label=label)


def write_error_report_csv(report: ErrorReport, out) -> None:
    """index,squared_error rows, then average and rms footer rows."""
    own = isinstance(out, (str, bytes)) or hasattr(out, "__fspath__")
    fh = open(out, "w", encoding="utf-8", newline="") if own else out
    try:
        fh.write("index,squared_error\n")
        for i, v in enumerate(report.per_sample):
            fh.write(f"{i},{format(v, '.16e')}\n")
        fh.write(f"average_sq_error,{format(report.average_sq_error, '.16e')}\n")
        fh.write(f"rms,{format(report.rms, '.16e')}\n")
    finally:
        if own:
            fh.close()
