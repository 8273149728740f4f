"""Finite discrete Hilbert transform workbench."""

from .core import Signal, forward_dht, inverse_dht, round_trip
from .estimator import HilbertTransformer
from .image import GrayImage, denormalize, image_forward_dht, normalize_for_display
from .io_formats import (
    WavAudio,
    pcm16_to_signal,
    read_csv_signal,
    read_pgm,
    read_wav,
    signal_to_pcm16,
    write_csv_signal,
    write_pgm,
    write_wav,
)
from .matrixform import (
    DhtMatrix,
    apply,
    build_forward_matrix,
    build_inverse_matrix,
    round_trip_operator,
)
from .metrics import ErrorReport, boundary_concentration, error_report, magnitude_spectrum
from .signals import GuardBand, SignalSpec, apply_guard, catalog_default_specs, generate
from .stego import (
    EmbedResult,
    FrameClock,
    ImperceptibilityReport,
    bits_to_bytes,
    bits_to_text,
    bytes_to_bits,
    embed,
    extract,
    imperceptibility_report,
    text_to_bits,
)

__version__ = "0.1.0"

__all__ = [
    "Signal",
    "forward_dht",
    "inverse_dht",
    "round_trip",
    "DhtMatrix",
    "apply",
    "build_forward_matrix",
    "build_inverse_matrix",
    "round_trip_operator",
    "GuardBand",
    "SignalSpec",
    "apply_guard",
    "catalog_default_specs",
    "generate",
    "ErrorReport",
    "error_report",
    "boundary_concentration",
    "magnitude_spectrum",
    "GrayImage",
    "image_forward_dht",
    "normalize_for_display",
    "denormalize",
    "FrameClock",
    "EmbedResult",
    "ImperceptibilityReport",
    "embed",
    "extract",
    "imperceptibility_report",
    "bits_to_text",
    "text_to_bits",
    "bits_to_bytes",
    "bytes_to_bits",
    "WavAudio",
    "read_wav",
    "write_wav",
    "signal_to_pcm16",
    "pcm16_to_signal",
    "read_pgm",
    "write_pgm",
    "read_csv_signal",
    "write_csv_signal",
    "HilbertTransformer",
    "__version__",
]
