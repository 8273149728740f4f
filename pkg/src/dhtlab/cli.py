"""Command-line workbench.

Subcommands: gen, transform, roundtrip, bench, chirp-sweep, stego-embed,
stego-extract, image-dht.  Data goes to stdout or files; diagnostics go to
stderr; exit code 0 means the requested contract was satisfied.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import Signal, forward_dht, inverse_dht, round_trip
from .image import GrayImage, image_forward_dht, normalize_for_display
from .io_formats import (
    pcm16_to_signal,
    read_csv_signal,
    read_pgm,
    read_wav,
    signal_to_pcm16,
    write_csv_signal,
    write_error_report_csv,
    write_pgm,
    write_wav,
    WavAudio,
)
from .metrics import boundary_concentration, error_report
from .signals import GuardBand, SignalSpec, catalog_default_specs, generate
from .stego import (
    FrameClock,
    bits_to_bytes,
    bits_to_text,
    bytes_to_bits,
    embed,
    extract,
    text_to_bits,
)

__all__ = ["main", "BenchRow", "bench_rows", "chirp_sweep_rows"]


@dataclass
class BenchRow:
    sno: int
    label: str
    avg_sq_error: float
    rms: float
    boundary_max: bool


def bench_rows(parallel: bool = False) -> list[BenchRow]:
    """Round-trip error table for the 14-entry catalog, in catalog order."""

    def one(item):
        sno, spec = item
        sig = generate(spec)
        rep = error_report(sig.samples, round_trip(sig.samples))
        return BenchRow(
            sno=sno,
            label=sig.label,
            avg_sq_error=rep.average_sq_error,
            rms=rep.rms,
            boundary_max=boundary_concentration(rep, 0.1),
        )

    items = list(enumerate(catalog_default_specs(), start=1))
    if parallel:
        with ThreadPoolExecutor() as pool:
            return list(pool.map(one, items))
    return [one(item) for item in items]


def chirp_sweep_rows(n_list, f0_list, f1_list):
    """Round-trip error over a chirp parameter grid (f1 > f0 only)."""
    rows = []
    for n in n_list:
        for f0 in f0_list:
            for f1 in f1_list:
                if f1 <= f0:
                    continue
                sig = generate(SignalSpec("chirp", n, {"f0": f0, "f1": f1}))
                rep = error_report(sig.samples, round_trip(sig.samples))
                rows.append((n, f0, f1, rep.average_sq_error, rep.rms))
    return rows


def _out_text(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _write_bytes(path: str, payload: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(payload)
    else:
        with open(path, "wb") as fh:
            fh.write(payload)


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


_GEN_FLOAT_FLAGS = ("cycles", "amplitude", "duty", "sigma", "f0", "f1", "span", "clip", "value")
_GEN_INT_FLAGS = ("period", "width", "order", "position", "seed", "support")


def cmd_gen(args) -> int:
    params = {}
    for name in _GEN_FLOAT_FLAGS + _GEN_INT_FLAGS:
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    guard = None
    front = args.guard if args.guard_front is None else args.guard_front
    back = args.guard if args.guard_back is None else args.guard_back
    if front or back:
        guard = GuardBand(front=front or 0, back=back or 0)
    sig = generate(SignalSpec(args.kind, args.n, params, guard=guard, label=args.label))
    fh, own = _out_text(args.out)
    try:
        write_csv_signal(sig, fh)
    finally:
        if own:
            fh.close()
    return 0


def _read_signal_arg(path: str) -> Signal:
    if path == "-":
        return read_csv_signal(sys.stdin)
    return read_csv_signal(path)


def cmd_transform(args) -> int:
    sig = _read_signal_arg(args.input)
    out = inverse_dht(sig.samples) if args.inverse else forward_dht(sig.samples)
    fh, own = _out_text(args.out)
    try:
        write_csv_signal(Signal(samples=out, label=sig.label), fh)
    finally:
        if own:
            fh.close()
    return 0


def cmd_roundtrip(args) -> int:
    sig = _read_signal_arg(args.input)
    rep = error_report(sig.samples, round_trip(sig.samples))
    fh, own = _out_text(args.out)
    try:
        write_error_report_csv(rep, fh)
    finally:
        if own:
            fh.close()
    print(
        f"avg_sq_error={rep.average_sq_error:.6e} rms={rep.rms:.6e} "
        f"argmax={rep.argmax_index} boundary={str(boundary_concentration(rep, 0.1)).lower()}",
        file=sys.stderr,
    )
    return 0


def cmd_bench(args) -> int:
    rows = bench_rows(parallel=args.parallel)
    fh, own = _out_text(args.out)
    try:
        fh.write("sno,label,avg_sq_error,rms,boundary_max\n")
        for r in rows:
            fh.write(
                f"{r.sno},{r.label},{format(r.avg_sq_error, '.16e')},"
                f"{format(r.rms, '.16e')},{str(r.boundary_max).lower()}\n"
            )
    finally:
        if own:
            fh.close()
    return 0


def _float_list(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def cmd_chirp_sweep(args) -> int:
    n_list = [int(v) for v in _float_list(args.n_list)]
    rows = chirp_sweep_rows(n_list, _float_list(args.f0_list), _float_list(args.f1_list))
    fh, own = _out_text(args.out)
    try:
        fh.write("n,f0,f1,avg_sq_error,rms\n")
        for n, f0, f1, avg, rms in rows:
            fh.write(f"{n},{f0:g},{f1:g},{format(avg, '.16e')},{format(rms, '.16e')}\n")
    finally:
        if own:
            fh.close()
    best = min(rows, key=lambda r: r[3])
    print(
        f"configs={len(rows)} min avg_sq_error={best[3]:.6e} "
        f"at n={best[0]} f0={best[1]:g} f1={best[2]:g}",
        file=sys.stderr,
    )
    return 0


def _clock_from(args) -> FrameClock:
    return FrameClock(frame_len=args.frame_len, offset=args.offset)


def cmd_stego_embed(args) -> int:
    audio = read_wav(_read_bytes(args.cover))
    cover = pcm16_to_signal(audio.samples)
    raw = _read_bytes(args.bits)
    bits = bytes_to_bits(raw) if args.bits_format == "raw" else text_to_bits(raw.decode("ascii"))
    result = embed(cover, bits, _clock_from(args), args.threshold)
    pcm, clipped = signal_to_pcm16(result.stego)
    if clipped:
        print(f"warning: {clipped} samples clipped during requantization", file=sys.stderr)
    _write_bytes(args.out, write_wav(WavAudio(sample_rate=audio.sample_rate, samples=pcm)))
    print(
        f"embedded {result.frames_used} bits; skipped {len(result.skipped_frames)} frames",
        file=sys.stderr,
    )
    return 0


def cmd_stego_extract(args) -> int:
    stego = pcm16_to_signal(read_wav(_read_bytes(args.stego)).samples)
    cover = pcm16_to_signal(read_wav(_read_bytes(args.cover)).samples)
    bits = extract(stego, cover, _clock_from(args), args.threshold)
    if args.expect_bits is not None and bits.size != args.expect_bits:
        print(
            f"warning: extracted {bits.size} bits, expected {args.expect_bits}",
            file=sys.stderr,
        )
        bits = bits[: args.expect_bits]
    if args.bits_format == "raw":
        _write_bytes(args.out, bits_to_bytes(bits))
    else:
        text = bits_to_text(bits)
        fh, own = _out_text(args.out)
        try:
            fh.write(text)
        finally:
            if own:
                fh.close()
    return 0


def cmd_image_dht(args) -> int:
    img = read_pgm(_read_bytes(args.input))
    real = image_forward_dht(img, parallel=args.parallel)
    if args.dump_real:
        with open(args.dump_real, "w", encoding="utf-8", newline="") as fh:
            for row in real.pixels:
                fh.write(",".join(format(v, ".16e") for v in row))
                fh.write("\n")
    display, lo, hi = normalize_for_display(real)
    _write_bytes(args.output, write_pgm(display, binary=not args.ascii))
    print(f"display range mapped from [{lo:.6e}, {hi:.6e}]", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dhtlab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a signal as CSV")
    g.add_argument("--kind", required=True)
    g.add_argument("--n", required=True, type=int)
    for name in _GEN_FLOAT_FLAGS:
        g.add_argument(f"--{name}", type=float)
    for name in _GEN_INT_FLAGS:
        g.add_argument(f"--{name}", type=int)
    g.add_argument("--guard", type=int, default=0, help="guard width on both ends")
    g.add_argument("--guard-front", type=int)
    g.add_argument("--guard-back", type=int)
    g.add_argument("--label")
    g.add_argument("--out", default="-")
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("transform", help="forward or inverse transform of a CSV signal")
    t.add_argument("input")
    t.add_argument("--inverse", action="store_true")
    t.add_argument("--out", default="-")
    t.set_defaults(func=cmd_transform)

    r = sub.add_parser("roundtrip", help="round-trip a CSV signal and report the error")
    r.add_argument("input")
    r.add_argument("--out", default="-")
    r.set_defaults(func=cmd_roundtrip)

    b = sub.add_parser("bench", help="catalog round-trip error table")
    b.add_argument("--out", default="-")
    b.add_argument("--parallel", action="store_true")
    b.set_defaults(func=cmd_bench)

    c = sub.add_parser("chirp-sweep", help="round-trip error over a chirp parameter grid")
    c.add_argument("--out", default="-")
    c.add_argument("--n-list", default="64,128,256,512,1024")
    c.add_argument("--f0-list", default="0,0.25,0.5,1,2,4")
    c.add_argument("--f1-list", default="1,2,4,6,7.5,8,12,16")
    c.set_defaults(func=cmd_chirp_sweep)

    def add_clock_flags(sp):
        sp.add_argument("--frame-len", type=int, default=64)
        sp.add_argument("--offset", type=int, default=0)
        sp.add_argument("--threshold", type=float, default=None)
        sp.add_argument("--bits-format", choices=("text", "raw"), default="text")

    se = sub.add_parser("stego-embed", help="hide a bitstream in a WAV cover")
    se.add_argument("cover")
    se.add_argument("--bits", required=True)
    se.add_argument("--out", required=True)
    add_clock_flags(se)
    se.set_defaults(func=cmd_stego_embed)

    sx = sub.add_parser("stego-extract", help="recover a bitstream from a stego WAV")
    sx.add_argument("stego")
    sx.add_argument("--cover", required=True)
    sx.add_argument("--out", default="-")
    sx.add_argument("--expect-bits", type=int)
    add_clock_flags(sx)
    sx.set_defaults(func=cmd_stego_extract)

    i = sub.add_parser("image-dht", help="per-row transform of a PGM image")
    i.add_argument("input")
    i.add_argument("output")
    i.add_argument("--dump-real", help="also dump the real-valued rows as CSV")
    i.add_argument("--ascii", action="store_true", help="write P2 instead of P5")
    i.add_argument("--parallel", action="store_true")
    i.set_defaults(func=cmd_image_dht)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
