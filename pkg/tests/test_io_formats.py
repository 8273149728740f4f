"""WAV, PGM, and CSV codecs: byte-level fixtures built by hand."""

import io
import struct

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dhtlab.core import Signal
from dhtlab.image import GrayImage
from dhtlab.io_formats import (
    WavAudio,
    pcm16_to_signal,
    read_csv_signal,
    read_pgm,
    read_wav,
    signal_to_pcm16,
    write_csv_signal,
    write_error_report_csv,
    write_pgm,
    write_wav,
)
from dhtlab.metrics import error_report


def minimal_wav(rate=8000, samples=(0, 64)) -> bytes:
    """Independent hand-rolled 44-byte-header WAV, not via write_wav."""
    payload = b"".join(struct.pack("<h", s) for s in samples)
    return (
        b"RIFF"
        + struct.pack("<I", 36 + len(payload))
        + b"WAVE"
        + b"fmt "
        + struct.pack("<IHHIIHH", 16, 1, 1, rate, rate * 2, 2, 16)
        + b"data"
        + struct.pack("<I", len(payload))
        + payload
    )


class TestWavRead:
    def test_hand_built_minimal_file(self):
        audio = read_wav(minimal_wav())
        assert audio.sample_rate == 8000
        np.testing.assert_array_equal(audio.samples, np.array([0, 64], dtype=np.int16))

    def test_skips_unknown_chunks(self):
        extra = b"LIST" + struct.pack("<I", 4) + b"INFO"
        data = minimal_wav()
        patched = data[:12] + extra + data[12:]
        patched = patched[:4] + struct.pack("<I", len(patched) - 8) + patched[8:]
        audio = read_wav(patched)
        np.testing.assert_array_equal(audio.samples, [0, 64])

    def test_odd_sized_unknown_chunk_is_padded(self):
        extra = b"junk" + struct.pack("<I", 3) + b"abc\x00"
        data = minimal_wav()
        patched = data[:12] + extra + data[12:]
        audio = read_wav(patched)
        np.testing.assert_array_equal(audio.samples, [0, 64])

    def test_bad_riff_magic(self):
        with pytest.raises(ValueError, match="bad magic at byte 0"):
            read_wav(b"RIFX" + minimal_wav()[4:])

    def test_bad_wave_form(self):
        data = minimal_wav()
        with pytest.raises(ValueError, match="bad form type at byte 8"):
            read_wav(data[:8] + b"AVI " + data[12:])

    def test_data_before_fmt(self):
        payload = struct.pack("<h", 1)
        data = (
            b"RIFF" + struct.pack("<I", 4 + 8 + len(payload)) + b"WAVE"
            b"data" + struct.pack("<I", len(payload)) + payload
        )
        with pytest.raises(ValueError, match="precedes fmt chunk"):
            read_wav(data)

    def test_missing_data_chunk(self):
        data = minimal_wav()[:36]  # header through fmt only
        with pytest.raises(ValueError, match="no data chunk"):
            read_wav(data)

    def test_truncated_data_chunk(self):
        with pytest.raises(ValueError, match="truncated file"):
            read_wav(minimal_wav()[:-1])

    def test_non_pcm_rejected(self):
        data = bytearray(minimal_wav())
        struct.pack_into("<H", data, 20, 3)  # IEEE float codec
        with pytest.raises(ValueError, match="unsupported audio format code 3"):
            read_wav(bytes(data))

    def test_stereo_rejected(self):
        data = bytearray(minimal_wav())
        struct.pack_into("<H", data, 22, 2)
        with pytest.raises(ValueError, match="only mono"):
            read_wav(bytes(data))

    def test_24_bit_rejected(self):
        data = bytearray(minimal_wav())
        struct.pack_into("<H", data, 34, 24)
        with pytest.raises(ValueError, match="only 16-bit"):
            read_wav(bytes(data))

    def test_undersized_fmt_chunk_rejected(self):
        data = bytearray(minimal_wav())
        struct.pack_into("<I", data, 16, 14)
        with pytest.raises(ValueError, match="declares 14 bytes"):
            read_wav(bytes(data))

    def test_odd_data_byte_count_rejected(self):
        payload = struct.pack("<h", 1)
        data = minimal_wav(samples=(1,))
        patched = bytearray(data)
        struct.pack_into("<I", patched, 40, 1)  # claim 1 byte of data
        with pytest.raises(ValueError, match="odd byte count"):
            read_wav(bytes(patched) + payload)


class TestWavWrite:
    def test_write_matches_hand_built_bytes(self):
        audio = WavAudio(sample_rate=8000, samples=np.array([0, 64], dtype=np.int16))
        assert write_wav(audio) == minimal_wav()

    def test_write_read_identity(self):
        samples = np.array([-32768, -1, 0, 1, 32767], dtype=np.int16)
        audio = WavAudio(sample_rate=44100, samples=samples)
        back = read_wav(write_wav(audio))
        assert back.sample_rate == 44100
        np.testing.assert_array_equal(back.samples, samples)

    def test_read_write_canonicalizes_extra_chunks(self):
        extra = b"LIST" + struct.pack("<I", 4) + b"INFO"
        data = minimal_wav()
        padded = data[:12] + extra + data[12:]
        assert write_wav(read_wav(padded)) == data

    def test_rejects_non_int16(self):
        with pytest.raises(ValueError, match="int16"):
            WavAudio(sample_rate=8000, samples=np.zeros(4))

    def test_rejects_bad_rate(self):
        with pytest.raises(ValueError, match="sample_rate"):
            WavAudio(sample_rate=0, samples=np.zeros(4, dtype=np.int16))


class TestPcm16:
    def test_known_mappings(self):
        pcm, clipped = signal_to_pcm16([0.5, -1.0, 0.0])
        np.testing.assert_array_equal(pcm, np.array([16384, -32768, 0], dtype=np.int16))
        assert clipped == 0

    def test_clipping_counted(self):
        pcm, clipped = signal_to_pcm16([1.5, 1.0, -1.0, -1.001])
        np.testing.assert_array_equal(
            pcm, np.array([32767, 32767, -32768, -32768], dtype=np.int16)
        )
        # -1.0 maps exactly to -32768 without clipping; +1.0 exceeds 32767
        assert clipped == 3

    def test_rounds_half_away_from_zero(self):
        pcm, _ = signal_to_pcm16([0.5 / 32768.0, -0.5 / 32768.0])
        np.testing.assert_array_equal(pcm, np.array([1, -1], dtype=np.int16))

    @settings(max_examples=50, deadline=None)
    @given(
        st.lists(
            st.integers(min_value=-32768, max_value=32767), min_size=1, max_size=64
        )
    )
    def test_int16_lattice_round_trip(self, values):
        original = np.array(values, dtype=np.int16)
        pcm, clipped = signal_to_pcm16(pcm16_to_signal(original))
        assert clipped == 0
        np.testing.assert_array_equal(pcm, original)


def p2_bytes(img_rows, maxval=255, comment=False):
    h, w = len(img_rows), len(img_rows[0])
    head = f"P2\n{'# test comment' if comment else ''}\n{w} {h}\n{maxval}\n"
    body = "\n".join(" ".join(str(v) for v in row) for row in img_rows)
    return (head + body + "\n").encode("ascii")


class TestPgm:
    def test_p2_parse(self):
        img = read_pgm(p2_bytes([[0, 128], [255, 7]]))
        np.testing.assert_array_equal(img.pixels, [[0.0, 128.0], [255.0, 7.0]])

    def test_p2_with_comment(self):
        img = read_pgm(p2_bytes([[1, 2]], comment=True))
        np.testing.assert_array_equal(img.pixels, [[1.0, 2.0]])

    def test_p5_parse_matches_p2(self):
        rows = [[0, 50, 100], [150, 200, 250]]
        p5 = b"P5\n3 2\n255\n" + bytes(v for row in rows for v in row)
        np.testing.assert_array_equal(read_pgm(p5).pixels, read_pgm(p2_bytes(rows)).pixels)

    def test_bad_magic(self):
        with pytest.raises(ValueError, match="bad magic"):
            read_pgm(b"P6\n1 1\n255\n\x00")

    def test_maxval_above_255_rejected(self):
        with pytest.raises(ValueError, match="unsupported maxval 300"):
            read_pgm(p2_bytes([[0]], maxval=300))

    def test_maxval_zero_rejected(self):
        with pytest.raises(ValueError, match="unsupported maxval 0"):
            read_pgm(b"P2\n1 1\n0\n0\n")

    def test_pixel_above_maxval_rejected(self):
        with pytest.raises(ValueError, match="exceeds maxval"):
            read_pgm(b"P2\n1 1\n100\n101\n")

    def test_p5_short_data(self):
        with pytest.raises(ValueError, match="short pixel data"):
            read_pgm(b"P5\n2 2\n255\n\x00\x01\x02")

    def test_p5_missing_whitespace_after_maxval(self):
        with pytest.raises(ValueError, match="whitespace after maxval"):
            read_pgm(b"P5\n1 1\n255# no separator\n\x00")

    def test_truncated_header(self):
        with pytest.raises(ValueError, match="truncated header"):
            read_pgm(b"P2\n4 4\n")

    def test_zero_dimension_rejected(self):
        with pytest.raises(ValueError, match="invalid dimensions"):
            read_pgm(b"P2\n0 1\n255\n")

    def test_write_p5_canonical_bytes(self):
        img = GrayImage(pixels=np.array([[0.0, 255.0]]))
        assert write_pgm(img) == b"P5\n2 1\n255\n\x00\xff"

    def test_write_p2_canonical_bytes(self):
        img = GrayImage(pixels=np.array([[0.0, 9.0], [255.0, 4.0]]))
        assert write_pgm(img, binary=False) == b"P2\n2 2\n255\n0 9\n255 4\n"

    def test_write_rounds_to_nearest(self):
        img = GrayImage(pixels=np.array([[1.4, 1.5, 2.6]]))
        assert write_pgm(img) == b"P5\n3 1\n255\n\x01\x02\x03"

    def test_write_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="outside"):
            write_pgm(GrayImage(pixels=np.array([[256.0]])))
        with pytest.raises(ValueError, match="outside"):
            write_pgm(GrayImage(pixels=np.array([[-1.0]])))

    def test_write_read_identity_both_forms(self):
        rng = np.random.default_rng(5)
        img = GrayImage(pixels=rng.integers(0, 256, size=(7, 11)).astype(np.float64))
        for binary in (True, False):
            back = read_pgm(write_pgm(img, binary=binary))
            np.testing.assert_array_equal(back.pixels, img.pixels)

    def test_read_write_fixed_point(self):
        data = write_pgm(GrayImage(pixels=np.array([[3.0, 4.0]])))
        assert write_pgm(read_pgm(data)) == data


class TestCsvSignal:
    def test_round_trip_preserves_bits_and_label(self):
        sig = Signal(
            samples=np.array([1.0, -2.5e-300, 3.141592653589793, 1e300]),
            label="weird values",
        )
        buf = io.StringIO()
        write_csv_signal(sig, buf)
        back = read_csv_signal(io.StringIO(buf.getvalue()))
        assert back.label == "weird values"
        np.testing.assert_array_equal(back.samples, sig.samples)

    @settings(max_examples=50, deadline=None)
    @given(
        st.lists(
            st.floats(allow_nan=False, allow_infinity=False, width=64),
            min_size=1,
            max_size=32,
        )
    )
    def test_round_trip_random_floats(self, values):
        sig = Signal(samples=np.array(values, dtype=np.float64), label="x")
        buf = io.StringIO()
        write_csv_signal(sig, buf)
        back = read_csv_signal(io.StringIO(buf.getvalue()))
        np.testing.assert_array_equal(back.samples, sig.samples)

    def test_blank_lines_skipped(self):
        back = read_csv_signal(io.StringIO("label\n1.0\n\n2.0\n"))
        np.testing.assert_array_equal(back.samples, [1.0, 2.0])

    def test_empty_file(self):
        with pytest.raises(ValueError, match="empty signal file"):
            read_csv_signal(io.StringIO(""))

    def test_label_only_file(self):
        with pytest.raises(ValueError, match="no samples"):
            read_csv_signal(io.StringIO("just a label\n"))

    def test_bad_number_reports_line(self):
        with pytest.raises(ValueError, match="line 3"):
            read_csv_signal(io.StringIO("label\n1.0\nbogus\n"))

    def test_path_round_trip(self, tmp_path):
        target = tmp_path / "sig.csv"
        sig = Signal(samples=np.array([0.25, -0.75]), label="disk")
        write_csv_signal(sig, str(target))
        back = read_csv_signal(str(target))
        assert back.label == "disk"
        np.testing.assert_array_equal(back.samples, sig.samples)


class TestErrorReportCsv:
    def test_layout(self):
        rep = error_report(np.array([1.0, 0.0]), np.array([0.0, 0.0]))
        buf = io.StringIO()
        write_error_report_csv(rep, buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == "index,squared_error"
        assert lines[1] == f"0,{format(1.0, '.16e')}"
        assert lines[2] == f"1,{format(0.0, '.16e')}"
        assert lines[3] == f"average_sq_error,{format(0.5, '.16e')}"
        assert lines[4].startswith("rms,")
        assert len(lines) == 5
