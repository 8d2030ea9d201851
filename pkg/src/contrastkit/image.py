"""Grayscale image container, histogram statistics, and a PGM (P2/P5) codec.

Images are 8-bit: 256 gray levels, values 0..255. Files with maxval < 255
are accepted and their samples kept as-is (no rescaling); saving always
writes maxval 255.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar

import numpy as np

LEVELS = 256
MAX_LEVEL = LEVELS - 1

_WHITESPACE = b" \t\n\r\x0b\x0c"


class PgmDecodeError(ValueError):
    """Raised when a byte stream is not a decodable P2/P5 PGM file."""


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Immutable 8-bit grayscale image backed by a (height, width) array."""

    pixels: np.ndarray
    levels: ClassVar[int] = LEVELS

    def __post_init__(self) -> None:
        arr = np.asarray(self.pixels)
        if arr.ndim != 2:
            raise ValueError(f"pixels must be 2-D, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"image dimensions must be >= 1, got {arr.shape}")
        if arr.dtype != np.uint8:
            if not np.issubdtype(arr.dtype, np.integer):
                raise ValueError(f"pixel values must be integers, got dtype {arr.dtype}")
            if arr.min() < 0 or arr.max() > MAX_LEVEL:
                raise ValueError("pixel values must lie in [0, 255]")
            arr = arr.astype(np.uint8)
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        object.__setattr__(self, "pixels", arr)

    @classmethod
    def from_flat(cls, width: int, height: int, values) -> "GrayImage":
        """Build an image from a row-major flat sequence of intensities."""
        arr = np.asarray(values)
        if arr.size != width * height:
            raise ValueError(f"expected {width * height} values, got {arr.size}")
        return cls(arr.reshape(height, width))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def size(self) -> int:
        """Total pixel count."""
        return self.pixels.size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and bool(
            np.array_equal(self.pixels, other.pixels)
        )


@dataclass(frozen=True, eq=False)
class Histogram:
    """Per-level pixel counts (256 bins) with derived probability views.

    Counts are raw integers; probabilities and the CDF are computed on
    demand in double precision.
    """

    counts: np.ndarray
    total: int = field(init=False)

    def __post_init__(self) -> None:
        arr = np.asarray(self.counts, dtype=np.int64)
        if arr.shape != (LEVELS,):
            raise ValueError(f"counts must have {LEVELS} bins, got shape {arr.shape}")
        if arr.min() < 0:
            raise ValueError("counts must be non-negative")
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        object.__setattr__(self, "counts", arr)
        object.__setattr__(self, "total", int(arr.sum()))

    def probabilities(self) -> np.ndarray:
        """Occurrence probability of each level (counts / total)."""
        if self.total == 0:
            raise ValueError("empty histogram has no probability mass")
        return self.counts / self.total

    def cdf(self) -> np.ndarray:
        """Cumulative distribution over levels; non-decreasing, ends at 1."""
        if self.total == 0:
            raise ValueError("empty histogram has no CDF")
        return np.cumsum(self.counts) / self.total

    def mean(self) -> float:
        """Mean intensity of the tallied pixels."""
        if self.total == 0:
            raise ValueError("empty histogram has no mean")
        weighted = int(np.dot(np.arange(LEVELS, dtype=np.int64), self.counts))
        return weighted / self.total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Histogram):
            return NotImplemented
        return bool(np.array_equal(self.counts, other.counts))


def histogram(img: GrayImage) -> Histogram:
    """Count the pixels of `img` at each of the 256 gray levels."""
    counts = np.bincount(img.pixels.ravel(), minlength=LEVELS)
    return Histogram(counts)


def mean_intensity(img: GrayImage) -> float:
    """Arithmetic mean of all pixel values (exact integer sum / N)."""
    return int(img.pixels.sum(dtype=np.int64)) / img.size


# ---------------------------------------------------------------------------
# PGM codec
# ---------------------------------------------------------------------------


class _HeaderScanner:
    """Token scanner for the PGM header: whitespace-separated fields with
    `#` comments running to end of line."""

    def __init__(self, data: bytes, pos: int):
        self.data = data
        self.pos = pos

    def skip_separators(self) -> None:
        data, n = self.data, len(self.data)
        while self.pos < n:
            ch = self.data[self.pos : self.pos + 1]
            if ch in (b"#",):
                nl = data.find(b"\n", self.pos)
                cr = data.find(b"\r", self.pos)
                ends = [e for e in (nl, cr) if e != -1]
                self.pos = min(ends) + 1 if ends else n
            elif ch in _WHITESPACE:
                self.pos += 1
            else:
                return

    def next_token(self, what: str) -> bytes:
        self.skip_separators()
        if self.pos >= len(self.data):
            raise PgmDecodeError(f"unexpected end of file while reading {what}")
        start = self.pos
        data, n = self.data, len(self.data)
        while self.pos < n and data[self.pos : self.pos + 1] not in _WHITESPACE:
            if data[self.pos : self.pos + 1] == b"#":
                break
            self.pos += 1
        return data[start : self.pos]

    def next_int(self, what: str) -> int:
        token = self.next_token(what)
        try:
            return int(token.decode("ascii"))
        except (UnicodeDecodeError, ValueError):
            raise PgmDecodeError(f"malformed {what}: {token!r}") from None


def _parse_header(scanner: _HeaderScanner) -> tuple[int, int, int]:
    width = scanner.next_int("width")
    height = scanner.next_int("height")
    if width <= 0 or height <= 0:
        raise PgmDecodeError(f"zero or negative dimension: {width} x {height}")
    maxval = scanner.next_int("maxval")
    if maxval <= 0:
        raise PgmDecodeError(f"maxval must be positive, got {maxval}")
    if maxval > MAX_LEVEL:
        raise PgmDecodeError(f"maxval {maxval} exceeds 255; only 8-bit PGM is supported")
    return width, height, maxval


def load_pgm(data: bytes) -> GrayImage:
    """Decode a P2 (ASCII) or P5 (binary) PGM byte stream.

    Header comments (`#` to end of line) are allowed; for P2 they are also
    allowed between samples. Raises :class:`PgmDecodeError` on a malformed
    magic number, maxval outside 1..255, zero dimensions, truncated or
    trailing pixel data, or samples exceeding maxval.
    """
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise PgmDecodeError(f"malformed magic number {magic!r}; expected P2 or P5")
    scanner = _HeaderScanner(data, 2)
    width, height, maxval = _parse_header(scanner)
    count = width * height

    if magic == b"P5":
        if scanner.pos >= len(data) or data[scanner.pos : scanner.pos + 1] not in _WHITESPACE:
            raise PgmDecodeError("missing whitespace after maxval before binary raster")
        start = scanner.pos + 1
        raster = data[start : start + count]
        if len(raster) < count:
            raise PgmDecodeError(
                f"truncated pixel data: expected {count} bytes, got {len(raster)}"
            )
        if len(data) > start + count:
            raise PgmDecodeError("trailing data after binary raster")
        samples = np.frombuffer(raster, dtype=np.uint8)
    else:
        values = []
        for _ in range(count):
            scanner.skip_separators()
            if scanner.pos >= len(data):
                raise PgmDecodeError(
                    f"truncated pixel data: expected {count} samples, got {len(values)}"
                )
            values.append(scanner.next_int("pixel sample"))
        scanner.skip_separators()
        if scanner.pos < len(data):
            raise PgmDecodeError("trailing data after ASCII raster")
        samples = np.asarray(values, dtype=np.int64)
        if samples.min() < 0:
            raise PgmDecodeError("negative pixel sample")

    if int(samples.max()) > maxval:
        raise PgmDecodeError(
            f"pixel sample {int(samples.max())} exceeds declared maxval {maxval}"
        )
    return GrayImage.from_flat(width, height, samples)


def save_pgm(img: GrayImage, format: str = "P5") -> bytes:
    """Encode an image as PGM bytes; `format` is "P5" (binary) or "P2" (ASCII).

    Always writes maxval 255. load_pgm(save_pgm(img)) reproduces `img`
    exactly for either format.
    """
    if format not in ("P2", "P5"):
        raise ValueError(f"format must be 'P2' or 'P5', got {format!r}")
    header = f"{format}\n{img.width} {img.height}\n{MAX_LEVEL}\n".encode("ascii")
    if format == "P5":
        return header + img.pixels.tobytes()
    lines = []
    for row in img.pixels:
        # keep lines within Netpbm's 70-character guideline
        for start in range(0, len(row), 17):
            chunk = row[start : start + 17]
            lines.append(" ".join(str(int(v)) for v in chunk))
    return header + ("\n".join(lines) + "\n").encode("ascii")
