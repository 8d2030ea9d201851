"""Image quality measures: MSE, PSNR, entropy, and AMBE.

PSNR uses the 8-bit peak (L-1)^2 = 255^2 = 65025 and returns +inf for a
zero MSE so that a perfect reconstruction is representable rather than an
error. Entropy is in bits (log base 2), bounded by 8 for 8-bit images.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .image import GrayImage, histogram, mean_intensity

PSNR_PEAK_SQ = 255.0 * 255.0


def _check_same_dims(original: GrayImage, processed: GrayImage) -> None:
    if (original.width, original.height) != (processed.width, processed.height):
        raise ValueError(
            f"dimension mismatch: {original.width}x{original.height} vs "
            f"{processed.width}x{processed.height}"
        )


@dataclass(frozen=True)
class MetricsReport:
    """One comparison row: method tag plus the four quality measures."""

    method: str
    mse: float
    psnr: float
    entropy: float
    ambe: float


def mse(original: GrayImage, processed: GrayImage) -> float:
    """Mean squared pixel difference; lower is better."""
    _check_same_dims(original, processed)
    diff = original.pixels.astype(np.int64) - processed.pixels.astype(np.int64)
    return int((diff * diff).sum()) / original.size


def psnr(original: GrayImage, processed: GrayImage) -> float:
    """Peak signal-to-noise ratio in dB; +inf when the images are identical."""
    err = mse(original, processed)
    if err == 0.0:
        return math.inf
    return 10.0 * math.log10(PSNR_PEAK_SQ / err)


def entropy(img: GrayImage) -> float:
    """Shannon entropy of the intensity distribution, in bits (0..8)."""
    p = histogram(img).probabilities()
    p = p[p > 0]
    return float(-(p * np.log2(p)).sum())


def ambe(original: GrayImage, processed: GrayImage) -> float:
    """Absolute mean brightness error; lower means brightness preserved."""
    _check_same_dims(original, processed)
    return abs(mean_intensity(original) - mean_intensity(processed))


def evaluate(original: GrayImage, processed: GrayImage, method: str) -> MetricsReport:
    """Bundle the four measures for one enhancement result.

    Entropy is measured on the processed image (detail richness of the
    output); the other three compare processed against original.
    """
    return MetricsReport(
        method=method,
        mse=mse(original, processed),
        psnr=psnr(original, processed),
        entropy=entropy(processed),
        ambe=ambe(original, processed),
    )
