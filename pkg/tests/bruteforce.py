"""Independent brute-force reimplementations used as test oracles.

Everything here is deliberately written from scratch in plain Python (or
exact integer arithmetic), without calling into contrastkit, so a bug in
the library cannot hide in its own oracle.
"""

from __future__ import annotations

import numpy as np


def tally_histogram(pixels) -> list[int]:
    """Naive per-pixel tally: O(N * L) scan, no bincount."""
    counts = [0] * 256
    for p in pixels:
        counts[int(p)] += 1
    return counts


def round_half_up_exact(num: int, den: int) -> int:
    """floor(num/den + 1/2) in exact integer arithmetic (num, den >= 0)."""
    return (2 * num + den) // (2 * den)


def he_map(counts: list[int]) -> list[int]:
    """Equalization map via plain prefix sums and exact rounding."""
    total = sum(counts)
    out = []
    cum = 0
    for k in range(256):
        cum += counts[k]
        out.append(round_half_up_exact(255 * cum, total))
    return out


def segment_map(counts: list[int], threshold: int) -> list[int]:
    """Bi-equalization map at `threshold`: levels <= t onto [0, t], levels
    > t onto [t+1, 255]; an empty side keeps identity."""
    t = threshold
    out = list(range(256))
    n_low = sum(counts[: t + 1])
    n_high = sum(counts[t + 1 :])
    cum = 0
    for k in range(t + 1):
        cum += counts[k]
        if n_low:
            out[k] = round_half_up_exact(t * cum, n_low)
    cum = 0
    for k in range(t + 1, 256):
        cum += counts[k]
        if n_high:
            out[k] = (t + 1) + round_half_up_exact((254 - t) * cum, n_high)
    return out


def apply_map(mapping: list[int], pixels) -> list[int]:
    return [mapping[int(p)] for p in pixels]


def min_mean_error_threshold(pixels) -> int:
    """Materialize the bi-equalized image at every threshold, measure each
    output mean directly, and pick the argmin (smallest t on ties)."""
    pixels = [int(p) for p in pixels]
    counts = tally_histogram(pixels)
    in_mean = sum(pixels) / len(pixels)
    best_t, best_err = 0, float("inf")
    for t in range(256):
        out = apply_map(segment_map(counts, t), pixels)
        err = abs(in_mean - sum(out) / len(out))
        if err < best_err:
            best_t, best_err = t, err
    return best_t


def triangle_centroid_quadrature(a: float, b: float, c: float, points: int = 200_001) -> float:
    """Continuous center of gravity of a triangular membership function via
    dense trapezoidal integration over [0, 255]."""
    xs = np.linspace(0.0, 255.0, points)
    mu = np.zeros_like(xs)
    if b > a:
        rising = (xs > a) & (xs < b)
        mu[rising] = (xs[rising] - a) / (b - a)
    if c > b:
        falling = (xs > b) & (xs < c)
        mu[falling] = (c - xs[falling]) / (c - b)
    mu[xs == b] = 1.0
    num = np.trapezoid(xs * mu, xs)
    den = np.trapezoid(mu, xs)
    return float(num / den)
