"""Grayscale contrast enhancement toolkit.

Histogram equalization and its brightness-preserving variants (BBHE,
MMBEBHE), a rule-based fuzzy enhancement pipeline, four quality measures
(MSE, PSNR, entropy, AMBE), and a bit-exact PGM codec. See the
`contrastkit` CLI for batch use.
"""

from .fuzzy import (
    FuzzyConfig,
    MembershipFunction,
    default_config,
    defuzzify_centroid,
    enhance_fuzzy,
    fuzzify,
    fuzzy_lut,
    infer,
)
from .histeq import (
    IntensityLut,
    apply_lut,
    bbhe,
    bbhe_lut,
    equalize,
    he_lut,
    identity_lut,
    mmbebhe,
    mmbebhe_lut,
    mmbebhe_threshold,
)
from .image import (
    GrayImage,
    Histogram,
    PgmDecodeError,
    histogram,
    load_pgm,
    mean_intensity,
    save_pgm,
)
from .metrics import MetricsReport, ambe, entropy, evaluate, mse, psnr

__version__ = "0.1.0"

__all__ = [
    "GrayImage",
    "Histogram",
    "PgmDecodeError",
    "histogram",
    "load_pgm",
    "save_pgm",
    "mean_intensity",
    "IntensityLut",
    "he_lut",
    "apply_lut",
    "equalize",
    "bbhe",
    "bbhe_lut",
    "mmbebhe",
    "mmbebhe_lut",
    "mmbebhe_threshold",
    "identity_lut",
    "MembershipFunction",
    "FuzzyConfig",
    "default_config",
    "fuzzify",
    "infer",
    "defuzzify_centroid",
    "fuzzy_lut",
    "enhance_fuzzy",
    "MetricsReport",
    "mse",
    "psnr",
    "entropy",
    "ambe",
    "evaluate",
    "__version__",
]
