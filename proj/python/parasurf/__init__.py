"""Exact pairing, spectra, and decay diagnostics on the parabola surface.

Thin wrapper over the compiled core.  Exact quantities are exchanged as
rational strings or JSON text; floats appear only where a value is genuinely
approximate.
"""

from ._core import (
    DomainError,
    asymptote_report,
    gamma_hvec,
    is_hyperbolic,
    moment,
    orbit,
    pair_classes,
    pair_gamma_sigma,
    pair_table,
    precision_bits,
    scan,
    set_precision_bits,
    sigma_hvec,
    spectra,
    trace,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "asymptote_report",
    "gamma_hvec",
    "is_hyperbolic",
    "moment",
    "orbit",
    "pair_classes",
    "pair_gamma_sigma",
    "pair_table",
    "precision_bits",
    "scan",
    "set_precision_bits",
    "sigma_hvec",
    "spectra",
    "trace",
]
