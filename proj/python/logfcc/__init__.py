"""Filon-Clenshaw-Curtis quadrature for f(x) log((x - alpha)^2) exp(ikx) on [-1, 1]."""

from ._core import (
    integrate,
    integrate_samples,
    nonosc_weights,
    reference_integral,
    refine,
    weights,
)

__all__ = [
    "integrate",
    "integrate_samples",
    "nonosc_weights",
    "reference_integral",
    "refine",
    "weights",
]
