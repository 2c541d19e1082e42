"""Exact arithmetic for twisted families of binary Thue forms.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from thueforms._core import (
    BinaryForm,
    TwistedFamily,
    family,
    lemma_fuzz,
    search,
    siegel_profile,
    siegel_residual,
    verify,
)

__all__ = [
    "BinaryForm",
    "TwistedFamily",
    "family",
    "lemma_fuzz",
    "search",
    "siegel_profile",
    "siegel_residual",
    "verify",
]
