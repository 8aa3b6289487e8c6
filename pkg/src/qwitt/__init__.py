"""Exact arithmetic for big Witt vectors over divisor-stable truncation
sets, their one-parameter deformations, and Witt vectors of inductive
systems of rings.

Everything is exact: coefficients are arbitrary-precision integers (or
integer polynomials), every interior division is asserted, and every
structural identity ships with a machine check.
"""

from .errors import (
    CertificationError,
    CrossRingError,
    Error,
    IntegralityViolation,
    NonUniqueQuotient,
    NotInGhostImage,
    NotInImage,
    NotInNormalForm,
    PDividesQ,
    UnsupportedRingOperation,
)
from .mpoly import MPoly
from .rings import DUAL, Z, ZQ, DualRing, Ring, TwistedRing, ZModRing, ZqRing, parse_ring
from .truncset import TruncationSet
from .universal import Family, UniversalPolySet, derive
from .witt import WittCoeffRing, WittVector

__all__ = [
    "CertificationError",
    "CrossRingError",
    "DUAL",
    "DualRing",
    "Error",
    "Family",
    "IntegralityViolation",
    "MPoly",
    "NonUniqueQuotient",
    "NotInGhostImage",
    "NotInImage",
    "NotInNormalForm",
    "PDividesQ",
    "Ring",
    "TruncationSet",
    "TwistedRing",
    "UniversalPolySet",
    "UnsupportedRingOperation",
    "WittCoeffRing",
    "WittVector",
    "Z",
    "ZModRing",
    "ZQ",
    "ZqRing",
    "derive",
    "parse_ring",
]

__version__ = "0.1.0"
