"""Executable arithmetic of the arithmetic site: sieves, supernatural points,
topologies on the class space, sheaf stalks, the noncommutative frame of
truth fluctuations and Conway's big cell."""

from .errors import (
    ArithmeticOverflow,
    ArithSiteError,
    EmptyPremise,
    InconsistentSpec,
    InvalidFrameElement,
    InvalidInput,
    ResourceLimit,
    UndefinedGcd,
)
from .sieve import ONE, ZERO, Sieve

__version__ = "0.1.0"

__all__ = [
    "ArithSiteError",
    "ArithmeticOverflow",
    "EmptyPremise",
    "InconsistentSpec",
    "InvalidFrameElement",
    "InvalidInput",
    "ONE",
    "ResourceLimit",
    "Sieve",
    "UndefinedGcd",
    "ZERO",
]
