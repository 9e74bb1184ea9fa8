"""Cellular and primary decompositions of binomial ideals."""

from ._core import (
    Component,
    ExponentOverflowError,
    Ideal,
    InternalError,
    ParseError,
    UnsupportedInputError,
    associated_primes,
    cellular_decomposition,
    cyclotomic_order,
    hull,
    is_cellular,
    is_primary,
    minimal_primes,
    primary_decomposition,
    radical,
    run,
    witness_search,
)

__all__ = [
    "Component",
    "ExponentOverflowError",
    "Ideal",
    "InternalError",
    "ParseError",
    "UnsupportedInputError",
    "associated_primes",
    "cellular_decomposition",
    "cyclotomic_order",
    "hull",
    "is_cellular",
    "is_primary",
    "minimal_primes",
    "primary_decomposition",
    "radical",
    "run",
    "witness_search",
]
