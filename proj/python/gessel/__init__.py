"""Stirling permutations, Gessel trees and partial gamma-expansions."""

from ._core import (
    DomainError,
    Error,
    ParseError,
    ValidationError,
    c_polynomial,
    canonical_representative,
    count_stirling,
    enumerate_stirling,
    gamma,
    golden,
    is_canonical,
    orbit,
    prune,
    statistics,
    to_perm,
    to_tree,
    toggle,
    verify,
)

__all__ = [
    "DomainError",
    "Error",
    "ParseError",
    "ValidationError",
    "c_polynomial",
    "canonical_representative",
    "count_stirling",
    "enumerate_stirling",
    "gamma",
    "golden",
    "is_canonical",
    "orbit",
    "prune",
    "statistics",
    "to_perm",
    "to_tree",
    "toggle",
    "verify",
]
