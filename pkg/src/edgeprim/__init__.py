"""Coset graphs, permutation groups and edge-primitivity checks."""

from __future__ import annotations

from .groups import PermGroup, StabilizerChain, build_chain
from .perm import Permutation, compose, element_order, inverse, parse_permutation

__all__ = [
    "PermGroup",
    "Permutation",
    "StabilizerChain",
    "build_chain",
    "compose",
    "element_order",
    "inverse",
    "parse_permutation",
]
__version__ = "0.1.0"
