"""Exact toric computations for cyclic quotient surface singularities Y(n, q)."""

from .contfrac import enumerate_zero_chains, eval_cf, expand_hj, q_sequence
from .invariants import CyclicQuotient, InvariantViolation, invariants, t_classify
from .lattice import Cone2, MVector, NVector, hilbert_basis
from .presolutions import (
    admissible_chains,
    build_presolution,
    enumerate_presolutions,
    m_resolution,
    verify_presolution,
)
from .resolutions import Fan, discrepancies, maximal_resolution, minimal_resolution

__all__ = [
    "Cone2",
    "CyclicQuotient",
    "Fan",
    "InvariantViolation",
    "MVector",
    "NVector",
    "admissible_chains",
    "build_presolution",
    "discrepancies",
    "enumerate_presolutions",
    "enumerate_zero_chains",
    "eval_cf",
    "expand_hj",
    "hilbert_basis",
    "invariants",
    "m_resolution",
    "maximal_resolution",
    "minimal_resolution",
    "q_sequence",
    "t_classify",
    "verify_presolution",
]
