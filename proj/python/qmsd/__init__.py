"""Python bindings for the qmsd library."""

from ._core import (
    CollisionModelParams,
    EigenBasis,
    IdealMsdParams,
    PhysicalSystem,
    Scales,
    ScatteringParams,
    I_ab,
    J,
    breve_closed,
    breve_sum,
    build_basis,
    derive_scales,
    dsf,
    isf,
    isf_phase,
    msd_collision_model,
    msd_exact,
    msd_ideal,
    pair_correlation_self,
    partition_function,
    sample_msd,
)

__all__ = [
    "CollisionModelParams",
    "EigenBasis",
    "IdealMsdParams",
    "PhysicalSystem",
    "Scales",
    "ScatteringParams",
    "I_ab",
    "J",
    "breve_closed",
    "breve_sum",
    "build_basis",
    "derive_scales",
    "dsf",
    "isf",
    "isf_phase",
    "msd_collision_model",
    "msd_exact",
    "msd_ideal",
    "pair_correlation_self",
    "partition_function",
    "sample_msd",
]
