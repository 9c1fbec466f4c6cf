"""Exact cross-ratio algebra on configuration spaces of marked spheres."""

from ._core import (
    FactoredMap,
    GroupElement,
    HoloMapDescriptor,
    LiftResult,
    OmegaPoint,
    Permutation,
    TorelliError,
    apply_forgetful,
    certify_no_real_collision_points,
    closure,
    collision_case,
    collision_free,
    collision_witness,
    coordinate_catalog,
    cross_ratio,
    enumerate_group,
    enumerate_maps,
    equal_randomized,
    extend_to_group_element,
    find_permutation,
    find_permutations,
    find_permutations_blackbox,
    identity_permutation,
    kernel_theta3,
    lc_map,
    lift_permutation,
    sample_omega_point,
    standard_generators,
    theta,
    validate_tuple,
)

__version__ = "0.1.0"

__all__ = [
    "FactoredMap",
    "GroupElement",
    "HoloMapDescriptor",
    "LiftResult",
    "OmegaPoint",
    "Permutation",
    "TorelliError",
    "apply_forgetful",
    "certify_no_real_collision_points",
    "closure",
    "collision_case",
    "collision_free",
    "collision_witness",
    "coordinate_catalog",
    "cross_ratio",
    "enumerate_group",
    "enumerate_maps",
    "equal_randomized",
    "extend_to_group_element",
    "find_permutation",
    "find_permutations",
    "find_permutations_blackbox",
    "identity_permutation",
    "kernel_theta3",
    "lc_map",
    "lift_permutation",
    "sample_omega_point",
    "standard_generators",
    "theta",
    "validate_tuple",
]
