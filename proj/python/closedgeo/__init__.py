"""Exact Morse index iteration calculus for closed geodesics on spheres.

Rational quantities come back as ``fractions.Fraction``; phases may be given
as ``Fraction``, ``int`` or ``"p/q"`` strings.
"""

from ._core import (
    IndexProfile,
    PhaseCollision,
    aggregate_w,
    average_euler_number,
    average_index,
    betti_number,
    check_prop33,
    critical_group_dim,
    enumerate_signatures,
    evaluate_index_function,
    extremal_profile,
    gamma_invariant,
    gap_decomposition,
    index_sequence,
    iterate_index,
    jump_search,
    morse_q_recursion,
    poincare_coefficients,
    single_geodesic_pipeline,
    validate_profile,
    verify_theorem,
)

__all__ = [
    "IndexProfile",
    "PhaseCollision",
    "aggregate_w",
    "average_euler_number",
    "average_index",
    "betti_number",
    "check_prop33",
    "critical_group_dim",
    "enumerate_signatures",
    "evaluate_index_function",
    "extremal_profile",
    "gamma_invariant",
    "gap_decomposition",
    "index_sequence",
    "iterate_index",
    "jump_search",
    "morse_q_recursion",
    "poincare_coefficients",
    "single_geodesic_pipeline",
    "validate_profile",
    "verify_theorem",
]
