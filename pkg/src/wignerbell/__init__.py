"""Relativistic spin entanglement: Wigner rotations, boosted Bell states and CHSH tests."""

from .bell import (
    BOOSTED_SINGLET_DIRECTIONS,
    SINGLET_MAX_DIRECTIONS,
    ChshDirections,
    bell_original_margin,
    chsh,
    chsh_closed_form,
    chsh_velocity_form,
    correlation,
    correlation_closed_form,
    correlation_tensor,
    optimal_chsh,
    tsirelson_check,
)
from .entanglement import coefficient_matrix, is_separable, schmidt, von_neumann_entropy
from .little_group import (
    spin_half_rep,
    wigner_angle_perpendicular,
    wigner_angle_two_boosts,
    wigner_rotation,
)
from .minkowski import (
    FourMomentum,
    axis_angle_from_rotation,
    boost_along,
    inverse_standard_boost,
    minkowski_dot,
    rotation_about,
    standard_boost,
    validate_lorentz,
)
from .states import BellKind, BipartiteState, bell_state, boost_state, transform_bell_closed_form

__version__ = "0.1.0"
