"""Dihedral angles, curvature-map Jacobians and volumes of tetrahedra in
spherical, Euclidean and hyperbolic geometry."""

from ._core import (
    EDGES,
    GeometryError,
    dihedral_angles,
    dual,
    euclidean_volume,
    is_valid,
    jacobian,
    jacobian_fd,
    one_form_loop_residual,
    p_matrix,
    r_matrix,
    sample_tetrahedra,
    sweep,
    triangle_angles,
    verify_angle_identities,
    verify_length_identities,
    volume,
    volume_gradient_check,
    w_angle,
    w_length,
)

__all__ = [
    "EDGES",
    "GeometryError",
    "dihedral_angles",
    "dual",
    "euclidean_volume",
    "is_valid",
    "jacobian",
    "jacobian_fd",
    "one_form_loop_residual",
    "p_matrix",
    "r_matrix",
    "sample_tetrahedra",
    "sweep",
    "triangle_angles",
    "verify_angle_identities",
    "verify_length_identities",
    "volume",
    "volume_gradient_check",
    "w_angle",
    "w_length",
]
