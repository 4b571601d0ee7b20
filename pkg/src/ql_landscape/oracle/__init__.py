from .closed_form import closed_form_solver, lambda_only_fit, layer_from_solution
from .eigen import EigDecomp, sym_eig
from .features import (
    coefficients_from_matrix,
    coefficients_from_tensor,
    lift_matrix,
    lift_quadratic,
    matrix_from_coefficients,
    monomial_features,
    tensor_from_coefficients,
)
from .least_squares import OracleSolution, design_matrix, solve_oracle

__all__ = [
    "closed_form_solver",
    "coefficients_from_matrix",
    "coefficients_from_tensor",
    "design_matrix",
    "EigDecomp",
    "lambda_only_fit",
    "layer_from_solution",
    "lift_matrix",
    "lift_quadratic",
    "matrix_from_coefficients",
    "monomial_features",
    "OracleSolution",
    "solve_oracle",
    "sym_eig",
    "tensor_from_coefficients",
]
