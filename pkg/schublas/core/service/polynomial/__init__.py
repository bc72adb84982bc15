from schublas.core.service.polynomial.operators import (
    demazure_pi,
    divided_difference,
    leading_exponent,
    leading_term,
    pi_hat,
    pi_hat_via_pi,
    reverse_complement_poly,
)

__all__ = [
    "demazure_pi",
    "divided_difference",
    "leading_exponent",
    "leading_term",
    "pi_hat",
    "pi_hat_via_pi",
    "reverse_complement_poly",
]
