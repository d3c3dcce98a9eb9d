"""Fourier codes over GF(p)."""

from ._core import (
    Context,
    FourierCode,
    FourierError,
    element_of_order,
    is_prime,
    is_valid_fntt_params,
    multiplicity,
    parameters_table,
    smallest_valid_prime,
    sqrt_mod,
)


def construct(p, n, lam, alpha=None, sqrt_n=None, j=None):
    """Build the code for eigenvalue ``lam`` ("+1", "-1", "+j", "-j")."""
    return FourierCode(Context(p, n, alpha=alpha, sqrt_n=sqrt_n, j=j), lam)


__all__ = [
    "Context",
    "FourierCode",
    "FourierError",
    "construct",
    "element_of_order",
    "is_prime",
    "is_valid_fntt_params",
    "multiplicity",
    "parameters_table",
    "smallest_valid_prime",
    "sqrt_mod",
]
