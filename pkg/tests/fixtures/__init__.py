"""Shared fixtures for heunkit tests.

Modules:
    factories: Generic parameter sets and seeded random draws.

Example:

    from tests.fixtures.factories import create_test_heun_params

    p = create_test_heun_params(a=3.0)
"""

from tests.fixtures.factories import (
    create_test_curve_point,
    create_test_gauss_params,
    create_test_heun_params,
    create_test_restricted_params,
    random_complex,
    random_point,
)

__all__ = [
    "create_test_curve_point",
    "create_test_gauss_params",
    "create_test_heun_params",
    "create_test_restricted_params",
    "random_complex",
    "random_point",
]
