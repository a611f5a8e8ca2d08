"""Test data factories for heunkit.

Fixed generic parameter sets plus seeded random variants. The fixed sets
keep every point of interest (images of a under the anharmonic group,
lower parameters) well away from poles.
"""

import numpy as np

from src.kernel.params import GaussParams, HeunParams, Restricted3F2Params
from src.reduction.curve import ApparentCurvePoint, curve_point


def create_test_gauss_params(
    alpha: complex = 0.3 + 0.1j,
    beta: complex = -0.7 + 0.2j,
    gamma: complex = 1.4 - 0.3j,
) -> GaussParams:
    """Generic complex parameters of 2F1."""
    return GaussParams(alpha, beta, gamma)


def create_test_heun_params(
    a: complex = 2.5 + 0.5j,
    q: complex = 0.4 - 0.3j,
    alpha: complex = 0.3 + 0.2j,
    beta: complex = -0.6 + 0.1j,
    gamma: complex = 1.3 - 0.2j,
    delta: complex = 0.7 + 0.4j,
) -> HeunParams:
    """Generic complex parameters of Hl with |a| between 2 and 3."""
    return HeunParams(a, q, alpha, beta, gamma, delta)


def create_test_restricted_params(
    a1: complex = 0.3 + 0.1j,
    a2: complex = -0.7 + 0.2j,
    b1: complex = 1.4 - 0.3j,
    e: complex = 0.8 + 0.6j,
) -> Restricted3F2Params:
    """Generic parameters of 3F2(a1, a2, e+1; b1, e)."""
    return Restricted3F2Params(a1, a2, b1, e)


def create_test_curve_point(
    alpha: complex = 0.3,
    beta: complex = 0.7,
    gamma: complex = 1.4,
    e: complex = 2.0,
) -> ApparentCurvePoint:
    """Point of the apparent-singularity curve with a = 1.448..., q = 0.456..."""
    return curve_point(alpha, beta, gamma, e)


def random_complex(rng: np.random.Generator, bound: float = 1.0) -> complex:
    re, im = rng.uniform(-bound, bound, size=2)
    return complex(re, im)


def random_point(rng: np.random.Generator, radius: float) -> complex:
    """Uniform point of the disk of the given radius."""
    r = radius * np.sqrt(rng.uniform())
    phi = rng.uniform(0, 2 * np.pi)
    return complex(r * np.cos(phi), r * np.sin(phi))
