"""Closed-form branch tables of the quadratic map R and the quartic map S.

R(x) = A x (a - x) / (1 - x) has critical points 1 ± sqrt(1 - a), lying over
1 and a'. S(x) = 4 a x (1 - x)(a - x) / (a - x^2)^2 is ramified over
infinity, 1 and a.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial import Polynomial

from src.base.exceptions import InconsistentBranchingError
from src.psymbol.maps import BranchPoint, RationalMap
from src.psymbol.sphere import INFINITY, ONE, ZERO, SpherePoint

_MATCH_TOLERANCE = 1e-8


def quadratic_map(a: complex, A: complex) -> RationalMap:  # noqa: N803
    """R(x) = A x (a - x) / (1 - x) as a rational map."""
    return RationalMap(Polynomial([0, A * a, -A]), Polynomial([1, -1]))


def biquadratic_map(a: complex) -> RationalMap:
    """S(x) = 4 a x (1 - x)(a - x) / (a - x^2)^2 as a rational map."""
    numerator = Polynomial([0, 4 * a]) * Polynomial([1, -1]) * Polynomial([a, -1])
    denominator = Polynomial([a, 0, -1]) ** 2
    return RationalMap(numerator, denominator)


def _close(z: complex, w: complex) -> bool:
    return abs(z - w) <= _MATCH_TOLERANCE * max(1.0, abs(w))


def quadratic_branching(a: complex, a_prime: complex, A: complex) -> list[BranchPoint]:  # noqa: N803
    """Branch table of R over 0, infinity, 1 and a'.

    Raises:
        InconsistentBranchingError: The critical values are not {1, a'}.
    """
    root = np.sqrt(complex(1 - a))
    critical = [1 + root, 1 - root]
    r = quadratic_map(a, A)
    values = [r(c) for c in critical]
    if _close(values[0], 1) and _close(values[1], a_prime):
        over_one, over_a_prime = critical
    elif _close(values[1], 1) and _close(values[0], a_prime):
        over_a_prime, over_one = critical
    else:
        raise InconsistentBranchingError(
            "critical values of R are not {1, a'}", image=str(values), total=None, degree=2
        )
    return [
        BranchPoint(ZERO, ZERO, 1),
        BranchPoint(SpherePoint(a), ZERO, 1),
        BranchPoint(ONE, INFINITY, 1),
        BranchPoint(INFINITY, INFINITY, 1),
        BranchPoint(SpherePoint(over_one), ONE, 2),
        BranchPoint(SpherePoint(over_a_prime), SpherePoint(a_prime), 2),
    ]


def biquadratic_branching(a: complex) -> list[BranchPoint]:
    """Branch table of S over 0, infinity, 1 and a (schema 1+1+1+1 = 2+2 = 2+2 = 2+2)."""
    root_a = np.sqrt(complex(a))
    table = [
        BranchPoint(ZERO, ZERO, 1),
        BranchPoint(ONE, ZERO, 1),
        BranchPoint(SpherePoint(a), ZERO, 1),
        BranchPoint(INFINITY, ZERO, 1),
        BranchPoint(SpherePoint(root_a), INFINITY, 2),
        BranchPoint(SpherePoint(-root_a), INFINITY, 2),
    ]
    for z in np.roots([1, -2 * a, a]):
        table.append(BranchPoint(SpherePoint(z), ONE, 2))
    for z in np.roots([1, -2, a]):
        table.append(BranchPoint(SpherePoint(z), SpherePoint(a), 2))
    return table
