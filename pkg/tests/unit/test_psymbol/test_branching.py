"""Unit tests for the branch tables of R and S."""

import numpy as np
import pytest

from src.base.exceptions import InconsistentBranchingError
from src.psymbol.branching import (
    biquadratic_branching,
    biquadratic_map,
    quadratic_branching,
    quadratic_map,
)
from src.psymbol.sphere import INFINITY, ONE, SpherePoint
from src.transforms.quadratic import lift_from_t


def _multiplicity_over(table, image: SpherePoint) -> int:
    return sum(bp.multiplicity for bp in table if bp.image.close(image))


@pytest.mark.unit
class TestQuadraticBranching:
    """Tests for quadratic_branching."""

    @pytest.mark.parametrize("t", [1.0, -2.5 + 1j, 3j])
    def test_every_image_has_degree_two(self, t: complex) -> None:
        d = lift_from_t(t)
        table = quadratic_branching(d.a, d.a_prime, d.A)
        for image in (SpherePoint(0), ONE, SpherePoint(d.a_prime), INFINITY):
            assert _multiplicity_over(table, image) == 2

    def test_critical_points_lie_over_one_and_a_prime(self) -> None:
        d = lift_from_t(1.5 - 0.5j)
        r = quadratic_map(d.a, d.A)
        for bp in quadratic_branching(d.a, d.a_prime, d.A):
            if bp.multiplicity == 2:
                assert abs(r(bp.preimage.value) - bp.image.value) < 1e-10

    def test_off_curve_rejected(self) -> None:
        with pytest.raises(InconsistentBranchingError):
            quadratic_branching(0.3, 0.5, 1.0)


@pytest.mark.unit
class TestBiquadraticBranching:
    """Tests for biquadratic_branching."""

    def test_schema(self) -> None:
        a = 2.0 + 0.5j
        table = biquadratic_branching(a)
        for image in (SpherePoint(0), ONE, SpherePoint(a), INFINITY):
            assert _multiplicity_over(table, image) == 4
        assert sum(1 for bp in table if bp.multiplicity == 2) == 6

    def test_ramified_points_map_to_their_images(self) -> None:
        a = 2.0 + 0.5j
        s = biquadratic_map(a)
        for bp in biquadratic_branching(a):
            if bp.multiplicity == 2 and not bp.image.is_infinite:
                assert abs(s(bp.preimage.value) - bp.image.value) < 1e-10
        assert abs(s(np.sqrt(a) * 1.000001)) > 1e4
