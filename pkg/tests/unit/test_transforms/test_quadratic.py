"""Unit tests for the quadratic and biquadratic transformations."""

import numpy as np
import pytest

from src.base.exceptions import DomainError, InvalidParameterError, PunctureError
from src.transforms.quadratic import (
    QuadraticLiftData,
    biquad_forms_residual,
    biquad_map_S,
    biquadratic_rule,
    biquadratic_symbol_check,
    constraint_residual,
    h_duplication_check,
    lift_from_t,
    multiplier,
    quad_map_R,
    quadratic_rule,
    quadratic_symbol_check,
    relative_constraint_residual,
)
from tests.fixtures.factories import random_complex


def _relative(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs))


@pytest.mark.unit
class TestConstraintCurve:
    """Tests for the rational parametrization of the constraint curve."""

    @pytest.mark.parametrize("t", [1.0, 2.5 - 1j, -1.5 + 0.5j, 10j, -12.0])
    def test_points_lie_on_curve(self, t: complex) -> None:
        d = lift_from_t(t)
        assert relative_constraint_residual(d.a, d.a_prime) < 1e-12
        assert abs(d.A - multiplier(d.a, d.a_prime)) < 1e-10 * max(1.0, abs(d.A))
        assert d.t == t

    def test_random_parameters(self, rng: np.random.Generator) -> None:
        for _ in range(50):
            d = lift_from_t(random_complex(rng, 6.0))
            assert relative_constraint_residual(d.a, d.a_prime) < 1e-12
            assert abs(d.A * d.a) ** 2 == pytest.approx(abs(d.a_prime), rel=1e-10)

    def test_known_point(self) -> None:
        d = lift_from_t(1)
        assert abs(d.a - 9 / 25) < 1e-15
        assert abs(d.a_prime - 1 / 81) < 1e-15
        assert abs(d.A - 25 / 81) < 1e-15

    @pytest.mark.parametrize("t", [0, -4, -8, -4 + 1e-12])
    def test_punctures(self, t: complex) -> None:
        with pytest.raises(PunctureError):
            lift_from_t(t)

    def test_off_curve_data_rejected(self) -> None:
        with pytest.raises(InvalidParameterError, match="off the quadratic constraint curve"):
            QuadraticLiftData(0.3, 0.2, 1.0)
        assert abs(constraint_residual(0.3, 0.2)) > 0.1


@pytest.mark.unit
class TestQuadraticRule:
    """Tests for the quadratic rule."""

    @pytest.mark.parametrize("t", [1.0, 3.0 + 1j, -2.0 + 2j])
    def test_rule_holds(self, t: complex) -> None:
        d = lift_from_t(t)
        alpha, gamma, q = 0.3 + 0.1j, 1.2 - 0.2j, 0.4 + 0.3j
        x = 0.05 * min(d.source_radius, d.target_radius / max(1.0, abs(d.A * d.a)))
        lhs, rhs = quadratic_rule(d, alpha, gamma, q, x)
        assert _relative(lhs, rhs) < 1e-10

    def test_symbols_match(self) -> None:
        d = lift_from_t(2.0 - 0.5j)
        assert quadratic_symbol_check(d, 0.3 + 0.1j, 1.2 - 0.2j)

    def test_map_pole(self) -> None:
        with pytest.raises(DomainError):
            quad_map_R(lift_from_t(1), 1)

    def test_outside_target_disk(self) -> None:
        d = lift_from_t(1)
        with pytest.raises(DomainError):
            quadratic_rule(d, 0.3, 1.2, 0.4, -0.3)


@pytest.mark.unit
class TestBiquadraticRule:
    """Tests for the biquadratic rule and H duplication."""

    @pytest.mark.parametrize("x", [0.05, -0.04 + 0.03j, 0.1j])
    def test_three_forms_agree(self, x: complex) -> None:
        assert biquad_forms_residual(2.0 + 0.5j, x) < 1e-12

    def test_rule_holds(self) -> None:
        lhs, rhs = biquadratic_rule(2.0 + 0.5j, 0.3 - 0.2j, 1.3 + 0.1j, 0.05 + 0.02j)
        assert _relative(lhs, rhs) < 1e-10

    def test_symbols_match(self) -> None:
        assert biquadratic_symbol_check(2.0 + 0.5j, 1.3 + 0.1j)

    def test_h_duplication(self) -> None:
        assert h_duplication_check(-1.8 + 1.0j, 0.6 - 0.4j, 0.04 - 0.05j) < 1e-10

    def test_pole(self) -> None:
        with pytest.raises(DomainError):
            biquad_map_S(4.0, 2.0)

    def test_unknown_form(self) -> None:
        with pytest.raises(ValueError):
            biquad_map_S(2.0, 0.1, "sum")  # type: ignore[arg-type]
