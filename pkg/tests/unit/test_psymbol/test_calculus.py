"""Unit tests for the P-symbol exponent calculus."""

import numpy as np
import pytest

from src.base.exceptions import InconsistentBranchingError, MissingColumnError, ShapeError
from src.kernel.params import GaussParams, HeunParams, ThreeF2Params
from src.psymbol.calculus import (
    derivative_symbol,
    f_homotopy,
    fuchs_sum,
    fuchs_target,
    mobius_branching,
    mobius_lift,
    normalize,
    rational_lift,
    satisfies_fuchs,
)
from src.psymbol.maps import BranchPoint, MobiusMap, RationalMap
from src.psymbol.sphere import INFINITY, ONE, ZERO, SpherePoint
from src.psymbol.standard import clausen_symbol, ghe_symbol, he_symbol
from src.psymbol.symbol import PSymbol
from src.transforms.heun import derivative_target
from tests.fixtures.factories import random_complex


@pytest.mark.unit
class TestFuchs:
    """Tests for Fuchs's relation on the standard symbols."""

    def test_gauss(self, gauss_params: GaussParams) -> None:
        assert satisfies_fuchs(ghe_symbol(gauss_params))
        assert fuchs_target(ghe_symbol(gauss_params)) == 1

    def test_heun(self, heun_params: HeunParams) -> None:
        p = he_symbol(heun_params)
        assert abs(fuchs_sum(p) - 2) < 1e-12
        assert satisfies_fuchs(p)

    def test_clausen(self) -> None:
        p = clausen_symbol(ThreeF2Params(0.3, 0.7 + 0.1j, 1.1, 1.9, 2.3 - 0.4j))
        assert p.order == 3
        assert satisfies_fuchs(p)

    def test_violation_detected(self) -> None:
        p = PSymbol.build([(0, (0, 0.5)), (1, (0, 0.5)), (None, (0.5, 0.5))])
        assert not satisfies_fuchs(p)


@pytest.mark.unit
class TestMobiusLift:
    """Tests for mobius_lift and mobius_branching."""

    def test_pfaff_map_swaps_one_and_infinity(self, heun_params: HeunParams) -> None:
        p = he_symbol(heun_params)
        lifted = mobius_lift(p, MobiusMap(1, 0, 1, -1))
        a = heun_params.a
        assert lifted.exponents_at(INFINITY) == p.exponents_at(ONE)
        assert lifted.exponents_at(ONE) == p.exponents_at(INFINITY)
        assert lifted.find(SpherePoint(a / (a - 1))) is not None
        assert satisfies_fuchs(lifted)

    def test_branching_route_agrees(self, heun_params: HeunParams) -> None:
        p = he_symbol(heun_params)
        m = MobiusMap(2, 0, 1, 3)
        via_table = rational_lift(p, RationalMap.from_mobius(m), mobius_branching(p, m))
        assert via_table.equivalent(mobius_lift(p, m))

    def test_lift_is_functorial(self, heun_params: HeunParams, rng: np.random.Generator) -> None:
        p = he_symbol(heun_params)
        for _ in range(10):
            m1 = MobiusMap(*(random_complex(rng, 2.0) for _ in range(4)))
            m2 = MobiusMap(*(random_complex(rng, 2.0) for _ in range(4)))
            stepwise = mobius_lift(mobius_lift(p, m1), m2)
            assert stepwise.equivalent(mobius_lift(p, m1.compose(m2)))

    def test_lift_by_fixed_maps(self, heun_params: HeunParams) -> None:
        p = he_symbol(heun_params)
        m1, m2 = MobiusMap(1, 2, 3, 5), MobiusMap(2, -1, 1, 4)
        assert mobius_lift(mobius_lift(p, m1), m2).equivalent(mobius_lift(p, m1.compose(m2)))


@pytest.mark.unit
class TestFHomotopy:
    """Tests for f_homotopy."""

    def test_shifts_point_and_infinity(self, gauss_params: GaussParams) -> None:
        p = ghe_symbol(gauss_params)
        shifted = f_homotopy(p, ONE, 0.3)
        before, after = p.exponents_at(ONE), shifted.exponents_at(ONE)
        assert all(abs((b - 0.3) - c) < 1e-15 for b, c in zip(before, after))
        before, after = p.exponents_at(INFINITY), shifted.exponents_at(INFINITY)
        assert all(abs((b + 0.3) - c) < 1e-15 for b, c in zip(before, after))
        assert satisfies_fuchs(shifted)

    def test_adds_missing_column(self, gauss_params: GaussParams) -> None:
        p = ghe_symbol(gauss_params)
        shifted = f_homotopy(p, SpherePoint(3), 0.5)
        assert len(shifted) == 4
        assert shifted.exponents_at(SpherePoint(3)) == (-0.5, 0.5)

    def test_missing_column_without_auto_add(self, gauss_params: GaussParams) -> None:
        with pytest.raises(MissingColumnError):
            f_homotopy(ghe_symbol(gauss_params), SpherePoint(3), 0.5, auto_add=False)

    def test_infinite_point_rejected(self, gauss_params: GaussParams) -> None:
        with pytest.raises(ShapeError):
            f_homotopy(ghe_symbol(gauss_params), INFINITY, 0.5)

    def test_zero_shift_is_identity(self, gauss_params: GaussParams) -> None:
        p = ghe_symbol(gauss_params)
        assert f_homotopy(p, ONE, 0) is p

    @pytest.mark.parametrize("zeta", [0.37 + 0.1j, -1.25, 2j])
    def test_opposite_shift_restores_symbol(self, heun_params: HeunParams, zeta: complex) -> None:
        p = he_symbol(heun_params)
        x0 = SpherePoint(heun_params.a)
        assert f_homotopy(f_homotopy(p, x0, zeta), x0, -zeta).equivalent(p)

    def test_opposite_shift_at_new_point(self, gauss_params: GaussParams) -> None:
        p = ghe_symbol(gauss_params)
        x0 = SpherePoint(2.3 + 0.4j)
        back = f_homotopy(f_homotopy(p, x0, 0.37 + 0.1j), x0, -(0.37 + 0.1j))
        assert back.drop_ordinary().equivalent(p)


@pytest.mark.unit
class TestRationalLift:
    """Tests for rational_lift."""

    def test_squaring_map(self) -> None:
        # y(x^2) for a Gauss symbol: 0 and inf ramify, 1 splits into ±1
        p = PSymbol.build([(0, (0, 0.25)), (1, (0, 0.3)), (None, (0.2, 0.25))])
        square = RationalMap.from_mobius(MobiusMap.identity())
        square = RationalMap(square.numerator * square.numerator, square.denominator)
        table = [
            BranchPoint(ZERO, ZERO, 2),
            BranchPoint(INFINITY, INFINITY, 2),
            BranchPoint(ONE, ONE, 1),
            BranchPoint(SpherePoint(-1), ONE, 1),
        ]
        lifted = rational_lift(p, square, table)
        assert lifted.exponents_at(ZERO) == (0, 0.5)
        assert lifted.exponents_at(INFINITY) == (0.4, 0.5)
        assert lifted.exponents_at(SpherePoint(-1)) == (0, 0.3)
        assert satisfies_fuchs(lifted)

    def test_multiplicities_must_sum_to_degree(self) -> None:
        p = PSymbol.build([(0, (0, 0.25)), (1, (0, 0.3)), (None, (0.2, 0.25))])
        square = RationalMap.from_mobius(MobiusMap.identity())
        square = RationalMap(square.numerator * square.numerator, square.denominator)
        table = [
            BranchPoint(ZERO, ZERO, 2),
            BranchPoint(INFINITY, INFINITY, 2),
            BranchPoint(ONE, ONE, 1),
        ]
        with pytest.raises(InconsistentBranchingError):
            rational_lift(p, square, table)


@pytest.mark.unit
class TestNormalize:
    """Tests for normalize."""

    def test_moves_columns_to_standard_points(self) -> None:
        p = PSymbol.build([(2, (0.3, 0.7)), (5, (0.1, 0.4)), (None, (-0.25, -0.25))])
        result, m, shifts = normalize(p)
        for point in (ZERO, ONE, INFINITY):
            assert result.find(point) is not None
        assert result.columns[result.find(ZERO)].has_zero()
        assert result.columns[result.find(ONE)].has_zero()
        assert len(shifts) == 2
        assert m.apply(SpherePoint(2)).close(ZERO)
        assert abs(fuchs_sum(result) - fuchs_sum(p)) < 1e-12

    def test_standard_symbol_keeps_locations(self, heun_params: HeunParams) -> None:
        p = he_symbol(heun_params)
        result, m, shifts = normalize(p, (ZERO, ONE, INFINITY))
        assert result.equivalent(p)
        assert shifts == []
        assert m == MobiusMap.identity()

    def test_gauss_symbol_is_fixed_by_default(self, gauss_params: GaussParams) -> None:
        p = ghe_symbol(gauss_params)
        result, m, shifts = normalize(p)
        assert m == MobiusMap.identity()
        assert shifts == []
        assert result.equivalent(p)

    def test_three_smallest_finite_points_beat_infinity(self) -> None:
        p = PSymbol.build(
            [(2, (0, 0.3)), (5, (0, 0.2)), (7, (0, 0.4)), (None, (0.6, 0.5))]
        )
        result, m, _ = normalize(p)
        assert m.apply(SpherePoint(2)).close(ZERO)
        assert m.apply(SpherePoint(5)).close(ONE)
        assert m.apply(SpherePoint(7)).is_infinite
        # infinity lands on m(inf) = (5 - 7) / (5 - 2)
        assert m.apply(INFINITY).close(SpherePoint(-2 / 3))
        assert result.find(SpherePoint(-2 / 3)) is not None
        assert abs(fuchs_sum(result) - fuchs_sum(p)) < 1e-12

    def test_explicit_points_must_be_columns(self, gauss_params: GaussParams) -> None:
        with pytest.raises(ShapeError):
            normalize(ghe_symbol(gauss_params), (ZERO, SpherePoint(3), INFINITY))

    def test_rejects_small_symbols(self) -> None:
        with pytest.raises(ShapeError):
            normalize(PSymbol.build([(0, (0, 0.5)), (None, (1, 0.5))]))


@pytest.mark.unit
class TestDerivativeSymbol:
    """Tests for derivative_symbol."""

    @pytest.mark.parametrize("order", [0, 1, 2, 3])
    def test_matches_target_parameters(self, heun_params: HeunParams, order: int) -> None:
        p = heun_params.replace(alpha=1 - order)
        expected = he_symbol(derivative_target(p, order))
        assert derivative_symbol(he_symbol(p), order).equivalent(expected)

    def test_requires_one_minus_n_at_infinity(self, heun_params: HeunParams) -> None:
        with pytest.raises(ShapeError):
            derivative_symbol(he_symbol(heun_params.replace(alpha=0.25, beta=0.5)), 2)
