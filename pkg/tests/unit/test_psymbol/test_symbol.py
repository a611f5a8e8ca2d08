"""Unit tests for sphere points, P-symbols and Möbius maps."""

import pytest
from numpy.polynomial import Polynomial

from src.base.exceptions import DegenerateError, ShapeError
from src.psymbol.maps import MobiusMap, RationalMap
from src.psymbol.sphere import INFINITY, ONE, ZERO, SpherePoint, format_complex
from src.psymbol.symbol import Column, PSymbol


@pytest.mark.unit
class TestSpherePoint:
    """Tests for SpherePoint."""

    def test_infinity(self) -> None:
        assert INFINITY.is_infinite
        assert INFINITY.close(SpherePoint(None))
        assert not INFINITY.close(ZERO)

    def test_relative_closeness(self) -> None:
        assert SpherePoint(1e6).close(SpherePoint(1e6 + 1e-5))
        assert not SpherePoint(1.0).close(SpherePoint(1.0 + 1e-6))

    def test_sort_key_puts_infinity_last(self) -> None:
        points = [INFINITY, SpherePoint(2), SpherePoint(-1 + 1j), ZERO]
        ordered = sorted(points, key=SpherePoint.sort_key)
        assert ordered[0] == SpherePoint(-1 + 1j)
        assert ordered[-1] is INFINITY

    def test_format(self) -> None:
        assert format_complex(1.5) == "1.5"
        assert format_complex(1 - 2j) == "1-2j"
        assert INFINITY.render() == "inf"


@pytest.mark.unit
class TestPSymbol:
    """Tests for PSymbol."""

    def test_build_and_lookup(self) -> None:
        p = PSymbol.build([(0, (0, 0.5)), (1, (0, -0.5)), (None, (1, 2))])
        assert len(p) == 3
        assert p.order == 2
        assert p.find(INFINITY) == 2
        assert p.exponents_at(ONE) == (0, -0.5)
        assert p.exponents_at(SpherePoint(3)) is None

    def test_rejects_duplicate_location(self) -> None:
        with pytest.raises(ShapeError, match="duplicate"):
            PSymbol.build([(0, (0, 1)), (0, (0, 2))])

    def test_rejects_wrong_order(self) -> None:
        with pytest.raises(ShapeError, match="wrong number"):
            PSymbol.build([(0, (0, 1)), (1, (0, 1, 2))])

    def test_equivalent_up_to_order(self) -> None:
        p = PSymbol.build([(0, (0, 0.5)), (None, (1, 2))])
        q = PSymbol.build([(None, (2, 1)), (0, (0.5, 0))])
        assert p.equivalent(q)
        assert not p.equivalent(PSymbol.build([(0, (0, 0.5)), (None, (1, 3))]))

    def test_drop_ordinary(self) -> None:
        p = PSymbol.build([(0, (0, 0.5)), (2, (1, 0)), (None, (1, 2))])
        dropped = p.drop_ordinary()
        assert len(dropped) == 2
        assert dropped.find(SpherePoint(2)) is None

    def test_infinity_column_is_never_ordinary(self) -> None:
        assert not Column(INFINITY, (0, 1)).is_ordinary()

    def test_render(self) -> None:
        text = PSymbol.build([(0, (0, 0.5)), (None, (1, 2))]).render()
        header, rule, *rows = text.splitlines()
        assert "inf" in header
        assert set(rule) == {"-"}
        assert len(rows) == 2


@pytest.mark.unit
class TestMobiusMap:
    """Tests for MobiusMap and RationalMap."""

    def test_sending(self) -> None:
        z1, z2, z3 = SpherePoint(2), SpherePoint(1j), SpherePoint(-3)
        m = MobiusMap.sending(z1, z2, z3)
        assert m.apply(z1).close(ZERO)
        assert m.apply(z2).close(ONE)
        assert m.apply(z3).is_infinite

    def test_sending_with_infinity(self) -> None:
        m = MobiusMap.sending(SpherePoint(2), SpherePoint(5), INFINITY)
        assert m.apply(INFINITY).is_infinite
        assert m.apply(SpherePoint(5)).close(ONE)

    def test_inverse_and_compose(self) -> None:
        m = MobiusMap(1 + 1j, 2, -0.5, 3)
        identity = m.compose(m.inverse())
        x = 0.3 - 0.7j
        assert abs(identity(x) - x) < 1e-14

    def test_degenerate(self) -> None:
        with pytest.raises(DegenerateError):
            MobiusMap(1, 2, 2, 4)

    def test_fixes_zero(self) -> None:
        assert MobiusMap(1, 0, 1, -1).fixes_zero()
        assert not MobiusMap(1, 1, 0, 1).fixes_zero()

    def test_rational_map_degree(self) -> None:
        r = RationalMap(Polynomial([0, 0, 1]), Polynomial([1, -1]))
        assert r.degree == 2
        assert abs(r(0.5) - 0.5) < 1e-15

    def test_rational_map_common_root(self) -> None:
        with pytest.raises(DegenerateError, match="share a root"):
            RationalMap(Polynomial([-1, 1]), Polynomial([-1, 0, 1]))
