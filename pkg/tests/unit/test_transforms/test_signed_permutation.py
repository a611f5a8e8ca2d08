"""Unit tests for signed-permutation labels."""

import pytest

from src.base.exceptions import UnknownRuleError
from src.transforms.signed_permutation import (
    GAUSS_POINTS,
    HEUN_POINTS,
    SignedPermutation,
    coxeter_order,
)


@pytest.mark.unit
class TestParse:
    """Tests for SignedPermutation.parse and bracket."""

    @pytest.mark.parametrize(
        "label",
        ["[1+][a+][inf+]", "[1+inf+][a+]", "[1+a+inf+]", "[1-][a+][inf-]", "[1+inf-a+]"],
    )
    def test_bracket_round_trip(self, label: str) -> None:
        assert SignedPermutation.parse(label, HEUN_POINTS).bracket() == label

    def test_alternative_spellings(self) -> None:
        plain = SignedPermutation.parse("[1+inf+][a+]", HEUN_POINTS)
        fancy = SignedPermutation.parse("[1₊∞₊][a₊]", HEUN_POINTS)
        assert plain == fancy

    def test_cycle_rotation_is_canonicalized(self) -> None:
        p = SignedPermutation.parse("[inf+1+]", GAUSS_POINTS)
        assert p.bracket() == "[1+inf+]"

    @pytest.mark.parametrize("label", ["", "1+inf+", "[1+x+]", "[1+a+]", "[1 inf]", "[1+][1-]"])
    def test_malformed(self, label: str) -> None:
        with pytest.raises(UnknownRuleError):
            SignedPermutation.parse(label, HEUN_POINTS)


@pytest.mark.unit
class TestAlgebra:
    """Tests for composition, inverse and order."""

    def test_then_follows_points(self) -> None:
        cycle = SignedPermutation.parse("[1+a+inf+]", HEUN_POINTS)
        assert cycle.then(cycle).bracket() == "[1+inf+a+]"
        assert cycle.then(cycle).then(cycle).is_identity

    def test_signs_multiply(self) -> None:
        flip = SignedPermutation.parse("[1-][a+][inf-]", HEUN_POINTS)
        assert flip.then(flip).is_identity
        assert flip.is_even

    def test_inverse(self) -> None:
        p = SignedPermutation.parse("[1-a+inf-]", HEUN_POINTS)
        assert p.then(p.inverse()).is_identity
        assert p.inverse().then(p).is_identity

    def test_order(self) -> None:
        assert SignedPermutation.parse("[1+a+inf+]", HEUN_POINTS).order() == 3
        assert SignedPermutation.parse("[1-a+inf+]", HEUN_POINTS).order() == 6
        assert SignedPermutation.identity(GAUSS_POINTS).order() == 1

    def test_odd_sign_count(self) -> None:
        assert not SignedPermutation.parse("[1+][inf-]", GAUSS_POINTS).is_even

    def test_rejects_bad_image(self) -> None:
        with pytest.raises(ValueError):
            SignedPermutation(GAUSS_POINTS, (0, 0), (1, 1))


@pytest.mark.unit
class TestCoxeterOrder:
    """Tests for coxeter_order."""

    @pytest.mark.parametrize(
        ("kind", "n", "order"),
        [("B", 2, 8), ("D", 2, 4), ("B", 3, 48), ("D", 3, 24), ("d", 3, 24)],
    )
    def test_orders(self, kind: str, n: int, order: int) -> None:
        assert coxeter_order(kind, n) == order

    def test_unknown_type(self) -> None:
        with pytest.raises(ValueError):
            coxeter_order("E", 6)
