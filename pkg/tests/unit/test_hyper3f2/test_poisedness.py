"""Unit tests for poisedness classification."""

import pytest

from src.hyper3f2.poisedness import PoisednessClass, classify_poisedness
from src.kernel.params import ThreeF2Params


@pytest.mark.unit
class TestClassifyPoisedness:
    """Tests for classify_poisedness."""

    @pytest.mark.parametrize(
        ("params", "expected"),
        [
            ((0.3, 0.7, 1.1, 1.9, 2.3), PoisednessClass.GENERAL),
            ((1.0, 0.5, 0.2, 1.5, 0.9), PoisednessClass.NEARLY),
            ((1.0, 0.5, 0.7, 1.5, 1.3), PoisednessClass.WELL),
        ],
    )
    def test_classes(self, params: tuple[float, ...], expected: PoisednessClass) -> None:
        assert classify_poisedness(ThreeF2Params(*params)) is expected

    def test_ordering_does_not_matter(self) -> None:
        forward = ThreeF2Params(1.0, 0.5, 0.7, 1.5, 1.3)
        shuffled = ThreeF2Params(0.7, 1.0, 0.5, 1.3, 1.5)
        assert classify_poisedness(forward) is classify_poisedness(shuffled)

    def test_rank_order(self) -> None:
        ranks = [c.rank for c in PoisednessClass]
        assert ranks == sorted(ranks)
        assert PoisednessClass.VERY_WELL.rank > PoisednessClass.WELL.rank
