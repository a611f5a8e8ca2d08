"""Unit tests for seeded draws."""

import numpy as np
import pytest

from src.base.exceptions import HeunkitError
from src.kernel.params import GaussParams
from src.schemas.report import SamplePlan
from src.transforms.gauss import EULER, PFAFF
from src.verifier.sampling import (
    LOWER_MARGIN,
    Sampler,
    fits_chain,
    halve_until,
    lower_distance,
    shrink_point,
    suite_rng,
)


@pytest.mark.unit
class TestSeeding:
    """Tests for per-suite generators."""

    def test_same_seed_same_draws(self) -> None:
        plan = SamplePlan(seed=11)
        first = suite_rng(plan, 3).uniform(size=4)
        second = suite_rng(plan, 3).uniform(size=4)
        assert np.array_equal(first, second)

    def test_suites_are_independent(self) -> None:
        plan = SamplePlan(seed=11)
        assert not np.array_equal(suite_rng(plan, 0).uniform(size=4), suite_rng(plan, 1).uniform(size=4))

    def test_sampler_for_suite(self) -> None:
        plan = SamplePlan(seed=2, param_bound=0.5, x_fraction=0.1)
        a = Sampler.for_suite(plan, 0)
        b = Sampler.for_suite(plan, 0)
        assert a.gauss_params() == b.gauss_params()
        assert a.bound == 0.5


@pytest.mark.unit
class TestDraws:
    """Tests for the individual draw helpers."""

    def test_lower_distance(self) -> None:
        assert lower_distance(-2.1 + 0j) == pytest.approx(0.1)
        assert lower_distance(0.5 + 0j) == pytest.approx(0.5)
        assert lower_distance(3 + 0j) == pytest.approx(3.0)

    def test_lower_avoids_poles(self, rng: np.random.Generator) -> None:
        sampler = Sampler(rng, 2.0, 0.2)
        assert all(lower_distance(sampler.lower()) >= LOWER_MARGIN for _ in range(50))

    def test_point_inside_disk(self, rng: np.random.Generator) -> None:
        sampler = Sampler(rng, 2.0, 0.2)
        assert all(abs(sampler.point(0.5)) <= 0.1 for _ in range(50))

    def test_heun_a_annulus(self, rng: np.random.Generator) -> None:
        sampler = Sampler(rng, 2.0, 0.2)
        for _ in range(20):
            assert 1.5 <= abs(sampler.heun_params().a) <= 3.0

    def test_retry_gives_up(self, rng: np.random.Generator) -> None:
        sampler = Sampler(rng, 2.0, 0.2)

        def never() -> None:
            raise HeunkitError("inadmissible")

        with pytest.raises(HeunkitError, match="no admissible draw"):
            sampler.retry(never)


@pytest.mark.unit
class TestShrinking:
    """Tests for keeping rule chains inside their disks."""

    def test_shrink_point(self) -> None:
        p = GaussParams(0.3, 0.7, 1.4)
        x = shrink_point(PFAFF, p, 0.9)
        assert x == pytest.approx(0.225)
        assert fits_chain(PFAFF, p, x)

    def test_identity_argument_only_needs_the_disk(self) -> None:
        assert shrink_point(EULER, GaussParams(0.3, 0.7, 1.4), 0.4) == 0.4

    def test_halve_until_fails(self) -> None:
        with pytest.raises(HeunkitError):
            halve_until(1.0, lambda _: False)
