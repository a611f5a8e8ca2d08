"""Seeded parameter and point draws for the verification suites.

Every suite gets its own generator derived from (seed, suite index), so
adding draws to one suite never shifts the draws of another.
"""

from __future__ import annotations

from collections.abc import Callable
from typing import TypeVar

import numpy as np

from src.base.exceptions import HeunkitError
from src.kernel.params import GaussParams, HeunParams
from src.schemas.report import SamplePlan
from src.transforms.rule import TransformRule

T = TypeVar("T")

LOWER_MARGIN = 0.25
"""Minimum distance of a lower parameter from 0, -1, -2, ..."""

HEUN_A_RANGE = (1.5, 3.0)
MAX_ATTEMPTS = 1000
MAX_HALVINGS = 60
TRACE_FRACTION = 0.5
"""Largest |x| / radius allowed at every point a rule chain visits."""


def suite_rng(plan: SamplePlan, suite_index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([plan.seed, suite_index]))


def lower_distance(z: complex) -> float:
    """Distance from z to the nearest nonpositive integer."""
    nearest = min(0, round(z.real))
    return abs(z - nearest)


class Sampler:
    """Draws complex parameters and evaluation points from one generator.

    Attributes:
        rng: Source of randomness; all draws advance it in call order.
        bound: Half-width of the parameter rectangle [-b, b] x [-b i, b i].
        x_fraction: Fraction of a convergence radius points are drawn from.
    """

    def __init__(self, rng: np.random.Generator, bound: float, x_fraction: float) -> None:
        self.rng = rng
        self.bound = bound
        self.x_fraction = x_fraction

    @classmethod
    def for_suite(cls, plan: SamplePlan, suite_index: int) -> Sampler:
        return cls(suite_rng(plan, suite_index), plan.param_bound, plan.x_fraction)

    def uniform(self, low: float, high: float) -> float:
        return float(self.rng.uniform(low, high))

    def param(self, bound: float | None = None) -> complex:
        b = self.bound if bound is None else bound
        re, im = self.rng.uniform(-b, b, size=2)
        return complex(re, im)

    def lower(self, bound: float | None = None) -> complex:
        """A parameter admissible as a lower (denominator) parameter."""
        for _ in range(MAX_ATTEMPTS):
            z = self.param(bound)
            if lower_distance(z) >= LOWER_MARGIN:
                return z
        raise HeunkitError("could not draw an admissible lower parameter")

    def polar(self, r_min: float, r_max: float) -> complex:
        r = self.uniform(r_min, r_max)
        phi = self.uniform(0.0, 2 * np.pi)
        return complex(r * np.cos(phi), r * np.sin(phi))

    def heun_a(self) -> complex:
        return self.polar(*HEUN_A_RANGE)

    def point(self, radius: float) -> complex:
        """Uniform point of the disk of radius x_fraction * radius."""
        r = self.x_fraction * radius * np.sqrt(self.rng.uniform())
        phi = self.uniform(0.0, 2 * np.pi)
        return complex(r * np.cos(phi), r * np.sin(phi))

    def gauss_params(self) -> GaussParams:
        return GaussParams(self.param(), self.param(), self.lower())

    def heun_params(self, alpha: complex | None = None) -> HeunParams:
        a = self.heun_a()
        q = self.param()
        al = self.param() if alpha is None else alpha
        return HeunParams(a, q, al, self.param(), self.lower(), self.param())

    def retry(self, draw: Callable[[], T]) -> T:
        """Repeat a draw until it raises no HeunkitError.

        Raises:
            HeunkitError: No admissible draw within MAX_ATTEMPTS.
        """
        last: HeunkitError | None = None
        for _ in range(MAX_ATTEMPTS):
            try:
                return draw()
            except HeunkitError as exc:
                last = exc
        raise HeunkitError(f"no admissible draw after {MAX_ATTEMPTS} attempts: {last}")


def fits_chain(rule: TransformRule, p: object, x: complex, fraction: float = TRACE_FRACTION) -> bool:
    """Whether every (params, point) the chain visits lies within fraction of its radius."""
    radius = rule.family.radius
    return all(abs(y) <= fraction * radius(q) for q, y in rule.points_along(p, x))


def shrink_point(rule: TransformRule, p: object, x: complex) -> complex:
    """Halve x until the whole chain of the rule stays inside its disks.

    Raises:
        HeunkitError: x underflows before the chain fits.
    """
    for _ in range(MAX_HALVINGS):
        if fits_chain(rule, p, x):
            return x
        x /= 2
    raise HeunkitError("no evaluation point keeps the rule chain inside its disks", details={"rule": rule.name})


def halve_until(x: complex, accept: Callable[[complex], bool]) -> complex:
    """Halve x until accept(x) holds.

    Raises:
        HeunkitError: x underflows first.
    """
    for _ in range(MAX_HALVINGS):
        if accept(x):
            return x
        x /= 2
    raise HeunkitError("no evaluation point satisfies the domain constraint")
