"""Coefficient generation and truncated power-series evaluation.

Coefficients come from the first-order recurrences of 2F1 and 3F2 and the
three-term recurrence of the local Heun function. Evaluation sums terms
lazily until the tail is negligible and reports a geometric tail bound.
"""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from src.base.exceptions import (
    DomainError,
    InvalidParameterError,
    NoConvergenceError,
    ShapeError,
)
from src.base.logging import get_logger
from src.kernel.params import EvalPolicy, GaussParams, HeunParams, ThreeF2Params

logger = get_logger(__name__)

DEFAULT_POLICY = EvalPolicy()

_STOP_RUN = 3
_RATIO_WINDOW = 5
_RATIO_CLAMP = 0.99


@dataclass(frozen=True, eq=False)
class CoefficientSequence:
    """Truncated coefficients c(0..N) of a power series.

    Attributes:
        coeffs: Complex coefficients indexed from 0.
        source: Tag naming the recurrence and parameters.
        radius: Convergence radius of the full series.
    """

    coeffs: np.ndarray
    source: str
    radius: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", np.asarray(self.coeffs, dtype=complex))
        if self.coeffs.ndim != 1 or self.coeffs.size == 0:
            raise ShapeError(
                "coefficients must be a non-empty 1-D array",
                expected="1-D array",
                actual=str(self.coeffs.shape),
            )

    def __len__(self) -> int:
        return int(self.coeffs.size)

    def __getitem__(self, n: int) -> complex:
        return complex(self.coeffs[n])

    def tolist(self) -> list[complex]:
        return [complex(c) for c in self.coeffs]


def iter_gauss(p: GaussParams) -> Iterator[complex]:
    """Yield 2F1 coefficients indefinitely."""
    c = 1 + 0j
    for n in itertools.count():
        yield c
        denom = (n + p.gamma) * (n + 1)
        if denom == 0:
            raise InvalidParameterError(
                "gamma hit a nonpositive integer", parameter="gamma", value=p.gamma
            )
        c = c * (n + p.alpha) * (n + p.beta) / denom


def iter_heun(p: HeunParams) -> Iterator[complex]:
    """Yield local Heun coefficients indefinitely (c(0)=1, c(-1)=0)."""
    a, q = p.a, p.q
    alpha, beta, gamma, delta, eps = p.alpha, p.beta, p.gamma, p.delta, p.epsilon
    prev, cur = 0j, 1 + 0j
    for n in itertools.count(-1):
        yield cur
        lead = (n + gamma + 1) * (n + 2) * a
        if lead == 0:
            raise InvalidParameterError(
                "leading recurrence coefficient vanished", parameter="gamma", value=gamma
            )
        middle = (n + 1) * (n + gamma + delta) * a + (n + 1) * (n + gamma + eps) + q
        prev, cur = cur, (middle * cur - (n + alpha) * (n + beta) * prev) / lead


def iter_3f2(p: ThreeF2Params) -> Iterator[complex]:
    """Yield 3F2 coefficients indefinitely."""
    d = 1 + 0j
    for n in itertools.count():
        yield d
        denom = (n + p.b1) * (n + p.b2) * (n + 1)
        if denom == 0:
            raise InvalidParameterError("lower parameter hit a pole", parameter="b1/b2")
        d = d * (n + p.a1) * (n + p.a2) * (n + p.a3) / denom


def _take(source: Iterator[complex], n_max: int) -> np.ndarray:
    if n_max < 0:
        raise ShapeError("n_max must be nonnegative", expected=">= 0", actual=str(n_max))
    return np.fromiter(itertools.islice(source, n_max + 1), dtype=complex, count=n_max + 1)


def gauss_coeffs(p: GaussParams, n_max: int) -> CoefficientSequence:
    """Coefficients c(0..n_max) of 2F1(alpha, beta; gamma; x)."""
    coeffs = _take(iter_gauss(p), n_max)
    return CoefficientSequence(coeffs, f"2F1{p.as_tuple()}", 1.0)


def heun_coeffs(p: HeunParams, n_max: int) -> CoefficientSequence:
    """Coefficients c(0..n_max) of Hl(a, q; alpha, beta; gamma, delta; x)."""
    coeffs = _take(iter_heun(p), n_max)
    logger.debug("Generated Heun coefficients", n_max=n_max)
    return CoefficientSequence(coeffs, f"Hl{p.as_tuple()}", p.radius)


def p3f2_coeffs(p: ThreeF2Params, n_max: int) -> CoefficientSequence:
    """Coefficients d(0..n_max) of 3F2(a1, a2, a3; b1, b2; x)."""
    coeffs = _take(iter_3f2(p), n_max)
    return CoefficientSequence(coeffs, f"3F2{(p.a1, p.a2, p.a3, p.b1, p.b2)}", 1.0)


def _sum_series(
    coeffs: Iterator[complex],
    x: complex,
    radius: float,
    policy: EvalPolicy,
) -> tuple[complex, float]:
    """Sum c(n) x**n with the small-term stopping rule and a geometric tail bound."""
    x = complex(x)
    if abs(x) >= radius * (1 - policy.domain_margin):
        raise DomainError(
            "point outside the safe convergence disk",
            point=x,
            radius=radius * (1 - policy.domain_margin),
        )
    first = complex(next(coeffs))
    if x == 0:
        return first, 0.0

    partial = first
    power = 1 + 0j
    mags: deque[float] = deque([abs(first)], maxlen=_RATIO_WINDOW + 1)
    run = 0
    for n, c in enumerate(coeffs, start=1):
        if n >= policy.max_terms:
            raise NoConvergenceError(
                "series did not converge", terms=policy.max_terms, tail=mags[-1]
            )
        power *= x
        term = c * power
        partial += term
        mag = abs(term)
        mags.append(mag)
        rel = mag / abs(partial) if partial != 0 else (0.0 if mag == 0 else np.inf)
        run = run + 1 if (mag < policy.abs_tol and rel < policy.rel_tol) else 0
        if run >= _STOP_RUN:
            return partial, _tail_bound(mags)
    raise NoConvergenceError("coefficient source exhausted", terms=policy.max_terms)


def _tail_bound(mags: deque[float]) -> float:
    values = list(mags)
    rho = 0.0
    for prev, cur in itertools.pairwise(values):
        if prev == 0:
            ratio = 0.0 if cur == 0 else np.inf
        else:
            ratio = cur / prev
        rho = max(rho, ratio)
    rho = min(rho, _RATIO_CLAMP)
    return values[-1] / (1 - rho)


def eval_series(
    c: CoefficientSequence,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> tuple[complex, float]:
    """Evaluate a stored coefficient sequence at x.

    Returns:
        (value, err_estimate) with the tail bound as the error estimate.

    Raises:
        DomainError: x is too close to the convergence boundary.
        NoConvergenceError: The stored coefficients ran out first.
    """
    return _sum_series(iter(c.tolist()), x, c.radius, policy)


def eval_2F1(p: GaussParams, x: complex, policy: EvalPolicy = DEFAULT_POLICY) -> complex:  # noqa: N802
    return _sum_series(iter_gauss(p), x, 1.0, policy)[0]


def eval_Hl(p: HeunParams, x: complex, policy: EvalPolicy = DEFAULT_POLICY) -> complex:  # noqa: N802
    return _sum_series(iter_heun(p), x, p.radius, policy)[0]


def eval_3F2(p: ThreeF2Params, x: complex, policy: EvalPolicy = DEFAULT_POLICY) -> complex:  # noqa: N802
    return _sum_series(iter_3f2(p), x, 1.0, policy)[0]


def series_derivative(c: CoefficientSequence, N: int) -> CoefficientSequence:  # noqa: N803
    """Coefficients of the N-th derivative: k -> c(k+N) (k+N)!/k!."""
    if N < 0 or N > len(c) - 1:
        raise ShapeError(
            "derivative order out of range", expected=f"0..{len(c) - 1}", actual=str(N)
        )
    if N == 0:
        return c
    k = np.arange(len(c) - N, dtype=float)
    falling = np.ones_like(k)
    for j in range(1, N + 1):
        falling *= k + j
    return CoefficientSequence(c.coeffs[N:] * falling, f"D^{N} {c.source}", c.radius)
