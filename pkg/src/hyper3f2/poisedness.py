"""Poisedness of 3F2(a1, a2, a3; b1, b2).

Well poised: some ordering has a1 + 1 = a2 + b1 = a3 + b2. Nearly poised:
only the first equality holds. The "very" variants additionally have b1
(or b2 when well poised) equal to a1/2.
"""

from __future__ import annotations

from enum import Enum
from itertools import permutations

from src.kernel.params import ThreeF2Params

POISED_TOLERANCE = 1e-10


class PoisednessClass(str, Enum):
    GENERAL = "general"
    NEARLY = "nearly"
    NEARLY_VERY_WELL = "nearly_very_well"
    WELL = "well"
    VERY_WELL = "very_well"

    @property
    def rank(self) -> int:
        return list(PoisednessClass).index(self)


def _eq(z: complex, w: complex) -> bool:
    return abs(z - w) <= POISED_TOLERANCE * max(1.0, abs(z), abs(w))


def _classify_ordering(upper: tuple[complex, ...], lower: tuple[complex, ...]) -> PoisednessClass:
    a1, a2, a3 = upper
    b1, b2 = lower
    if not _eq(a1 + 1, a2 + b1):
        return PoisednessClass.GENERAL
    half = a1 / 2
    if _eq(a1 + 1, a3 + b2):
        if _eq(b1, half) or _eq(b2, half):
            return PoisednessClass.VERY_WELL
        return PoisednessClass.WELL
    if _eq(b1, half):
        return PoisednessClass.NEARLY_VERY_WELL
    return PoisednessClass.NEARLY


def classify_poisedness(p: ThreeF2Params) -> PoisednessClass:
    """Strongest class over all orderings of the upper and of the lower parameters."""
    best = PoisednessClass.GENERAL
    for upper in permutations(p.upper):
        for lower in permutations(p.lower):
            tag = _classify_ordering(upper, lower)
            if tag.rank > best.rank:
                best = tag
    return best
