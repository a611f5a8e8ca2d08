"""Signed permutations of labeled singular points.

A label such as ``[1+inf+][a+]`` lists the cycles of the permutation, each
point followed by its sign. Cycles start at the earliest point in the
family's point order, and fixed points are written as one-element cycles.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from src.base.exceptions import UnknownRuleError

GAUSS_POINTS = ("1", "inf")
HEUN_POINTS = ("1", "a", "inf")

_TOKEN = re.compile(r"(1|a|inf|∞)\s*([+\-−₊₋])")
_SIGN = {"+": 1, "₊": 1, "-": -1, "−": -1, "₋": -1}


@dataclass(frozen=True)
class SignedPermutation:
    """Permutation ``image[i]`` of point indices with one sign per point.

    Attributes:
        points: Point names in canonical order.
        image: image[i] is the index point i goes to.
        signs: signs[i] is the sign attached to point i (+1 or -1).
    """

    points: tuple[str, ...]
    image: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.points)
        if sorted(self.image) != list(range(n)) or len(self.signs) != n:
            raise ValueError(f"not a signed permutation of {self.points}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @classmethod
    def identity(cls, points: tuple[str, ...]) -> SignedPermutation:
        n = len(points)
        return cls(points, tuple(range(n)), (1,) * n)

    @classmethod
    def from_mapping(
        cls,
        points: tuple[str, ...],
        mapping: dict[str, str],
        signs: dict[str, int],
    ) -> SignedPermutation:
        index = {name: i for i, name in enumerate(points)}
        image = tuple(index[mapping.get(name, name)] for name in points)
        return cls(points, image, tuple(signs.get(name, 1) for name in points))

    @classmethod
    def parse(cls, text: str, points: tuple[str, ...]) -> SignedPermutation:
        """Parse bracket notation, e.g. ``[1+inf+][a+]`` or ``[1-][a+][inf-]``.

        Raises:
            UnknownRuleError: The text is not a valid label over ``points``.
        """
        index = {name: i for i, name in enumerate(points)}
        image = [-1] * len(points)
        signs = [1] * len(points)
        cycles = re.findall(r"\[([^\]]*)\]", text)
        if not cycles or re.sub(r"\[[^\]]*\]", "", text).strip():
            raise UnknownRuleError("malformed rule label", label=text)
        for cycle in cycles:
            tokens = _TOKEN.findall(cycle)
            if not tokens or _TOKEN.sub("", cycle).strip():
                raise UnknownRuleError("malformed cycle in rule label", label=text)
            members = []
            for name, sign in tokens:
                name = "inf" if name == "∞" else name
                if name not in index:
                    raise UnknownRuleError(f"unknown point {name}", label=text)
                members.append(index[name])
                signs[index[name]] = _SIGN[sign]
            for k, i in enumerate(members):
                image[i] = members[(k + 1) % len(members)]
        if sorted(image) != list(range(len(points))):
            raise UnknownRuleError("label does not describe a permutation", label=text)
        return cls(points, tuple(image), tuple(signs))

    def then(self, other: SignedPermutation) -> SignedPermutation:
        """Apply self first, then other: P -> other(self(P)), signs multiplied along the way."""
        image = tuple(other.image[self.image[i]] for i in range(len(self.points)))
        signs = tuple(self.signs[i] * other.signs[self.image[i]] for i in range(len(self.points)))
        return SignedPermutation(self.points, image, signs)

    def inverse(self) -> SignedPermutation:
        n = len(self.points)
        image = [0] * n
        signs = [1] * n
        for i in range(n):
            image[self.image[i]] = i
            signs[self.image[i]] = self.signs[i]
        return SignedPermutation(self.points, tuple(image), tuple(signs))

    @property
    def is_identity(self) -> bool:
        return self.image == tuple(range(len(self.points))) and all(s == 1 for s in self.signs)

    @property
    def is_even(self) -> bool:
        """Even number of minus signs (membership in the D-type subgroup)."""
        return self.signs.count(-1) % 2 == 0

    def order(self) -> int:
        element, k = self, 1
        while not element.is_identity:
            element = element.then(self)
            k += 1
        return k

    def cycles(self) -> list[list[int]]:
        seen: set[int] = set()
        result = []
        for start in range(len(self.points)):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.image[start]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.image[nxt]
            result.append(cycle)
        return result

    def bracket(self) -> str:
        """Bracket notation, e.g. ``[1+inf+][a+]``."""
        parts = []
        for cycle in self.cycles():
            body = "".join(
                f"{self.points[i]}{'+' if self.signs[i] > 0 else '-'}" for i in cycle
            )
            parts.append(f"[{body}]")
        return "".join(parts)

    def __str__(self) -> str:
        return self.bracket()


def coxeter_order(kind: str, n: int) -> int:
    """Order of the Coxeter group B_n (2^n n!) or D_n (2^(n-1) n!)."""
    if kind.upper() == "B":
        return 2**n * math.factorial(n)
    if kind.upper() == "D":
        return 2 ** (n - 1) * math.factorial(n)
    raise ValueError(f"unknown Coxeter type {kind}")
