"""Riemann P-symbols: singular locations and their exponent columns."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from src.base.exceptions import ShapeError
from src.psymbol.sphere import LOCATION_TOLERANCE, SpherePoint, format_complex

EXPONENT_TOLERANCE = 1e-10


@dataclass(frozen=True)
class Column:
    location: SpherePoint
    exponents: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(complex(e) for e in self.exponents))

    def is_ordinary(self, tol: float = EXPONENT_TOLERANCE) -> bool:
        """Finite column whose exponents are 0, 1, ..., k-1."""
        if self.location.is_infinite:
            return False
        return _same_multiset(self.exponents, tuple(range(len(self.exponents))), tol)

    def has_zero(self, tol: float = EXPONENT_TOLERANCE) -> bool:
        return any(abs(e) <= tol for e in self.exponents)


def _same_multiset(xs: Sequence[complex], ys: Sequence[complex], tol: float) -> bool:
    if len(xs) != len(ys):
        return False
    remaining = list(ys)
    for x in xs:
        for i, y in enumerate(remaining):
            if abs(x - y) <= tol * max(1.0, abs(x)):
                del remaining[i]
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PSymbol:
    """Ordered columns of (location, exponents), all of the same order.

    Columns keep insertion order; use :meth:`equivalent` to compare symbols
    up to column and exponent permutations.
    """

    columns: tuple[Column, ...]
    order: int = 2

    def __post_init__(self) -> None:
        object.__setattr__(self, "columns", tuple(self.columns))
        for col in self.columns:
            if len(col.exponents) != self.order:
                raise ShapeError(
                    "column has the wrong number of exponents",
                    expected=str(self.order),
                    actual=str(len(col.exponents)),
                )
        for i, col in enumerate(self.columns):
            for other in self.columns[i + 1 :]:
                if col.location.close(other.location, LOCATION_TOLERANCE):
                    raise ShapeError(
                        "duplicate column location", actual=col.location.render()
                    )

    @classmethod
    def build(
        cls,
        entries: Iterable[tuple[complex | None, Sequence[complex]]],
        order: int | None = None,
    ) -> PSymbol:
        """Build from ``(location, exponents)`` pairs; ``None`` is infinity."""
        columns = tuple(Column(SpherePoint(loc), tuple(exps)) for loc, exps in entries)
        if order is None:
            order = len(columns[0].exponents) if columns else 2
        return cls(columns, order)

    def __len__(self) -> int:
        return len(self.columns)

    @property
    def locations(self) -> list[SpherePoint]:
        return [c.location for c in self.columns]

    def find(self, location: SpherePoint) -> int | None:
        for i, col in enumerate(self.columns):
            if col.location.close(location):
                return i
        return None

    def exponents_at(self, location: SpherePoint) -> tuple[complex, ...] | None:
        idx = self.find(location)
        return None if idx is None else self.columns[idx].exponents

    def with_columns(self, columns: Iterable[Column]) -> PSymbol:
        return PSymbol(tuple(columns), self.order)

    def drop_ordinary(self) -> PSymbol:
        """Remove finite columns with exponents {0, 1, ..., k-1}."""
        return self.with_columns(c for c in self.columns if not c.is_ordinary())

    def equivalent(self, other: PSymbol, tol: float = EXPONENT_TOLERANCE) -> bool:
        """Equality up to column order and within-column exponent order."""
        if self.order != other.order or len(self) != len(other):
            return False
        for col in self.columns:
            exps = other.exponents_at(col.location)
            if exps is None or not _same_multiset(col.exponents, exps, tol):
                return False
        return True

    def render(self, digits: int = 6) -> str:
        """Text table: a header row of locations and one row per exponent index."""
        header = [c.location.render() for c in self.columns]
        rows = [
            [format_complex(c.exponents[k], digits) for c in self.columns]
            for k in range(self.order)
        ]
        widths = [
            max(len(header[j]), *(len(r[j]) for r in rows)) for j in range(len(header))
        ]

        def line(cells: list[str]) -> str:
            return "  ".join(cell.rjust(w) for cell, w in zip(cells, widths))

        rule = "-" * (sum(widths) + 2 * (len(widths) - 1))
        return "\n".join([line(header), rule, *(line(r) for r in rows)])
