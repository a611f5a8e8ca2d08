"""Exponent calculus on P-symbols.

Möbius lifting relocates columns, F-homotopies shift exponents at a
finite point and at infinity in opposite directions, and rational lifting
multiplies exponents by ramification indices.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Sequence

from src.base.exceptions import (
    InconsistentBranchingError,
    MissingColumnError,
    ShapeError,
)
from src.base.logging import get_logger
from src.psymbol.maps import BranchPoint, MobiusMap, RationalMap
from src.psymbol.sphere import INFINITY, ONE, ZERO, SpherePoint
from src.psymbol.symbol import EXPONENT_TOLERANCE, Column, PSymbol

logger = get_logger(__name__)


def fuchs_sum(p: PSymbol) -> complex:
    """Sum of all exponents of the symbol."""
    return complex(sum(sum(col.exponents) for col in p.columns))


def fuchs_target(p: PSymbol) -> complex:
    """Value Fuchs's relation requires of :func:`fuchs_sum`: (n - 2) k (k - 1) / 2."""
    k = p.order
    return complex((len(p) - 2) * k * (k - 1) // 2)


def satisfies_fuchs(p: PSymbol, tol: float = 1e-12) -> bool:
    return abs(fuchs_sum(p) - fuchs_target(p)) <= tol * max(1.0, abs(fuchs_target(p)))


def mobius_lift(p: PSymbol, m: MobiusMap) -> PSymbol:
    """Symbol of y(m(x)): each column at x0 moves to m^-1(x0)."""
    inv = m.inverse()
    return p.with_columns(Column(inv.apply(col.location), col.exponents) for col in p.columns)


def _ordinary(location: SpherePoint, order: int) -> Column:
    return Column(location, tuple(range(order)))


def f_homotopy(
    p: PSymbol,
    x0: SpherePoint,
    zeta: complex,
    *,
    auto_add: bool = True,
) -> PSymbol:
    """Symbol of (x - x0)^(-zeta) y(x).

    Exponents at x0 drop by zeta and exponents at infinity rise by zeta.
    Missing columns at x0 or infinity are added as ordinary ones when
    ``auto_add`` is set.

    Raises:
        ShapeError: x0 is infinity.
        MissingColumnError: A needed column is absent and auto_add is off.
    """
    if x0.is_infinite:
        raise ShapeError("F-homotopy point must be finite", actual="inf")
    if zeta == 0:
        return p
    columns = list(p.columns)
    for loc in (x0, INFINITY):
        if p.find(loc) is None:
            if not auto_add:
                raise MissingColumnError("no column at location", location=loc.render())
            columns.append(_ordinary(loc, p.order))
    shifted = []
    for col in columns:
        if col.location.close(x0):
            shifted.append(Column(col.location, tuple(e - zeta for e in col.exponents)))
        elif col.location.is_infinite:
            shifted.append(Column(col.location, tuple(e + zeta for e in col.exponents)))
        else:
            shifted.append(col)
    return p.with_columns(shifted)


def mobius_branching(p: PSymbol, m: MobiusMap) -> list[BranchPoint]:
    """Unramified branch table of a Möbius map over the columns of ``p``."""
    inv = m.inverse()
    return [BranchPoint(inv.apply(col.location), col.location, 1) for col in p.columns]


def rational_lift(p: PSymbol, r: RationalMap, branching: Sequence[BranchPoint]) -> PSymbol:
    """Symbol of y(r(x)) given the branch data of r.

    A preimage of multiplicity k over a column gets k times its exponents;
    it is left out when that makes it ordinary (image exponents 0, 1/k, ...).
    Ramified preimages of ordinary image points get exponents 0, k, 2k, ...

    Raises:
        InconsistentBranchingError: Multiplicities over some image do not sum
            to the degree, or a column of ``p`` has no preimages listed.
    """
    degree = r.degree
    totals: dict[int, int] = defaultdict(int)
    images: list[SpherePoint] = []

    def image_key(point: SpherePoint) -> int:
        for i, seen in enumerate(images):
            if seen.close(point):
                return i
        images.append(point)
        return len(images) - 1

    for bp in branching:
        totals[image_key(bp.image)] += bp.multiplicity
    for col in p.columns:
        totals.setdefault(image_key(col.location), 0)
    for key, total in totals.items():
        if total != degree:
            raise InconsistentBranchingError(
                "branch multiplicities do not sum to the degree",
                image=images[key].render(),
                total=total,
                degree=degree,
            )

    ordinary = tuple(range(p.order))
    lifted: list[Column] = []
    for bp in branching:
        k = bp.multiplicity
        exps = p.exponents_at(bp.image)
        if exps is None:
            if k > 1:
                lifted.append(Column(bp.preimage, tuple(k * e for e in ordinary)))
            continue
        column = Column(bp.preimage, tuple(k * e for e in exps))
        if k > 1 and column.is_ordinary(EXPONENT_TOLERANCE):
            continue
        lifted.append(column)
    logger.debug("Rational lift", degree=degree, columns=len(lifted))
    return p.with_columns(lifted)


def normalize(
    p: PSymbol,
    points: tuple[SpherePoint, SpherePoint, SpherePoint] | None = None,
) -> tuple[PSymbol, MobiusMap, list[tuple[SpherePoint, complex]]]:
    """Move three columns to 0, 1, infinity and put a zero exponent in every finite column.

    Args:
        p: Second-order symbol with at least three columns.
        points: Locations sent to 0, 1 and infinity. Defaults to the three
            smallest locations in (real, imag) order with infinity last.

    Returns:
        (symbol, M, shifts) where the new location of a column at z is M(z)
        and shifts lists the (location, zeta) F-homotopies applied.

    Raises:
        ShapeError: Fewer than three columns, order other than 2, or a
            requested point with no column.
    """
    if len(p) < 3:
        raise ShapeError("normalize needs at least three columns", expected=">= 3", actual=str(len(p)))
    if p.order != 2:
        raise ShapeError("normalize handles second-order symbols", expected="2", actual=str(p.order))

    if points is None:
        z1, z2, z3 = sorted(p.locations, key=SpherePoint.sort_key)[:3]
    else:
        missing = [pt.render() for pt in points if p.find(pt) is None]
        if missing:
            raise ShapeError("normalize points must be column locations", expected="columns", actual=", ".join(missing))
        z1, z2, z3 = points

    if z1.close(ZERO) and z2.close(ONE) and z3.is_infinite:
        m = MobiusMap.identity()
    else:
        m = MobiusMap.sending(z1, z2, z3)

    result = mobius_lift(p, m.inverse())
    shifts: list[tuple[SpherePoint, complex]] = []
    for loc in [c.location for c in result.columns if not c.location.is_infinite]:
        col = result.columns[result.find(loc)]  # type: ignore[index]
        if col.has_zero():
            continue
        zeta = col.exponents[0]
        result = f_homotopy(result, loc, zeta)
        shifts.append((loc, zeta))
    return result, m, shifts


def derivative_symbol(p: PSymbol, N: int) -> PSymbol:  # noqa: N803
    """Symbol of the N-th derivative of a local Heun function with alpha = 1 - N.

    Every finite column keeps its zero exponent and has its other exponent
    lowered by N; the infinity column {1 - N, beta} becomes {1 + N, beta + N}.

    Raises:
        ShapeError: The symbol does not have that shape.
    """
    if N < 0 or p.order != 2:
        raise ShapeError("derivative_symbol needs N >= 0 and a second-order symbol")
    if p.find(INFINITY) is None:
        raise ShapeError("symbol has no column at infinity")
    columns = []
    for col in p.columns:
        e0, e1 = col.exponents
        if col.location.is_infinite:
            if abs(e0 - (1 - N)) <= EXPONENT_TOLERANCE:
                columns.append(Column(col.location, (1 + N, e1 + N)))
            elif abs(e1 - (1 - N)) <= EXPONENT_TOLERANCE:
                columns.append(Column(col.location, (e0 + N, 1 + N)))
            else:
                raise ShapeError(
                    "infinity column must contain 1 - N", expected=str(1 - N), actual=str(col.exponents)
                )
        elif abs(e0) <= EXPONENT_TOLERANCE:
            columns.append(Column(col.location, (e0, e1 - N)))
        elif abs(e1) <= EXPONENT_TOLERANCE:
            columns.append(Column(col.location, (e0 - N, e1)))
        else:
            raise ShapeError("finite columns need a zero exponent", actual=col.location.render())
    return p.with_columns(columns)
