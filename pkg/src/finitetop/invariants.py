"""Structure theory of a space: irreducible and basic neighborhoods, the
minimum neighborhood cover, the basic-set count, and separation flags.

Set containment is read non-strictly throughout: an irreducible
neighborhood is one with no proper neighborhood below it, and a basic one
additionally meets no neighborhood it is not contained in.  All counts
are counts of distinct sets, not of points: a neighborhood shared by many
points contributes once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import PointSet, Space
from .errors import EmptySpace


def is_irreducible(space: Space, x: int) -> bool:
    """True iff no neighborhood is properly contained in that of x."""
    d = space.masks[x]
    return all(m == d or m & ~d for m in space.distinct_masks)


def is_basic(space: Space, x: int) -> bool:
    """True iff the neighborhood of x is basic.

    Two clauses: (a) whenever it sits inside some S(y) alongside an
    S(z), it also sits inside S(z); (b) it is disjoint from every
    neighborhood it is not contained in.
    """
    d = space.masks[x]
    distinct = space.distinct_masks
    for e in distinct:
        if d & ~e == 0:
            for f in distinct:
                if f & ~e == 0 and d & ~f:
                    return False
        elif d & e:
            return False
    return True


def _maximal_masks(space: Space) -> list[int]:
    distinct = space.distinct_masks
    return [
        d
        for d in distinct
        if not any(e != d and d & ~e == 0 for e in distinct)
    ]


def min_of(space: Space) -> tuple[int, list[PointSet]]:
    """Minimum number of minimal neighborhoods covering the space, with a witness.

    Any cover must contain every inclusion-maximal neighborhood (a
    covering set around a point of a maximal one contains it, and
    maximality forces equality), and the maximal ones do cover, so the
    answer is the number of distinct maximal neighborhoods.  The witness
    lists them in first-owner order.
    """
    if space.n == 0:
        raise EmptySpace()
    masks = _maximal_masks(space)
    return len(masks), [PointSet(space.n, m) for m in masks]


def index_of(space: Space) -> int:
    """Number of distinct basic neighborhoods."""
    if space.n == 0:
        raise EmptySpace()
    count = 0
    seen: set[int] = set()
    for x in range(space.n):
        m = space.masks[x]
        if m in seen:
            continue
        seen.add(m)
        if is_basic(space, x):
            count += 1
    return count


def is_hausdorff(space: Space) -> bool:
    """True iff the neighborhoods of any two distinct points are disjoint."""
    for x in range(space.n):
        mx = space.masks[x]
        for y in range(x + 1, space.n):
            if mx & space.masks[y]:
                return False
    return True


def is_discrete(space: Space) -> bool:
    """True iff every neighborhood is the singleton of its point."""
    return all(m == 1 << x for x, m in enumerate(space.masks))


@dataclass(frozen=True)
class InvariantReport:
    """All computed invariants of one space.

    ``basic_points`` and ``irreducible_points`` hold one representative
    point (the least id) per distinct basic / irreducible neighborhood.
    """

    n: int
    distinct_neighborhoods: int
    min_x: int
    index_x: int
    maximal_nbhds: tuple[PointSet, ...]
    basic_points: PointSet
    irreducible_points: PointSet
    is_discrete: bool
    is_hausdorff: bool
    is_t0: bool


def report(space: Space) -> InvariantReport:
    """Assemble the full report; internal consistency is asserted."""
    if space.n == 0:
        raise EmptySpace()
    min_count, witness = min_of(space)
    idx = index_of(space)

    basic_bits = 0
    irr_bits = 0
    seen: set[int] = set()
    for x in range(space.n):
        m = space.masks[x]
        if m in seen:
            continue
        seen.add(m)
        if is_basic(space, x):
            basic_bits |= 1 << x
        if is_irreducible(space, x):
            irr_bits |= 1 << x

    rep = InvariantReport(
        n=space.n,
        distinct_neighborhoods=len(space.distinct_masks),
        min_x=min_count,
        index_x=idx,
        maximal_nbhds=tuple(witness),
        basic_points=PointSet(space.n, basic_bits),
        irreducible_points=PointSet(space.n, irr_bits),
        is_discrete=is_discrete(space),
        is_hausdorff=is_hausdorff(space),
        is_t0=len(space.distinct_masks) == space.n,
    )
    assert rep.index_x <= rep.min_x
    assert rep.basic_points.issubset(rep.irreducible_points)
    assert rep.is_hausdorff == rep.is_discrete
    covered = 0
    for w in rep.maximal_nbhds:
        covered |= w.bits
    assert covered == (1 << space.n) - 1 and len(rep.maximal_nbhds) == rep.min_x
    return rep
