"""Finite Alexandroff spaces stored as minimal-neighborhood arrays.

A space on ``n`` points keeps one bit-vector per point: ``nbhd[x]`` is the
smallest open set containing ``x``.  That family is a basis for the whole
topology, so nothing else is materialized; the full open-set lattice is
only enumerated on demand and behind an explicit limit.

Convention: ``y in nbhd[x]`` is read as ``y <= x`` in the specialization
preorder, i.e. neighborhoods are down-sets.  Both conventions appear in
the literature; this package uses the down-set reading everywhere,
including :func:`from_preorder`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import _refine
from .errors import (
    MinimalityViolation,
    NoMinimalSet,
    NotATopology,
    NotCovered,
    NotReflexive,
    NotTransitive,
    ReflexivityViolation,
    TooManyOpenSets,
)

#: Cap on the number of open sets `open_sets` will enumerate by default.
DEFAULT_OPEN_SET_LIMIT = 1 << 20


def _mask_members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class PointSet:
    """An immutable subset of ``range(size)`` stored as a bitmask."""

    size: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError(f"negative carrier size {self.size}")
        if not 0 <= self.bits < (1 << self.size):
            raise ValueError(
                f"bitmask 0x{self.bits:x} does not fit a carrier of size {self.size}"
            )

    @classmethod
    def from_points(cls, size: int, points: Iterable[int]) -> "PointSet":
        bits = 0
        for p in points:
            if not 0 <= p < size:
                raise ValueError(f"point {p} outside carrier of size {size}")
            bits |= 1 << p
        return cls(size, bits)

    @classmethod
    def full(cls, size: int) -> "PointSet":
        return cls(size, (1 << size) - 1)

    def members(self) -> tuple[int, ...]:
        return tuple(_mask_members(self.bits))

    def __contains__(self, point: int) -> bool:
        return 0 <= point < self.size and self.bits >> point & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return _mask_members(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: "PointSet") -> None:
        if self.size != other.size:
            raise ValueError(f"carrier sizes differ: {self.size} vs {other.size}")

    def union(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.size, self.bits | other.bits)

    def intersection(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.size, self.bits & other.bits)

    def difference(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.size, self.bits & ~other.bits)

    def issubset(self, other: "PointSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: "PointSet") -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def __repr__(self) -> str:
        inner = ", ".join(str(p) for p in self)
        return f"PointSet({self.size}, {{{inner}}})"


@dataclass(frozen=True)
class SubsetFamily:
    """An ordered family of subsets of a common carrier.

    Duplicates are permitted on input; the constructors that consume a
    family deduplicate, since families are set-valued mathematically.
    """

    carrier_size: int
    sets: tuple[PointSet, ...]

    def __post_init__(self) -> None:
        for s in self.sets:
            if s.size != self.carrier_size:
                raise ValueError(
                    f"family member has carrier {s.size}, expected {self.carrier_size}"
                )

    @classmethod
    def of(cls, carrier_size: int, sets: Iterable[Iterable[int]]) -> "SubsetFamily":
        return cls(
            carrier_size,
            tuple(PointSet.from_points(carrier_size, s) for s in sets),
        )

    def distinct_bits(self) -> list[int]:
        seen: dict[int, None] = {}
        for s in self.sets:
            seen.setdefault(s.bits, None)
        return list(seen)


@dataclass(frozen=True)
class Space:
    """A finite Alexandroff space.

    ``nbhd[x]`` is the minimal open neighborhood of point ``x``.  Every
    instance satisfies ``x in nbhd[x]`` and, for each ``y in nbhd[x]``,
    ``nbhd[y] <= nbhd[x]``; construction rejects anything else.  Instances
    are immutable, hashable, and safe to share between threads.
    """

    n: int
    nbhd: tuple[PointSet, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative point count {self.n}")
        if len(self.nbhd) != self.n:
            raise ValueError(f"expected {self.n} neighborhoods, got {len(self.nbhd)}")
        masks = []
        for x, ps in enumerate(self.nbhd):
            if not isinstance(ps, PointSet):
                raise TypeError(f"nbhd[{x}] is not a PointSet")
            if ps.size != self.n:
                raise ValueError(f"nbhd[{x}] has carrier {ps.size}, expected {self.n}")
            masks.append(ps.bits)
        for x in range(self.n):
            if not masks[x] >> x & 1:
                raise ReflexivityViolation(x)
        for x in range(self.n):
            mx = masks[x]
            for y in _mask_members(mx):
                if masks[y] & ~mx:
                    raise MinimalityViolation(x, y)
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError(
                    f"expected {self.n} labels, got {len(self.labels)}"
                )
            if len(set(self.labels)) != self.n:
                raise ValueError("labels are not unique")

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as raw bitmasks; the workhorse representation."""
        return tuple(ps.bits for ps in self.nbhd)

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        """``up_masks[y]`` holds every ``z`` whose neighborhood contains y."""
        return tuple(_refine.up_masks(self.masks))

    @cached_property
    def distinct_masks(self) -> tuple[int, ...]:
        """The distinct neighborhood bitmasks, in first-owner order."""
        seen: dict[int, None] = {}
        for m in self.masks:
            seen.setdefault(m, None)
        return tuple(seen)

    def le(self, y: int, x: int) -> bool:
        """Specialization order: y <= x iff y lies in the neighborhood of x."""
        return self.masks[x] >> y & 1 == 1

    def label_of(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else f"p{x}"


def _as_pointset(size: int, obj: PointSet | Iterable[int]) -> PointSet:
    if isinstance(obj, PointSet):
        if obj.size != size:
            raise ValueError(f"carrier sizes differ: {obj.size} vs {size}")
        return obj
    return PointSet.from_points(size, obj)


def from_neighborhoods(
    n: int,
    nbhd: Sequence[PointSet | Iterable[int]],
    labels: Sequence[str] | None = None,
) -> Space:
    """Build a validated space from its minimal-neighborhood array.

    Raises ReflexivityViolation or MinimalityViolation with the offending
    point(s) when the array is not a legal neighborhood basis.
    """
    if len(nbhd) != n:
        raise ValueError(f"expected {n} neighborhoods, got {len(nbhd)}")
    sets = tuple(_as_pointset(n, s) for s in nbhd)
    return Space(n, sets, tuple(labels) if labels is not None else None)


def from_basis(family: SubsetFamily) -> Space:
    """Build the space whose topology is generated by the given basis.

    For each point x the intersection m(x) of all family sets containing x
    must itself be a family member; then nbhd[x] = m(x).  Fails with
    NotCovered when some point lies in no set, and with NoMinimalSet when
    the family has no minimal member around a point.
    """
    n = family.carrier_size
    bits = family.distinct_bits()
    nb = []
    for x in range(n):
        containing = [b for b in bits if b >> x & 1]
        if not containing:
            raise NotCovered(x)
        inter = containing[0]
        for b in containing[1:]:
            inter &= b
        if inter not in containing:
            raise NoMinimalSet(x)
        nb.append(PointSet(n, inter))
    return Space(n, tuple(nb))


def from_open_family(family: SubsetFamily) -> Space:
    """Build a space from the complete list of its open sets.

    Verifies the family contains the empty set and the full carrier and is
    closed under pairwise union and intersection, which suffices on a
    finite carrier.  nbhd[x] is the intersection of all members
    containing x (a member itself, by closure).
    """
    n = family.carrier_size
    bits = family.distinct_bits()
    present = set(bits)
    full = (1 << n) - 1
    if 0 not in present:
        raise NotATopology("the empty set is missing from the family", 0)
    if full not in present:
        raise NotATopology(
            f"the full carrier {{{', '.join(map(str, range(n)))}}} is missing", full
        )
    for a, b in combinations(bits, 2):
        u = a | b
        if u not in present:
            raise NotATopology(
                f"union of members 0x{a:x} and 0x{b:x} is missing", u
            )
        i = a & b
        if i not in present:
            raise NotATopology(
                f"intersection of members 0x{a:x} and 0x{b:x} is missing", i
            )
    nb = []
    for x in range(n):
        inter = full
        for b in bits:
            if b >> x & 1:
                inter &= b
        nb.append(PointSet(n, inter))
    return Space(n, tuple(nb))


def from_preorder(
    n: int,
    leq: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> Space:
    """Build the space of a preorder given as (a, b) pairs meaning a <= b.

    The relation must be reflexive and transitive; nbhd[x] is the down-set
    {y : y <= x}.
    """
    up = [0] * n
    down = [0] * n
    for a, b in leq:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"pair ({a}, {b}) outside carrier of size {n}")
        up[a] |= 1 << b
        down[b] |= 1 << a
    for x in range(n):
        if not up[x] >> x & 1:
            raise NotReflexive(x)
    for a in range(n):
        for b in _mask_members(up[a]):
            extra = up[b] & ~up[a]
            if extra:
                c = (extra & -extra).bit_length() - 1
                raise NotTransitive(a, b, c)
    return from_neighborhoods(n, [PointSet(n, d) for d in down], labels)


def is_open(space: Space, s: PointSet) -> bool:
    """True iff s is open, i.e. contains the neighborhood of each member."""
    if s.size != space.n:
        raise ValueError(f"carrier sizes differ: {s.size} vs {space.n}")
    m = s.bits
    return all(space.masks[x] & ~m == 0 for x in _mask_members(m))


def open_sets(space: Space, limit: int = DEFAULT_OPEN_SET_LIMIT) -> list[PointSet]:
    """All open sets, ascending by bitmask value.

    The opens are exactly the unions of minimal neighborhoods, so the
    family is built by closing {empty} under union with each distinct
    neighborhood in turn.  Aborts with TooManyOpenSets as soon as the
    count would exceed ``limit``; there can be exponentially many.
    """
    result = {0}
    for m in space.distinct_masks:
        fresh = [r | m for r in result if r | m not in result]
        result.update(fresh)
        if len(result) > limit:
            raise TooManyOpenSets(limit)
    return [PointSet(space.n, b) for b in sorted(result)]


def relabel(space: Space, perm: Sequence[int]) -> Space:
    """Copy of the space with point x renamed to perm[x]; labels follow."""
    n = space.n
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ValueError("perm is not a permutation of the carrier")
    nb = [0] * n
    for x, m in enumerate(space.masks):
        t = 0
        for y in _mask_members(m):
            t |= 1 << perm[y]
        nb[perm[x]] = t
    labels: tuple[str, ...] | None = None
    if space.labels is not None:
        moved = [""] * n
        for x, lab in enumerate(space.labels):
            moved[perm[x]] = lab
        labels = tuple(moved)
    return Space(n, tuple(PointSet(n, b) for b in nb), labels)


def canonical_form(space: Space) -> Space:
    """A relabeled copy that is identical for all relabelings of the input.

    Points are sorted by neighborhood size, then by the sorted multiset of
    their members' neighborhood sizes, then by an iterated fingerprint
    refinement; remaining ties are resolved by a backtracking search for
    the least relabeled mask table, pruned by transposition symmetries.
    Equal canonical forms therefore imply the inputs are homeomorphic.
    Labels are dropped: the canonical form identifies pure structure.
    """
    order = _refine.canonical_order(space.masks)
    perm = [0] * space.n
    for new, old in enumerate(order):
        perm[old] = new
    recoded = relabel(space, perm)
    return Space(recoded.n, recoded.nbhd, None)
