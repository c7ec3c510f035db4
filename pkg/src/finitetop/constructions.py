"""New spaces from old: products, subspaces, quotients, and disjoint sums."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .core import PointSet, Space, from_neighborhoods, is_open, _mask_members
from .errors import PartitionMismatch, SizeOverflow

#: Default cap on result carriers; keeps bit-vector work fast at desk scale.
DEFAULT_CARRIER_BOUND = 4096


@dataclass(frozen=True)
class Partition:
    """Equivalence classes over a carrier.

    ``class_of[x]`` is the class id of point x.  Class ids are dense
    (0..k-1) and numbered by least member, so partitions compare and
    serialize deterministically.
    """

    carrier_size: int
    class_of: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if len(self.class_of) != self.carrier_size:
            raise ValueError("class_of length differs from carrier size")
        least: dict[int, int] = {}
        for x, c in enumerate(self.class_of):
            if not 0 <= c < self.k:
                raise ValueError(f"class id {c} outside 0..{self.k - 1}")
            least.setdefault(c, x)
        if len(least) != self.k:
            raise ValueError("some class id is never used")
        firsts = [least[c] for c in range(self.k)]
        if firsts != sorted(firsts):
            raise ValueError("class ids are not ordered by least member")

    @classmethod
    def from_class_of(cls, assignment: Sequence[int]) -> "Partition":
        """Normalize an arbitrary point-to-class assignment."""
        renum: dict[int, int] = {}
        out = []
        for c in assignment:
            if c not in renum:
                renum[c] = len(renum)
            out.append(renum[c])
        return cls(len(assignment), tuple(out), len(renum))

    @classmethod
    def from_blocks(
        cls, carrier_size: int, blocks: Iterable[Iterable[int]]
    ) -> "Partition":
        assignment = [-1] * carrier_size
        for i, block in enumerate(blocks):
            for x in block:
                if not 0 <= x < carrier_size:
                    raise ValueError(f"point {x} outside carrier of size {carrier_size}")
                if assignment[x] != -1:
                    raise ValueError(f"point {x} appears in two blocks")
                assignment[x] = i
        if -1 in assignment:
            raise ValueError(f"point {assignment.index(-1)} belongs to no block")
        return cls.from_class_of(assignment)

    @classmethod
    def identity(cls, carrier_size: int) -> "Partition":
        return cls(carrier_size, tuple(range(carrier_size)), carrier_size)

    def class_masks(self) -> list[int]:
        masks = [0] * self.k
        for x, c in enumerate(self.class_of):
            masks[c] |= 1 << x
        return masks


def product(a: Space, b: Space, bound: int = DEFAULT_CARRIER_BOUND) -> Space:
    """Product space on flat ids x * b.n + y (left factor most significant).

    The minimal neighborhood of (x, y) is the set of pairs (u, v) with u
    in nbhd_a(x) and v in nbhd_b(y).
    """
    n = a.n * b.n
    if n > bound:
        raise SizeOverflow(n, bound)
    nb = []
    for x in range(a.n):
        ma = a.masks[x]
        for y in range(b.n):
            mb = b.masks[y]
            m = 0
            for u in _mask_members(ma):
                m |= mb << (u * b.n)
            nb.append(PointSet(n, m))
    labels: tuple[str, ...] | None = None
    if a.labels is not None and b.labels is not None:
        labels = tuple(
            f"{la}.{lb}" for la in a.labels for lb in b.labels
        )
    return Space(n, tuple(nb), labels)


def product_n(spaces: Sequence[Space], bound: int = DEFAULT_CARRIER_BOUND) -> Space:
    """Left fold of binary products; flat ids are mixed-radix, leftmost most significant."""
    if not spaces:
        raise ValueError("product of an empty list of spaces")
    return reduce(lambda acc, s: product(acc, s, bound), spaces)


def _compress(mask: int, members: Sequence[int], index: dict[int, int]) -> int:
    out = 0
    for p in _mask_members(mask):
        out |= 1 << index[p]
    return out


def subspace(x: Space, a: PointSet) -> Space:
    """Subspace on the points of ``a``, re-indexed in ascending original order.

    Neighborhoods restrict by intersection: nbhd_A(p) = A & nbhd_X(p).
    """
    if a.size != x.n:
        raise ValueError(f"carrier sizes differ: {a.size} vs {x.n}")
    members = a.members()
    index = {p: i for i, p in enumerate(members)}
    n = len(members)
    nb = [PointSet(n, _compress(x.masks[p] & a.bits, members, index)) for p in members]
    labels = None
    if x.labels is not None:
        labels = tuple(x.labels[p] for p in members)
    return from_neighborhoods(n, nb, labels)


def quotient(x: Space, p: Partition) -> Space:
    """Quotient space whose points are the classes of ``p``.

    The neighborhood of a class c is computed by a saturation fixpoint:
    starting from the members of c, alternately close under taking
    neighborhoods (open hull) and under completing classes (saturation)
    until stable.  The stable set W is the least saturated open superset
    of c, so its classes form the minimal open neighborhood of [c].  The
    openness and saturation of each preimage are re-verified before the
    quotient is returned.
    """
    if p.carrier_size != x.n:
        raise PartitionMismatch(x.n, p.carrier_size)
    cmasks = p.class_masks()
    nb = []
    for c in range(p.k):
        w = cmasks[c]
        while True:
            hull = 0
            for y in _mask_members(w):
                hull |= x.masks[y]
            sat = 0
            for d in range(p.k):
                if cmasks[d] & hull:
                    sat |= cmasks[d]
            if sat == w:
                break
            w = sat
        if not is_open(x, PointSet(x.n, w)) or w & cmasks[c] != cmasks[c]:
            raise AssertionError("saturation fixpoint produced a non-open preimage")
        cls_bits = 0
        for d in range(p.k):
            if cmasks[d] & ~w == 0:
                cls_bits |= 1 << d
        nb.append(PointSet(p.k, cls_bits))
    labels = None
    if x.labels is not None:
        grouped: list[list[str]] = [[] for _ in range(p.k)]
        for pt, c in enumerate(p.class_of):
            grouped[c].append(x.labels[pt])
        labels = tuple("+".join(g) for g in grouped)
    return from_neighborhoods(p.k, nb, labels)


def t0_quotient(x: Space) -> tuple[Space, Partition]:
    """Collapse points with equal neighborhoods; the result is T0.

    Returns the quotient space together with the partition used, whose
    classes are numbered by least member.
    """
    first: dict[int, int] = {}
    assignment = []
    for m in x.masks:
        if m not in first:
            first[m] = len(first)
        assignment.append(first[m])
    part = Partition.from_class_of(assignment)
    q = quotient(x, part)
    assert len(set(q.masks)) == q.n, "quotient classes share a neighborhood"
    return q, part


def disjoint_sum(a: Space, b: Space, bound: int = DEFAULT_CARRIER_BOUND) -> Space:
    """Disjoint union; points of ``b`` are shifted up by a.n."""
    n = a.n + b.n
    if n > bound:
        raise SizeOverflow(n, bound)
    nb = [PointSet(n, m) for m in a.masks]
    nb.extend(PointSet(n, m << a.n) for m in b.masks)
    labels = None
    if a.labels is not None and b.labels is not None:
        merged = a.labels + b.labels
        if len(set(merged)) == n:
            labels = merged
    return Space(n, tuple(nb), labels)
