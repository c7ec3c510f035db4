"""Maps between spaces: continuity, openness, images, homeomorphisms, gluing.

A continuous image of one of these spaces need not have minimal
neighborhoods in general topology (infinite counterexamples exist), which
is why the image construction here additionally demands an open map; with
both conditions the image carries neighborhoods f(S(x)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _refine
from .constructions import subspace
from .core import PointSet, Space, _mask_members
from .errors import (
    InvalidGlueData,
    NotContinuous,
    NotOpen,
    NotWellDefined,
    OverlapMismatch,
    ResultNotHomeomorphism,
    SearchBudgetExceeded,
)

#: Default backtracking-node budget for the homeomorphism search.
DEFAULT_SEARCH_BUDGET = 10_000_000

#: Default carrier guard for the homeomorphism search.
DEFAULT_SEARCH_MAX_POINTS = 10


@dataclass(frozen=True)
class SpaceMap:
    """A point function between two spaces; f[x] is the image of x."""

    source: Space
    target: Space
    f: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.f) != self.source.n:
            raise ValueError(f"expected {self.source.n} images, got {len(self.f)}")
        for x, y in enumerate(self.f):
            if not 0 <= y < self.target.n:
                raise ValueError(f"f[{x}] = {y} outside target carrier")

    def image_of(self, mask: int) -> int:
        out = 0
        for x in _mask_members(mask):
            out |= 1 << self.f[x]
        return out

    def image_bits(self) -> int:
        out = 0
        for y in self.f:
            out |= 1 << y
        return out


def is_continuous(m: SpaceMap) -> bool:
    """True iff every preimage of a target basis set is open.

    Also evaluates the pointwise criterion f(S(x)) inside S(f(x)) and
    checks the two answers agree; they are equivalent characterizations.
    """
    src, tgt = m.source, m.target
    by_preimage = True
    for y in range(tgt.n):
        sy = tgt.masks[y]
        pre = 0
        for x in range(src.n):
            if sy >> m.f[x] & 1:
                pre |= 1 << x
        if any(src.masks[x] & ~pre for x in _mask_members(pre)):
            by_preimage = False
            break
    by_neighborhood = _continuity_witness(m) is None
    assert by_preimage == by_neighborhood, "continuity criteria disagree"
    return by_preimage


def _continuity_witness(m: SpaceMap) -> int | None:
    for x in range(m.source.n):
        if m.image_of(m.source.masks[x]) & ~m.target.masks[m.f[x]]:
            return x
    return None


def _openness_witness(m: SpaceMap) -> int | None:
    image = m.image_bits()
    for x in range(m.source.n):
        fs = m.image_of(m.source.masks[x])
        for y in _mask_members(fs):
            if m.target.masks[y] & image & ~fs:
                return x
    return None


def is_open_map(m: SpaceMap) -> bool:
    """True iff each f(S(x)) is open in the subspace f(X) of the target."""
    return _openness_witness(m) is None


def image_space(m: SpaceMap) -> tuple[Space, SpaceMap]:
    """The image of a continuous open map, with the corestricted map.

    The image subspace has minimal neighborhoods f(S(x)); this is
    re-verified point by point before returning.
    """
    w = _continuity_witness(m)
    if w is not None:
        raise NotContinuous(w)
    w = _openness_witness(m)
    if w is not None:
        raise NotOpen(w)
    image = PointSet(m.target.n, m.image_bits())
    sub = subspace(m.target, image)
    index = {p: i for i, p in enumerate(image.members())}
    core_f = tuple(index[y] for y in m.f)
    cores = SpaceMap(m.source, sub, core_f)
    for x in range(m.source.n):
        assert sub.masks[core_f[x]] == cores.image_of(m.source.masks[x]), (
            "image neighborhoods differ from mapped neighborhoods"
        )
    return sub, cores


def _is_structure_isomorphism(a: Space, b: Space, f: Sequence[int]) -> bool:
    if a.n != b.n or sorted(f) != list(range(a.n)):
        return False
    for x in range(a.n):
        img = 0
        for y in _mask_members(a.masks[x]):
            img |= 1 << f[y]
        if img != b.masks[f[x]]:
            return False
    return True


def find_homeomorphism(
    a: Space,
    b: Space,
    max_points: int = DEFAULT_SEARCH_MAX_POINTS,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> SpaceMap | None:
    """Search for a homeomorphism from a to b; None when there is none.

    Backtracks over bijections, pruned so that matched points share the
    same iterated-fingerprint color (computed jointly over both spaces,
    which subsumes matching neighborhood sizes).  Deterministic: the
    lexicographically least homeomorphism (by its f array) is returned
    when any exists.  Exceeds of the node budget or of the carrier guard
    raise SearchBudgetExceeded.
    """
    if a.n != b.n:
        return None
    n = a.n
    if n == 0:
        return SpaceMap(a, b, ())
    if n > max_points:
        raise SearchBudgetExceeded(
            budget, f"carrier size {n} exceeds the search guard of {max_points}"
        )
    ca, cb = _refine.refine_colors([a.masks, b.masks])
    if sorted(ca) != sorted(cb):
        return None
    candidates = [
        [y for y in range(n) if cb[y] == ca[x]] for x in range(n)
    ]

    f = [-1] * n
    used = [False] * n
    nodes = 0

    def extend(x: int) -> bool:
        nonlocal nodes
        if x == n:
            return True
        for y in candidates[x]:
            if used[y]:
                continue
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(budget)
            ok = True
            for x0 in range(x):
                y0 = f[x0]
                if (a.masks[x] >> x0 & 1) != (b.masks[y] >> y0 & 1):
                    ok = False
                    break
                if (a.masks[x0] >> x & 1) != (b.masks[y0] >> y & 1):
                    ok = False
                    break
            if not ok:
                continue
            if (a.masks[x] >> x & 1) != (b.masks[y] >> y & 1):
                continue
            f[x] = y
            used[y] = True
            if extend(x + 1):
                return True
            f[x] = -1
            used[y] = False
        return False

    if not extend(0):
        return None
    assert _is_structure_isomorphism(a, b, f)
    return SpaceMap(a, b, tuple(f))


@dataclass(frozen=True)
class GlueData:
    """Input for assembling a homeomorphism from per-neighborhood pieces.

    ``neighborhood_bijection`` pairs a representative point of each
    distinct neighborhood of the source with one of the target; the
    pairing must be a bijection between the two families of distinct
    neighborhoods.  ``local_maps[i]`` is the corresponding local
    bijection, stored as sorted (source point, target point) pairs whose
    keys are exactly the members of the source neighborhood and whose
    values are exactly the members of the target one.
    """

    neighborhood_bijection: tuple[tuple[int, int], ...]
    local_maps: tuple[tuple[tuple[int, int], ...], ...]

    @classmethod
    def build(
        cls,
        pairs: Iterable[tuple[int, int]],
        local_maps: Iterable[dict[int, int]],
    ) -> "GlueData":
        ps = tuple(pairs)
        ms = tuple(tuple(sorted(m.items())) for m in local_maps)
        return cls(ps, ms)

    def __post_init__(self) -> None:
        if len(self.neighborhood_bijection) != len(self.local_maps):
            raise ValueError("one local map is required per neighborhood pair")


def _validate_glue(x: Space, y: Space, g: GlueData) -> list[dict[int, int]]:
    reps_x = [r for r, _ in g.neighborhood_bijection]
    reps_y = [r for _, r in g.neighborhood_bijection]
    for r in reps_x:
        if not 0 <= r < x.n:
            raise InvalidGlueData(f"source representative {r} outside carrier")
    for r in reps_y:
        if not 0 <= r < y.n:
            raise InvalidGlueData(f"target representative {r} outside carrier")
    src_sets = [x.masks[r] for r in reps_x]
    dst_sets = [y.masks[r] for r in reps_y]
    if len(set(src_sets)) != len(src_sets):
        raise InvalidGlueData("listed source neighborhoods are not pairwise distinct")
    if len(set(dst_sets)) != len(dst_sets):
        raise InvalidGlueData("listed target neighborhoods are not pairwise distinct")
    if set(src_sets) != set(x.distinct_masks):
        raise InvalidGlueData("listed source neighborhoods do not exhaust the space")
    if set(dst_sets) != set(y.distinct_masks):
        raise InvalidGlueData("listed target neighborhoods do not exhaust the space")
    locals_: list[dict[int, int]] = []
    for i, entries in enumerate(g.local_maps):
        m = dict(entries)
        if len(m) != len(entries):
            raise InvalidGlueData(f"local map {i} repeats a source point")
        src_members = set(_mask_members(src_sets[i]))
        dst_members = set(_mask_members(dst_sets[i]))
        if set(m) != src_members:
            raise InvalidGlueData(
                f"local map {i} is not defined on exactly the members of its neighborhood"
            )
        if set(m.values()) != dst_members or len(set(m.values())) != len(m):
            raise InvalidGlueData(
                f"local map {i} is not a bijection onto the target neighborhood"
            )
        locals_.append(m)
    return locals_


def glue(x: Space, y: Space, g: GlueData) -> SpaceMap:
    """Assemble a homeomorphism from a neighborhood bijection and local maps.

    Overlapping neighborhoods must agree where they meet: pointwise
    agreement is what makes the assembled map well defined, and the
    overlap images must coincide setwise.  Pointwise conflicts are
    reported first (NotWellDefined with the offending point), setwise
    ones as OverlapMismatch.  The assembled map is then verified to be a
    homeomorphism outright; ResultNotHomeomorphism is raised otherwise,
    so a returned map is correct unconditionally.
    """
    locals_ = _validate_glue(x, y, g)
    reps = [r for r, _ in g.neighborhood_bijection]
    k = len(reps)
    for i in range(k):
        for j in range(i + 1, k):
            overlap = x.masks[reps[i]] & x.masks[reps[j]]
            if not overlap:
                continue
            for p in _mask_members(overlap):
                if locals_[i][p] != locals_[j][p]:
                    raise NotWellDefined(p)
            img_i = 0
            img_j = 0
            for p in _mask_members(overlap):
                img_i |= 1 << locals_[i][p]
                img_j |= 1 << locals_[j][p]
            if img_i != img_j:
                raise OverlapMismatch(reps[i], reps[j])

    f = [-1] * x.n
    for i, r in enumerate(reps):
        for p in _mask_members(x.masks[r]):
            f[p] = locals_[i][p]
    if -1 in f:
        raise InvalidGlueData(f"point {f.index(-1)} is covered by no listed neighborhood")
    if x.n != y.n or not _is_structure_isomorphism(x, y, f):
        raise ResultNotHomeomorphism()
    return SpaceMap(x, y, tuple(f))
