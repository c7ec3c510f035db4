"""Stock spaces and a seeded random-space generator.

The chain, block, and divisor spaces are finite truncations of familiar
non-Hausdorff examples: nested closed balls around the origin, pairwise
disjoint unit intervals, and the lattice of finite root-of-unity groups
on the circle (one representative point per group order, plus an optional
top point standing in for the whole circle).  Truncation parameters
matter: invariants of a truncation are not those of the infinite space.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import PointSet, Space, from_neighborhoods, from_preorder


def chain(k: int) -> Space:
    """Totally ordered space: the neighborhood of i is {0, ..., i}."""
    if k < 1:
        raise ValueError("chain needs at least one point")
    return from_neighborhoods(k, [PointSet(k, (1 << (i + 1)) - 1) for i in range(k)])


def blocks(b: int, m: int) -> Space:
    """``b`` disjoint groups of ``m`` points, each group indiscrete inside."""
    if b < 1 or m < 1:
        raise ValueError("blocks needs positive block count and size")
    n = b * m
    nb = []
    for i in range(b):
        group = ((1 << m) - 1) << (i * m)
        nb.extend(PointSet(n, group) for _ in range(m))
    return from_neighborhoods(n, nb)


def divisor(bound: int, with_top: bool = False) -> Space:
    """Divisibility space on 1..bound: the neighborhood of m is its divisors.

    With ``with_top`` an extra point labeled ``w`` is adjoined whose
    neighborhood is the entire carrier, playing the role of a single
    maximal element above every order.
    """
    if bound < 1:
        raise ValueError("divisor needs a positive bound")
    n = bound + 1 if with_top else bound
    nb = []
    for m in range(1, bound + 1):
        bits = 0
        for d in range(1, m + 1):
            if m % d == 0:
                bits |= 1 << (d - 1)
        nb.append(PointSet(n, bits))
    labels = [str(m) for m in range(1, bound + 1)]
    if with_top:
        nb.append(PointSet.full(n))
        labels.append("w")
    return from_neighborhoods(n, nb, labels)


def discrete(n: int) -> Space:
    if n < 0:
        raise ValueError("negative size")
    return from_neighborhoods(n, [PointSet(n, 1 << x) for x in range(n)])


def indiscrete(n: int) -> Space:
    if n < 0:
        raise ValueError("negative size")
    return from_neighborhoods(n, [PointSet.full(n)] * n)


def random_space(n: int, seed: int, density: float = 0.5) -> Space:
    """Seeded random space; identical arguments give identical output.

    Draws each index pair (i, j) with i < j as a strict relation with
    probability ``density``, closes reflexively and transitively, then
    renames the points by a seeded shuffle so structure is not aligned
    with index order.  Density 0 gives the discrete space, density 1 a
    renamed chain.
    """
    if n < 0:
        raise ValueError("negative size")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    up_edges = [
        [j for j in range(i + 1, n) if rng.random() < density] for i in range(n)
    ]
    reach = [0] * n
    for i in reversed(range(n)):
        r = 1 << i
        for j in up_edges[i]:
            r |= reach[j]
        reach[i] = r
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = []
    for i in range(n):
        m = reach[i]
        while m:
            low = m & -m
            pairs.append((perm[i], perm[low.bit_length() - 1]))
            m ^= low
    return from_preorder(n, pairs)


@dataclass(frozen=True)
class GeneratorSpec:
    """A parsed request for one stock space; see :meth:`build`."""

    kind: str
    length: int = 0
    block_count: int = 0
    block_size: int = 0
    bound: int = 0
    with_top: bool = False
    size: int = 0
    seed: int = 0
    density: float = 0.5

    def build(self) -> Space:
        if self.kind == "chain":
            return chain(self.length)
        if self.kind == "blocks":
            return blocks(self.block_count, self.block_size)
        if self.kind == "divisor":
            return divisor(self.bound, self.with_top)
        if self.kind == "discrete":
            return discrete(self.size)
        if self.kind == "indiscrete":
            return indiscrete(self.size)
        if self.kind == "random":
            return random_space(self.size, self.seed, self.density)
        raise ValueError(f"unknown generator kind {self.kind!r}")

    def name(self) -> str:
        if self.kind == "chain":
            return f"chain-{self.length}"
        if self.kind == "blocks":
            return f"blocks-{self.block_count}x{self.block_size}"
        if self.kind == "divisor":
            return f"divisor-{self.bound}-top" if self.with_top else f"divisor-{self.bound}"
        if self.kind in ("discrete", "indiscrete"):
            return f"{self.kind}-{self.size}"
        if self.kind == "random":
            return f"random-{self.size}-{self.seed}-{self.density}"
        raise ValueError(f"unknown generator kind {self.kind!r}")
