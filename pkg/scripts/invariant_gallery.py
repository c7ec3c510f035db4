#!/usr/bin/env python3
"""Print the invariants of the stock spaces side by side.

A quick tour of how min and index behave: chains and topped divisor
spaces stay at (1, 1) however large they grow, block spaces scale both
invariants with the block count, and mixed shapes pull the two apart.
"""

from finitetop.constructions import disjoint_sum
from finitetop.core import from_neighborhoods
from finitetop.generators import blocks, chain, discrete, divisor, indiscrete
from finitetop.invariants import report


def main() -> None:
    gallery = [
        ("chain(6)", chain(6)),
        ("discrete(5)", discrete(5)),
        ("indiscrete(5)", indiscrete(5)),
        ("blocks(3,2)", blocks(3, 2)),
        ("divisor(12)", divisor(12)),
        ("divisor(12)+top", divisor(12, with_top=True)),
        ("chain(3)+chain(2)", disjoint_sum(chain(3), chain(2))),
        ("fan", from_neighborhoods(3, [{0}, {1}, {0, 1, 2}])),
    ]
    header = f"{'space':<18} {'n':>3} {'min':>4} {'index':>6} {'t0':>4} {'discrete':>9}"
    print(header)
    print("-" * len(header))
    for name, space in gallery:
        rep = report(space)
        print(
            f"{name:<18} {rep.n:>3} {rep.min_x:>4} {rep.index_x:>6} "
            f"{'yes' if rep.is_t0 else 'no':>4} {'yes' if rep.is_discrete else 'no':>9}"
        )


if __name__ == "__main__":
    main()
