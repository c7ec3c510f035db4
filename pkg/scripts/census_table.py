#!/usr/bin/env python3
"""Tabulate the exhaustive census for small carriers.

For each n, prints the labeled count, the homeomorphism class count, and
the distribution of (min, index) pairs across classes.  Run with::

    python scripts/census_table.py [max_n]
"""

import sys
from collections import Counter

from finitetop.census import CENSUS_CAP, census


def main(max_n: int) -> None:
    print(f"{'n':>2} {'labeled':>8} {'classes':>8}  (min,index) -> class count")
    for n in range(1, max_n + 1):
        row = census(n)
        dist = Counter((c.min_x, c.index_x) for c in row.per_class)
        pretty = ", ".join(
            f"{pair}: {count}" for pair, count in sorted(dist.items())
        )
        print(f"{n:>2} {row.total_labeled:>8} {row.class_count:>8}  {pretty}")


if __name__ == "__main__":
    limit = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    main(min(limit, CENSUS_CAP))
