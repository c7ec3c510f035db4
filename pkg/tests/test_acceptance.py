"""End-to-end acceptance suite.

One test per criterion; each prints a single PASS/FAIL line.  Stated
time budgets are asserted, value checks are exact.
"""

import random
import time
from contextlib import contextmanager

import pytest

from finitetop.census import enumerate_spaces
from finitetop.cli import parse, run, serialize, space_to_document
from finitetop.constructions import (
    Partition,
    disjoint_sum,
    product,
    quotient,
    subspace,
    t0_quotient,
)
from finitetop.core import PointSet, is_open, open_sets, relabel
from finitetop.errors import NotWellDefined, TooManyOpenSets
from finitetop.generators import (
    blocks,
    chain,
    discrete,
    divisor,
    indiscrete,
    random_space,
)
from finitetop.invariants import (
    index_of,
    is_basic,
    is_discrete,
    is_hausdorff,
    is_irreducible,
    min_of,
    report,
)
from finitetop.maps import GlueData, SpaceMap, glue, image_space, is_continuous, is_open_map

from oracles import (
    all_isomorphisms_bruteforce,
    count_preorders_bruteforce,
    min_cover_bruteforce,
)


@contextmanager
def criterion(num: int, desc: str):
    try:
        yield
    except BaseException:
        print(f"criterion {num}: FAIL - {desc}")
        raise
    print(f"criterion {num}: PASS - {desc}")


def _random_corpus(count: int, base_seed: int, max_n: int = 12):
    rng = random.Random(base_seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_n)
        out.append(random_space(n, seed=base_seed + 7919 * i, density=rng.random()))
    return out


def _census_corpus():
    out = []
    for n in range(1, 5):
        out.extend(enumerate_spaces(n))
    return out


def test_criterion_1_stock_space_invariants():
    with criterion(1, "chain and topped divisor spaces have min = index = 1"):
        start = time.perf_counter()
        for k in range(1, 9):
            rep = report(chain(k))
            assert rep.min_x == 1 and rep.index_x == 1, k
        for bound in range(1, 13):
            rep = report(divisor(bound, with_top=True))
            assert rep.min_x == 1 and rep.index_x == 1, bound
        assert time.perf_counter() - start < 1.0


def test_criterion_2_min_matches_bruteforce_cover():
    with criterion(2, "maximal-neighborhood min equals brute-force set cover"):
        start = time.perf_counter()
        for s in _census_corpus():
            assert min_of(s)[0] == min_cover_bruteforce(s)
        for s in _random_corpus(500, base_seed=20_000):
            assert min_of(s)[0] == min_cover_bruteforce(s)
        assert time.perf_counter() - start < 60.0


def test_criterion_3_census_counts():
    with criterion(3, "labeled space counts are 1, 4, 29, 355 for n = 1..4"):
        start = time.perf_counter()
        expected = {1: 1, 2: 4, 3: 29, 4: 355}
        for n, want in expected.items():
            assert sum(1 for _ in enumerate_spaces(n)) == want
            assert count_preorders_bruteforce(n) == want
        assert time.perf_counter() - start < 120.0


def test_criterion_4_theorem_suite():
    corpus = _random_corpus(1000, base_seed=40_000) + _census_corpus()
    rng = random.Random(41_000)

    with criterion(4, "structure and invariance laws hold with zero violations"):
        # basic => irreducible; distinct irreducibles disjoint;
        # at most one basic set inside any neighborhood; index <= min
        for s in corpus:
            irreducible = set()
            basics = set()
            for x in range(s.n):
                basic = is_basic(s, x)
                irr = is_irreducible(s, x)
                if basic:
                    assert irr
                    basics.add(s.masks[x])
                if irr:
                    irreducible.add(s.masks[x])
            listed = sorted(irreducible)
            for i, a in enumerate(listed):
                for b in listed[i + 1 :]:
                    assert a & b == 0
            for m in s.masks:
                assert sum(1 for b in basics if b & ~m == 0) <= 1
            assert index_of(s) <= min_of(s)[0]

        # min and index survive relabeling
        for s in corpus:
            base = (min_of(s)[0], index_of(s))
            for _ in range(10):
                perm = list(range(s.n))
                rng.shuffle(perm)
                r = relabel(s, perm)
                assert (min_of(r)[0], index_of(r)) == base

        # product and subspace neighborhood formulas, exhaustively per pair
        for _ in range(100):
            na = rng.randint(1, 12)
            nb = rng.randint(1, max(1, min(12, 144 // na)))
            a = random_space(na, seed=rng.randrange(2**32), density=rng.random())
            b = random_space(nb, seed=rng.randrange(2**32), density=rng.random())
            p = product(a, b)
            assert p.n <= 144
            for x in range(a.n):
                for y in range(b.n):
                    expected = 0
                    for u in a.nbhd[x].members():
                        for v in b.nbhd[y].members():
                            expected |= 1 << (u * b.n + v)
                    assert p.masks[x * b.n + y] == expected
            bits = rng.randrange(1 << a.n)
            sel = PointSet(a.n, bits)
            sub = subspace(a, sel)
            members = sel.members()
            for i, pt in enumerate(members):
                got = 0
                for j in sub.nbhd[i].members():
                    got |= 1 << members[j]
                assert got == a.masks[pt] & sel.bits

        # quotients validate; T0 collapse is discrete iff all irreducible
        for s in corpus:
            if s.n > 0:
                assignment = [rng.randrange(s.n) for _ in range(s.n)]
                part = Partition.from_class_of(assignment)
                quotient(s, part)  # construction re-validates the axioms
            q, _ = t0_quotient(s)
            assert is_discrete(q) == all(is_irreducible(s, x) for x in range(s.n))

        # separation: the only Hausdorff spaces here are discrete
        for s in corpus:
            assert is_hausdorff(s) == is_discrete(s)

        # continuous open maps: the image carries the mapped neighborhoods
        checked = 0
        i = 0
        while checked < 200:
            i += 1
            s = corpus[(13 * i) % len(corpus)]
            kind = i % 5
            if kind == 0 and s.n > 0:
                q, part = t0_quotient(s)
                m = SpaceMap(s, q, tuple(part.class_of))
            elif kind == 1 and s.n > 0:
                perm = list(range(s.n))
                rng.shuffle(perm)
                m = SpaceMap(s, relabel(s, perm), tuple(perm))
            elif kind == 2 and s.n > 0:
                opens = open_sets(s, limit=4096)
                chosen = opens[rng.randrange(len(opens))]
                sub = subspace(s, chosen)
                members = chosen.members()
                m = SpaceMap(sub, s, members)
            elif kind == 3 and s.n > 0:
                target = chain(rng.randint(1, 4))
                m = SpaceMap(s, target, (rng.randrange(target.n),) * s.n)
            elif kind == 4 and 0 < s.n <= 12:
                other = random_space(rng.randint(1, 4), seed=i, density=rng.random())
                if other.n * s.n > 144:
                    continue
                p = product(s, other)
                m = SpaceMap(p, s, tuple(x // other.n for x in range(p.n)))
            else:
                continue
            assert is_continuous(m) and is_open_map(m)
            img, cores = image_space(m)
            for x in range(m.source.n):
                assert img.masks[cores.f[x]] == cores.image_of(m.source.masks[x])
            checked += 1


def test_criterion_5_intersection_closure_sampling():
    with criterion(5, "sampled intersections of open families are open"):
        start = time.perf_counter()
        rng = random.Random(50_000)
        collected = []
        seed = 0
        while len(collected) < 100:
            seed += 1
            n = 3 + seed % 10
            s = random_space(n, seed=50_000 + seed, density=0.55 + 0.45 * ((seed % 7) / 6))
            try:
                opens = open_sets(s, limit=12)
            except TooManyOpenSets:
                continue
            collected.append((s, opens))
        for s, opens in collected:
            for _ in range(20):
                k = rng.randint(0, len(opens))
                chosen = rng.sample(opens, k)
                inter = (1 << s.n) - 1
                for o in chosen:
                    inter &= o.bits
                assert is_open(s, PointSet(s.n, inter))
        assert time.perf_counter() - start < 10.0


def test_criterion_6_glue_fixtures():
    with criterion(6, "gluing accepts the two good fixtures, rejects the conflict"):
        c2 = chain(2)
        identity = GlueData.build([(0, 0), (1, 1)], [{0: 0}, {0: 0, 1: 1}])
        h = glue(c2, c2, identity)
        assert h.f == (0, 1)

        two_blocks = disjoint_sum(chain(2), chain(2))
        swap = GlueData.build(
            [(0, 2), (1, 3), (2, 0), (3, 1)],
            [{0: 2}, {0: 2, 1: 3}, {2: 0}, {2: 0, 3: 1}],
        )
        h = glue(two_blocks, two_blocks, swap)
        assert h.f == (2, 3, 0, 1)
        assert h.f in all_isomorphisms_bruteforce(two_blocks, two_blocks)

        sierp = parse("space S\npoints a b\nnbhd a: a\nnbhd b: a b\n").to_space()
        conflicting = GlueData.build([(0, 0), (1, 1)], [{0: 0}, {0: 1, 1: 0}])
        with pytest.raises(NotWellDefined) as exc:
            glue(sierp, sierp, conflicting)
        assert exc.value.point == 0


def _document_corpus():
    docs = [
        "space sierpinski\npoints a b\nnbhd a: a\nnbhd b: a b\n",
        "space vee\npoints bot l r\nnbhd bot: bot\nnbhd l: bot l\nnbhd r: bot r\n",
        "space empty\npoints\n",
    ]
    built = [
        (chain(1), "chain-1"),
        (chain(2), "chain-2"),
        (chain(3), "chain-3"),
        (chain(4), "chain-4"),
        (discrete(3), "discrete-3"),
        (indiscrete(4), "indiscrete-4"),
        (blocks(2, 3), "blocks-2x3"),
        (blocks(3, 1), "blocks-3x1"),
        (divisor(6), "divisor-6"),
        (divisor(4, with_top=True), "divisor-4-top"),
        (random_space(8, seed=1, density=0.4), "random-8-1"),
        (random_space(6, seed=2, density=0.7), "random-6-2"),
        (product(chain(2), chain(2)), "square"),
        (disjoint_sum(chain(2), chain(2)), "two-chains"),
        (quotient(chain(3), Partition.from_blocks(3, [[0, 1], [2]])), "collapsed"),
        (t0_quotient(blocks(2, 2))[0], "blocks-t0"),
        (subspace(divisor(6), PointSet.from_points(6, [0, 1, 3])), "powers-of-two"),
    ]
    docs.extend(serialize(space_to_document(s, name)) for s, name in built)
    return docs


def test_criterion_7_cli_round_trip(tmp_path, capsys):
    with criterion(7, "document round trips, construction outputs re-validate"):
        corpus = _document_corpus()
        assert len(corpus) == 20
        for text in corpus:
            doc = parse(text)
            assert serialize(doc) == text
            assert parse(serialize(doc)) == doc
            doc.to_space()

        a = tmp_path / "a.space"
        a.write_text(corpus[0], encoding="utf-8")
        b = tmp_path / "b.space"
        b.write_text(serialize(space_to_document(chain(2), "c2")), encoding="utf-8")
        commands = [
            ["product", str(a), str(b)],
            ["sum", str(a), str(b)],
            ["subspace", str(a), "--points", "a,b"],
            ["quotient", str(a), "--classes", "a,b"],
            ["t0", str(a)],
            ["gen", "divisor", "6", "--with-top"],
        ]
        for argv in commands:
            assert run(argv) == 0, argv
            out = capsys.readouterr().out
            produced = parse(out)
            produced.to_space()
            assert serialize(produced) == out

        assert run(["census", "3"]) == 0
        out = capsys.readouterr().out
        assert "labeled: 29" in out.splitlines()[1]
