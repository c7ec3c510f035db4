import pytest

from finitetop.constructions import disjoint_sum, product, t0_quotient
from finitetop.core import canonical_form, from_neighborhoods, relabel
from finitetop.errors import (
    InvalidGlueData,
    NotContinuous,
    NotOpen,
    NotWellDefined,
    SearchBudgetExceeded,
)
from finitetop.generators import blocks, chain, discrete, indiscrete
from finitetop.maps import (
    GlueData,
    SpaceMap,
    find_homeomorphism,
    glue,
    image_space,
    is_continuous,
    is_open_map,
)

from oracles import all_isomorphisms_bruteforce, homeomorphic_bruteforce

SIERP = from_neighborhoods(2, [{0}, {0, 1}])
ONE = from_neighborhoods(1, [{0}])


class TestSpaceMap:
    def test_validates_range(self):
        with pytest.raises(ValueError):
            SpaceMap(SIERP, ONE, (0, 1))

    def test_validates_length(self):
        with pytest.raises(ValueError):
            SpaceMap(SIERP, SIERP, (0,))


class TestContinuity:
    def test_identity(self):
        for s in (SIERP, chain(3), discrete(2), indiscrete(3)):
            assert is_continuous(SpaceMap(s, s, tuple(range(s.n))))

    def test_chain_to_sierpinski(self):
        assert is_continuous(SpaceMap(chain(2), SIERP, (0, 1)))

    def test_constant_maps(self):
        for s in (chain(3), blocks(2, 2)):
            for t in (SIERP, chain(2)):
                for c in range(t.n):
                    assert is_continuous(SpaceMap(s, t, (c,) * s.n))

    def test_discontinuous_map(self):
        # sending the bottom of the chain above its top reverses the order
        assert not is_continuous(SpaceMap(chain(2), chain(2), (1, 0)))


class TestOpenMap:
    def test_identity(self):
        assert is_open_map(SpaceMap(chain(3), chain(3), (0, 1, 2)))

    def test_inclusion_of_top_point(self):
        assert is_open_map(SpaceMap(ONE, SIERP, (1,)))

    def test_collapse_chain_to_point(self):
        assert is_open_map(SpaceMap(chain(2), discrete(2), (0, 0)))

    def test_discrete_to_chain_identity_not_open(self):
        assert not is_open_map(SpaceMap(discrete(2), chain(2), (0, 1)))


class TestImageSpace:
    def test_identity(self):
        img, cor = image_space(SpaceMap(chain(3), chain(3), (0, 1, 2)))
        assert img.masks == chain(3).masks
        assert cor.f == (0, 1, 2)

    def test_collapse_indiscrete_to_point(self):
        img, _ = image_space(SpaceMap(indiscrete(3), ONE, (0, 0, 0)))
        assert img.masks == (1,)

    def test_not_continuous_witness(self):
        with pytest.raises(NotContinuous):
            image_space(SpaceMap(chain(2), chain(2), (1, 0)))

    def test_not_open_witness(self):
        with pytest.raises(NotOpen):
            image_space(SpaceMap(discrete(2), chain(2), (0, 1)))

    def test_t0_class_map_image_matches_quotient(self):
        for s in (blocks(2, 2), indiscrete(4), product(SIERP, indiscrete(2))):
            q, part = t0_quotient(s)
            class_map = SpaceMap(s, q, tuple(part.class_of))
            assert is_continuous(class_map) and is_open_map(class_map)
            img, _ = image_space(class_map)
            assert canonical_form(img) == canonical_form(q)


class TestFindHomeomorphism:
    def test_permuted_copy_found(self):
        s = from_neighborhoods(4, [{0}, {0, 1}, {0, 2}, {0, 1, 2, 3}])
        r = relabel(s, [3, 1, 0, 2])
        h = find_homeomorphism(s, r)
        assert h is not None

    def test_sierpinski_vs_discrete(self):
        assert find_homeomorphism(SIERP, discrete(2)) is None

    def test_chain_vs_chain_plus_point(self):
        assert find_homeomorphism(chain(3), disjoint_sum(chain(2), ONE)) is None

    def test_symmetric(self):
        pairs = [
            (SIERP, relabel(SIERP, [1, 0])),
            (chain(3), blocks(3, 1)),
            (blocks(2, 2), indiscrete(4)),
        ]
        for a, b in pairs:
            assert (find_homeomorphism(a, b) is None) == (
                find_homeomorphism(b, a) is None
            )

    def test_inverse_composition_is_identity(self):
        s = from_neighborhoods(4, [{0}, {0, 1}, {0, 2}, {0, 1, 2, 3}])
        r = relabel(s, [2, 3, 1, 0])
        h = find_homeomorphism(s, r)
        inverse = [0] * 4
        for x, y in enumerate(h.f):
            inverse[y] = x
        assert [inverse[y] for y in h.f] == list(range(4))

    def test_returns_lexicographically_least(self):
        # blocks(2, 2) has many self-homeomorphisms; ours must be the least f
        s = blocks(2, 2)
        h = find_homeomorphism(s, s)
        isos = all_isomorphisms_bruteforce(s, s)
        assert h.f == min(isos)

    def test_agrees_with_bruteforce(self):
        fixtures = [
            (chain(3), relabel(chain(3), [2, 0, 1])),
            (SIERP, from_neighborhoods(2, [{0, 1}, {1}])),
            (discrete(3), blocks(3, 1)),
            (blocks(2, 2), product(discrete(2), indiscrete(2))),
            (chain(4), disjoint_sum(chain(2), chain(2))),
            (indiscrete(2), discrete(2)),
        ]
        for a, b in fixtures:
            assert (find_homeomorphism(a, b) is not None) == (
                homeomorphic_bruteforce(a, b) is not None
            )

    def test_budget_exceeded(self):
        with pytest.raises(SearchBudgetExceeded):
            find_homeomorphism(discrete(6), discrete(6), budget=3)

    def test_carrier_guard(self):
        with pytest.raises(SearchBudgetExceeded):
            find_homeomorphism(discrete(11), discrete(11))

    def test_empty_spaces(self):
        empty = from_neighborhoods(0, [])
        h = find_homeomorphism(empty, empty)
        assert h is not None and h.f == ()


class TestGlue:
    def test_chain_identity(self):
        c2 = chain(2)
        data = GlueData.build([(0, 0), (1, 1)], [{0: 0}, {0: 0, 1: 1}])
        h = glue(c2, c2, data)
        assert h.f == (0, 1)

    def test_block_swap(self):
        s = disjoint_sum(chain(2), chain(2))
        data = GlueData.build(
            [(0, 2), (1, 3), (2, 0), (3, 1)],
            [{0: 2}, {0: 2, 1: 3}, {2: 0}, {2: 0, 3: 1}],
        )
        h = glue(s, s, data)
        assert h.f == (2, 3, 0, 1)
        assert find_homeomorphism(s, s) is not None  # sanity: self-homeos exist

    def test_conflicting_local_maps(self):
        data = GlueData.build([(0, 0), (1, 1)], [{0: 0}, {0: 1, 1: 0}])
        with pytest.raises(NotWellDefined) as exc:
            glue(SIERP, SIERP, data)
        assert exc.value.point == 0

    def test_non_exhaustive_rejected(self):
        data = GlueData.build([(1, 1)], [{0: 0, 1: 1}])
        with pytest.raises(InvalidGlueData):
            glue(SIERP, SIERP, data)

    def test_non_bijective_local_map_rejected(self):
        data = GlueData.build([(0, 0), (1, 1)], [{0: 0}, {0: 0, 1: 0}])
        with pytest.raises(InvalidGlueData):
            glue(SIERP, SIERP, data)

    def test_wrong_domain_rejected(self):
        data = GlueData.build([(0, 0), (1, 1)], [{1: 0}, {0: 0, 1: 1}])
        with pytest.raises(InvalidGlueData):
            glue(SIERP, SIERP, data)

    def test_output_passes_homeomorphism_check(self):
        s = blocks(2, 2)
        data = GlueData.build(
            [(0, 2), (2, 0)],
            [{0: 2, 1: 3}, {2: 0, 3: 1}],
        )
        h = glue(s, s, data)
        assert homeomorphic_bruteforce(s, s) is not None
        inverse = [0] * s.n
        for x, y in enumerate(h.f):
            inverse[y] = x
        assert sorted(h.f) == list(range(s.n))
