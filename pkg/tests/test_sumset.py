"""Sumset-search tests: mono-pair detection, forced verdicts, min colours."""

import random
from itertools import product

import pytest

from fourfree.sumset import (
    FiniteGroupSpec,
    GroupTooLarge,
    all_colourings_forced,
    constant_colouring,
    find_mono_pair_sumset,
    min_colours_avoiding,
)

Z4 = FiniteGroupSpec((4,))
Z2 = FiniteGroupSpec((2,))
Z2Z2 = FiniteGroupSpec((2, 2))


def brute_force_forced(group, colours):
    """Oracle: enumerate every raw colouring (no pruning, no symmetry)."""
    elems = group.elements()
    pairs = [(a, b) for i, a in enumerate(elems) for b in elems[i + 1 :]]
    for assign in product(range(colours), repeat=len(elems)):
        table = dict(zip(elems, assign))
        if not any(
            table[group.double(a)] == table[group.double(b)] == table[group.add(a, b)]
            for a, b in pairs
        ):
            return False
    return True


class TestFiniteGroupSpec:
    def test_size_and_elements(self):
        assert Z4.size == 4 and Z2Z2.size == 4
        assert FiniteGroupSpec(()).size == 1
        assert Z2Z2.elements() == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_rejects_order_one(self):
        with pytest.raises(ValueError):
            FiniteGroupSpec((1, 4))

    def test_order_of(self):
        g = FiniteGroupSpec((4, 6))
        assert g.order_of((0, 0)) == 1
        assert g.order_of((2, 3)) == 2
        assert g.order_of((1, 1)) == 12


class TestFindMonoPairSumset:
    def test_constant_colouring_always_finds(self):
        assert find_mono_pair_sumset(Z4, constant_colouring(Z4)) is not None

    def test_documented_avoiding_z4_colouring(self):
        # every triple {2x, 2y, x+y} meets both 0 and 2 or is non-constant
        table = {(0,): 0, (1,): 0, (2,): 1, (3,): 0}
        assert find_mono_pair_sumset(Z4, table) is None

    def test_zero_nonzero_colouring_on_z2_cube(self):
        g = FiniteGroupSpec((2, 2, 2))
        table = {e: (0 if any(e) else 1) for e in g.elements()}
        assert find_mono_pair_sumset(g, table) is None

    def test_total_table_required(self):
        with pytest.raises(ValueError):
            find_mono_pair_sumset(Z4, {(0,): 0})

    def test_cap(self):
        g = FiniteGroupSpec((2,) * 13)
        with pytest.raises(GroupTooLarge):
            find_mono_pair_sumset(g, {}, cap=4096)


class TestAllColouringsForced:
    def test_z4_one_colour_forced(self):
        assert all_colourings_forced(Z4, 1).verdict == "forced"

    def test_z4_two_colours_not_forced_with_verified_witness(self):
        res = all_colourings_forced(Z4, 2)
        assert res.verdict == "not_forced"
        assert find_mono_pair_sumset(Z4, res.witness_table()) is None

    def test_z2_one_colour_forced(self):
        # the single pair {0, g} gives {0, 0, g}, monochromatic under 1 colour
        assert all_colourings_forced(Z2, 1).verdict == "forced"

    @pytest.mark.parametrize("group", [Z2, Z4, Z2Z2])
    @pytest.mark.parametrize("colours", [1, 2])
    def test_matches_brute_force(self, group, colours):
        res = all_colourings_forced(group, colours)
        assert res.verdict in ("forced", "not_forced")
        assert (res.verdict == "forced") == brute_force_forced(group, colours)

    def test_budget_zero_is_unknown(self):
        res = all_colourings_forced(Z4, 2, budget=0)
        assert res.verdict == "unknown" and res.witness is None

    def test_forced_is_downward_monotone(self):
        for group in (Z2, Z4, Z2Z2, FiniteGroupSpec((4, 2))):
            verdicts = [
                all_colourings_forced(group, c).verdict == "forced" for c in (1, 2, 3)
            ]
            for lo, hi in zip(verdicts, verdicts[1:]):
                assert lo or not hi  # forced at c implies forced below c

    def test_witnesses_self_consistent(self):
        for group in (Z4, Z2Z2, FiniteGroupSpec((4, 4)), FiniteGroupSpec((8,))):
            for c in (2, 3):
                res = all_colourings_forced(group, c)
                if res.verdict == "not_forced":
                    assert find_mono_pair_sumset(group, res.witness_table()) is None


class TestMinColoursAvoiding:
    def test_z4_needs_two(self):
        res = min_colours_avoiding(Z4)
        assert res.count == 2
        assert find_mono_pair_sumset(Z4, res.witness_table()) is None

    def test_z2_z2_needs_two(self):
        res = min_colours_avoiding(Z2Z2)
        assert res.count == 2

    def test_trivial_group_needs_one(self):
        res = min_colours_avoiding(FiniteGroupSpec(()))
        assert res.count == 1

    def test_budget_exhaustion_reported(self):
        res = min_colours_avoiding(Z4, budget=0)
        assert res.verdict == "unknown" and res.count is None


class TestAutomorphismInvariance:
    def test_coordinate_swap_on_z4_squared(self):
        g = FiniteGroupSpec((4, 4))
        rng = random.Random(77)
        elems = g.elements()
        for _ in range(30):
            table = {e: rng.randrange(3) for e in elems}
            swapped = {e: table[(e[1], e[0])] for e in elems}
            assert (find_mono_pair_sumset(g, table) is None) == (
                find_mono_pair_sumset(g, swapped) is None
            )

    def test_negation_on_z4(self):
        rng = random.Random(78)
        for _ in range(30):
            table = {e: rng.randrange(2) for e in Z4.elements()}
            negated = {e: table[Z4.neg(e)] for e in Z4.elements()}
            assert (find_mono_pair_sumset(Z4, table) is None) == (
                find_mono_pair_sumset(Z4, negated) is None
            )


class TestSearchResultShape:
    def test_describe_round_trips_to_json(self):
        import json

        res = all_colourings_forced(Z4, 2)
        blob = json.dumps(res.describe())
        parsed = json.loads(blob)
        assert parsed["verdict"] == "not_forced"
        assert parsed["group"] == {"orders": [4], "size": 4}
        assert parsed["witness"]["[2]"] != parsed["witness"]["[0]"]
