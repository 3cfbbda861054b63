import networkx as nx
import pytest

from services.constructible_service import all_constructible, constructible_character
from services.family_service import FamilyKey
from services.involution_service import enumerate_admissible
from services.lusztig_service import (
    check_theorem_L,
    family_graph,
    find_noncommon_family,
    get_counterexample_data,
    get_family_data,
    lusztig_families,
    special_characters,
)
from services.symbol_service import Bipartition, Partition, b_of_bipartition
from utils.parameter_validator import NON_INTEGRAL


def B(first, second):
    return Bipartition(Partition(tuple(first)), Partition(tuple(second)))


class TestFamilyGraph:
    def test_b2_components(self):
        components = sorted(sorted(c) for c in nx.connected_components(family_graph(2, 1)))
        assert components == [
            [B((), (1, 1))],
            [B((), (2,)), B((1,), (1,)), B((1, 1), ())],
            [B((2,), ())],
        ]

    def test_b1_is_discrete(self):
        graph = family_graph(1, 1)
        assert graph.number_of_nodes() == 2
        assert graph.number_of_edges() == 0


class TestLusztigFamilies:
    def test_b2(self):
        families = lusztig_families(2, 1)
        assert [family.minimal for family in families] == [B((), (1, 1)), B((1,), (1,)), B((2,), ())]
        assert [b_of_bipartition(family.minimal) for family in families] == [4, 1, 0]

    def test_rank_zero(self):
        families = lusztig_families(0, 2)
        assert len(families) == 1
        assert families[0].members == (B((), ()),)

    def test_nonintegral(self):
        families = lusztig_families(3, NON_INTEGRAL)
        assert len(families) == 10
        assert all(family.key is None for family in families)

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("r", range(1, 5))
    def test_components_are_symbol_families(self, n, r):
        # raises LusztigConsistencyError otherwise
        families = lusztig_families(n, r)
        assert sum(len(family.members) for family in families) == len(set().union(*(f.members for f in families)))

    def test_to_dict(self):
        entry = lusztig_families(2, 1)[1].to_dict(1)
        assert entry["minimal"] == {"first": [1], "second": [1]}
        assert entry["special"] == {"first": [1], "second": [1]}
        assert entry["b"] == {"(∅,(2))": 2, "((1),(1))": 1, "((1,1),∅)": 2}
        assert entry["key"] == {"x": [1], "z": [2, 3, 4], "k": 2, "r": 1}


class TestTheoremL:
    def test_b2(self):
        report = check_theorem_L(2, 1)
        assert report["passed"]
        assert report["special_common"] is True
        assert len(report["families"]) == 3
        minima = [entry["minimal"] for entry in report["constructible"] if len(entry["constituents"]) == 2]
        assert minima == [{"first": [1], "second": [1]}] * 2

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("r", range(1, 5))
    def test_sweep(self, n, r):
        report = check_theorem_L(n, r)
        assert report["failures"] == []
        assert report["passed"]
        if r == 1:
            assert report["special_common"] is True
        else:
            assert report["special_common"] is None

    def test_nonintegral(self):
        assert check_theorem_L(3, NON_INTEGRAL)["passed"]


class TestSpecialCharacters:
    def test_b2(self):
        assert special_characters(2, 1) == [B((), (1, 1)), B((1,), (1,)), B((2,), ())]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_equal_parameters_special_is_minimal(self, n):
        assert special_characters(n, 1) == sorted(family.minimal for family in lusztig_families(n, 1))


class TestNoncommonFamily:
    def test_b2_has_no_witness(self):
        assert find_noncommon_family(2, [1]) is None

    @pytest.mark.parametrize("r", range(1, 5))
    def test_b1_has_no_witness(self, r):
        assert find_noncommon_family(1, [r]) is None

    def test_b3_witness(self):
        witness = find_noncommon_family(3, range(1, 5))
        assert witness is not None
        assert witness["n"] == 3
        assert 1 <= witness["r"] <= 4
        common = None
        for character in witness["constructible"]:
            constituents = {(tuple(c["first"]), tuple(c["second"])) for c in character["constituents"]}
            common = constituents if common is None else common & constituents
        assert len(witness["constructible"]) >= 2
        assert common == set()

    def test_one_arc_among_four_points(self):
        # two fixed points: the outer arcs leave disjoint pairs of members
        key = FamilyKey((), (1, 2, 3, 4), 1, 2)
        characters = [constructible_character(key, inv) for inv in enumerate_admissible(key.z, 2)]
        assert len(characters) == 3
        first, _, last = characters
        assert not set(first.constituents) & set(last.constituents)

    def test_data(self):
        data = get_counterexample_data(2, [1])
        assert data == {"command": "counterexample", "n": 2, "r_range": [1], "witness": None}


class TestFamilyData:
    def test_b2(self):
        data = get_family_data(2, 1)
        assert data["command"] == "families"
        assert len(data["families"]) == 3

    def test_error(self):
        assert "error" in get_family_data(-1, 1)

    def test_constructible_feed_is_reused(self):
        characters = all_constructible(3, 2)
        assert lusztig_families(3, 2, characters) == lusztig_families(3, 2)
