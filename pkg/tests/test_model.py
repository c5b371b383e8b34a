from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import choreogame as cg
from choreogame.model import RESERVED_IDS

from conftest import golden_instance, make_instance
from oracles import INF, all_paths, brute_best_path, brute_player_cost


class TestLoading:
    def test_golden_document_loads(self, golden):
        assert golden.players == ("Beta", "Delta", "Gamma", "Lambda")
        assert len(golden.graph.service_ids) == 5
        assert golden.budget == 34

    def test_two_cycle_rejected(self):
        with pytest.raises(cg.CycleDetected):
            make_instance(
                [("a", 1, "p"), ("b", 1, "q")],
                [("a", "b"), ("b", "a")],
                5,
            )

    def test_self_loop_rejected(self):
        with pytest.raises(cg.CycleDetected):
            make_instance([("a", 1, "p")], [("a", "a")], 5)

    def test_empty_service_set_rejected(self):
        with pytest.raises(cg.NoPathExists):
            make_instance([], [], 5)

    def test_duplicate_id_rejected(self):
        with pytest.raises(cg.DuplicateVertexId):
            make_instance([("a", 1, "p"), ("a", 2, "q")], [], 5)

    def test_negative_cost_rejected(self):
        with pytest.raises(cg.NegativeCost):
            make_instance([("a", -1, "p")], [], 5)

    def test_negative_budget_rejected(self):
        with pytest.raises(cg.NegativeCost):
            make_instance([("a", 1, "p")], [], -3)

    def test_reserved_ids_rejected(self):
        for reserved in RESERVED_IDS:
            with pytest.raises(cg.MalformedDocument):
                make_instance([(reserved, 1, "p")], [], 5)

    def test_unknown_edge_endpoint_rejected(self):
        with pytest.raises(cg.MalformedDocument):
            make_instance([("a", 1, "p")], [("a", "zz")], 5)

    def test_augmentation_wires_degree_zero_vertices(self, golden):
        # alpha/lambda/delta have no service predecessors, gamma/beta no successors
        assert set(golden.graph.successors("__source__")) == {"alpha", "delta", "lambda"}
        assert golden.graph.successors("gamma") == ("__sink__",)
        assert golden.graph.successors("beta") == ("__sink__",)


class TestShortestPath:
    def test_golden_shortest_path(self, golden):
        result = cg.shortest_path(golden)
        assert result.cost == Fraction(6)
        assert result.path == ("alpha", "gamma")

    def test_single_chain(self):
        inst = make_instance(
            [("w1", 3, "p"), ("w2", 4, "q")], [("w1", "w2")], 30
        )
        result = cg.shortest_path(inst)
        assert result.cost == Fraction(7)
        assert result.path == ("w1", "w2")

    def test_lexicographic_tie_break(self):
        inst = make_instance(
            [("a", 1, "p"), ("b", 1, "q"), ("c", 1, "r")],
            [("a", "c"), ("b", "c")],
            10,
        )
        assert cg.shortest_path(inst).path == ("a", "c")

    @pytest.mark.parametrize("seed", range(30))
    def test_matches_enumeration_on_random_dags(self, seed):
        inst = cg.generate_instance(seed, services=10, layers=3, max_cost=12)
        expected = min(all_paths(inst))
        result = cg.shortest_path(inst)
        assert (result.cost, result.path) == expected

    def test_costs_are_exact_fractions(self, golden):
        result = cg.shortest_path(golden)
        assert isinstance(result.cost, Fraction)
        inst = make_instance(
            [("a", "0.1", "p"), ("b", "0.2", "q")], [("a", "b")], "1.5"
        )
        assert cg.shortest_path(inst).cost == Fraction(3, 10)


class TestCoalitionPaths:
    def test_restricted_golden_cases(self, golden):
        assert cg.restricted_shortest_path(golden, ["Lambda", "Gamma"]).cost == 6
        result = cg.restricted_shortest_path(golden, ["Gamma", "Delta"])
        assert (result.cost, result.path) == (Fraction(12), ("delta", "gamma"))
        assert not cg.restricted_shortest_path(golden, ["Delta"]).exists

    def test_avoiding_golden_cases(self, golden):
        result = cg.avoiding_shortest_path(golden, ["Lambda", "Gamma"])
        assert (result.cost, result.path) == (Fraction(23), ("delta", "beta"))
        assert cg.avoiding_shortest_path(golden, []).cost == 6
        assert cg.avoiding_shortest_path(golden, golden.players).cost == INF

    def test_avoiding_empty_equals_shortest(self, golden):
        assert cg.avoiding_shortest_path(golden, []) == cg.shortest_path(golden)

    def test_unknown_player_rejected(self, golden):
        with pytest.raises(ValueError):
            cg.restricted_shortest_path(golden, ["Nobody"])

    @settings(max_examples=60, deadline=None)
    @given(
        members=st.sets(st.sampled_from(["Beta", "Delta", "Gamma", "Lambda"])),
        extra=st.sets(st.sampled_from(["Beta", "Delta", "Gamma", "Lambda"])),
    )
    def test_monotonicity(self, members, extra):
        inst = golden_instance()
        smaller = frozenset(members)
        larger = smaller | frozenset(extra)
        assert (
            cg.avoiding_shortest_path(inst, larger).cost
            >= cg.avoiding_shortest_path(inst, smaller).cost
        )
        assert (
            cg.restricted_shortest_path(inst, larger).cost
            <= cg.restricted_shortest_path(inst, smaller).cost
        )

    @pytest.mark.parametrize("seed", range(10))
    def test_restricted_and_avoiding_match_enumeration(self, seed):
        inst = cg.generate_instance(seed, services=8, layers=3, players=4)
        players = inst.players
        for bits in range(1 << len(players)):
            members = frozenset(p for i, p in enumerate(players) if bits >> i & 1)
            allowed = inst.graph.vertices_of(members)
            assert cg.restricted_shortest_path(inst, members).cost == (
                brute_best_path(inst, allowed)[0]
            )
            rest = frozenset(inst.graph.service_ids) - allowed
            assert cg.avoiding_shortest_path(inst, members).cost == (
                brute_best_path(inst, rest)[0]
            )


class TestPlayerPathCost:
    @pytest.mark.parametrize(
        "player,expected",
        [("Lambda", 6), ("Delta", 12), ("Beta", 20), ("Gamma", 6)],
    )
    def test_golden_values(self, golden, player, expected):
        assert cg.player_path_cost(golden, player) == Fraction(expected)

    @pytest.mark.parametrize("seed", range(20))
    def test_matches_enumeration(self, seed):
        inst = cg.generate_instance(seed, services=9, layers=3, players=5)
        for player in inst.players:
            assert cg.player_path_cost(inst, player) == brute_player_cost(inst, player)

    def test_shortest_equals_min_over_players(self, golden):
        cheapest = min(cg.player_path_cost(golden, p) for p in golden.players)
        assert cheapest == cg.shortest_path(golden).cost


class TestOfferablePath:
    def test_requires_two_services(self):
        inst = make_instance(
            [("solo", 2, "p"), ("x", 9, "q"), ("y", 9, "q")],
            [("x", "y")],
            20,
        )
        # the single-service path wins outright but cannot be offered
        assert cg.shortest_path(inst).path == ("solo",)
        offer = cg.offerable_path(inst, ["p", "q"])
        assert offer.path == ("x", "y")
        assert not cg.offerable_path(inst, ["p"]).exists

    def test_matches_enumeration(self):
        for seed in range(10):
            inst = cg.generate_instance(seed, services=7, layers=2, players=4)
            members = frozenset(inst.players[:2])
            allowed = inst.graph.vertices_of(members)
            assert cg.offerable_path(inst, members).cost == (
                brute_best_path(inst, allowed, min_services=2)[0]
            )
