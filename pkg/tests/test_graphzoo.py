"""
Tests for stable graphs, canonical forms and enumeration
"""
import numpy as np
import pytest

from src.core.errors import GraphValidationError, PreconditionError
from src.graphzoo import (
    StableGraph,
    brute_force_automorphisms,
    build_graph,
    canonicalize,
    contract,
    contract_with_map,
    corolla,
    enumerate_graphs,
    enumerate_trees,
    isomorphic,
    relabel,
    wick_rank_sum,
)


def loop_graph():
    """A trivalent genus-0 vertex with one leg and a self-loop"""
    return StableGraph([0, 2, 1], [0, 0, 0], [0], {0: 1})


def two_vertex_tree():
    return StableGraph([0, 1, 3, 2, 4, 5], [0, 0, 0, 1, 1, 1], [0, 0],
                       {0: 1, 1: 2, 4: 3, 5: 4})


class TestValidation:
    @pytest.mark.parametrize("raw,code", [
        ({"involution": [1, 1, 2], "vertex_of": [0, 0, 0], "genus": [0]}, "non_involutive"),
        ({"involution": [0, 1, 2, 3, 4, 5], "vertex_of": [0, 0, 0, 1, 1, 1], "genus": [0, 0]},
         "disconnected"),
        ({"involution": [0, 1], "vertex_of": [0, 0], "genus": [0]}, "unstable"),
        ({"involution": [0, 1, 2], "vertex_of": [0, 0, 0], "genus": [0],
          "legs": {"0": 1, "1": 1, "2": 3}}, "leg_labels"),
        ({"involution": [0, 1, 2], "vertex_of": [0, 0, 0], "genus": [-1]}, "genus"),
        ({"involution": [0, 1, 2], "vertex_of": [0, 0, 3], "genus": [0]}, "vertex_index"),
    ])
    def test_error_codes(self, raw, code):
        with pytest.raises(GraphValidationError) as info:
            build_graph(raw)
        assert info.value.code == code

    def test_flag_count_must_match(self):
        with pytest.raises(GraphValidationError):
            build_graph({"flags": 4, "involution": [0, 1, 2], "vertex_of": [0, 0, 0], "genus": [0]})

    def test_invariants(self):
        G = loop_graph()
        assert (G.num_vertices, len(G.edges), G.n) == (1, 1, 1)
        assert G.total_genus == 1
        assert G.euler_weight == 1
        assert not G.is_tree()
        assert two_vertex_tree().is_tree()

    def test_document_round_trip(self):
        G = two_vertex_tree()
        assert StableGraph.from_dict(G.to_dict()) == G
        assert G.to_dict()["legs"] == {"0": 1, "1": 2, "4": 3, "5": 4}


class TestContraction:
    def test_contracting_a_loop_raises_genus(self):
        assert contract(loop_graph(), [1]) == corolla(1, 1)

    def test_contracting_a_tree_edge(self):
        assert contract(two_vertex_tree(), [(2, 3)]) == corolla(0, 4)

    def test_contraction_keeps_type(self):
        G = two_vertex_tree()
        H = contract(G, [2])
        assert (H.total_genus, H.n) == (G.total_genus, G.n)

    def test_contracting_nothing(self):
        assert contract(loop_graph(), []) == loop_graph()

    def test_legs_are_not_edges(self):
        with pytest.raises(GraphValidationError) as info:
            contract(loop_graph(), [0])
        assert info.value.code == "not_an_edge"

    @pytest.mark.parametrize("labelled", [True, False])
    @pytest.mark.parametrize("g,n", [
        (0, 4), (1, 1), (1, 2),
        pytest.param(0, 5, marks=pytest.mark.slow),
        pytest.param(2, 1, marks=pytest.mark.slow),
    ])
    def test_two_steps_match_one(self, g, n, labelled):
        for cls in enumerate_graphs(g, n, legs_labelled=labelled):
            G = cls.representative
            for first in G.edges:
                once, flag_map = contract_with_map(G, [first])
                for second in G.edges:
                    if second == first:
                        continue
                    twice = contract(once, [(flag_map[second[0]], flag_map[second[1]])])
                    assert isomorphic(twice, contract(G, [first, second]), use_labels=labelled)


class TestCanonicalForms:
    def test_loop_has_two_automorphisms(self):
        G = loop_graph()
        assert canonicalize(G).aut_order == 2
        assert len(brute_force_automorphisms(G)) == 2

    def test_relabelled_flags_are_isomorphic(self):
        G = two_vertex_tree()
        H = relabel(G, [5, 4, 3, 2, 1, 0], [1, 0])
        assert isomorphic(G, H)
        assert canonicalize(G).key == canonicalize(H).key

    def test_leg_labels_matter_when_used(self):
        G = two_vertex_tree()
        swapped = G.with_labels({0: 1, 1: 3, 4: 2, 5: 4})
        assert not isomorphic(G, swapped)
        assert isomorphic(G, swapped, use_labels=False)

    @pytest.mark.parametrize("labelled", [True, False])
    @pytest.mark.parametrize("g,n", [
        (0, 4), (1, 1), (1, 2),
        pytest.param(0, 5, marks=pytest.mark.slow),
        pytest.param(1, 3, marks=pytest.mark.slow),
        pytest.param(2, 0, marks=pytest.mark.slow),
        pytest.param(2, 1, marks=pytest.mark.slow),
    ])
    def test_keys_survive_random_relabelling(self, g, n, labelled):
        rng = np.random.default_rng(2024)
        for cls in enumerate_graphs(g, n, legs_labelled=labelled):
            G = cls.representative
            for _ in range(100):
                flags = [int(f) for f in rng.permutation(G.num_flags)]
                vertices = [int(v) for v in rng.permutation(G.num_vertices)]
                H = relabel(G, flags, vertices)
                assert canonicalize(H, use_labels=labelled).key == cls.key

    @pytest.mark.parametrize("g,n", [(0, 4), (1, 1), (1, 2), (0, 5)])
    def test_aut_orders_agree_with_brute_force(self, g, n):
        for cls in enumerate_graphs(g, n):
            assert cls.aut_order == len(brute_force_automorphisms(cls.representative))


class TestEnumeration:
    @pytest.mark.parametrize("g,n,count", [(0, 3, 1), (1, 1, 2), (0, 4, 4), (1, 2, 5), (0, 5, 26)])
    def test_labelled_class_counts(self, g, n, count):
        assert len(enumerate_graphs(g, n)) == count

    def test_unlabelled_trees(self):
        assert len(enumerate_trees(4, legs_labelled=False)) == 2

    def test_genus_one_automorphisms(self):
        classes = enumerate_graphs(1, 1)
        assert sorted(c.aut_order for c in classes) == [1, 2]

    def test_classes_are_distinct_and_ordered(self):
        classes = enumerate_graphs(1, 2)
        assert len({c.key for c in classes}) == len(classes)
        edges = [c.num_edges for c in classes]
        assert edges == sorted(edges)
        assert all(c.representative.total_genus == 1 for c in classes)

    def test_unstable_type_rejected(self):
        with pytest.raises(PreconditionError):
            enumerate_graphs(0, 2)

    def test_wick_rank_sum_counts_trees(self):
        assert wick_rank_sum(0, 4, {(0, 3): 1, (0, 4): 1}) == 4
