"""
Tests for graph construction.
"""

import pickle
import unittest

import networkx as nx

import context  # noqa: F401
from clique_spectra.exceptions import CapacityError, InvalidArgument
from clique_spectra.graphs import (Graph, MultipartiteSpec,
                                   common_neighborhood, complete_graph,
                                   complete_multipartite, cycle_graph,
                                   disjoint_union, edge_pairs, empty_graph,
                                   enumerate_labeled_graphs, flower,
                                   from_edges, join, k3_join_empty,
                                   km_join_turan, kn_union_empty,
                                   labeled_graph_count, path_graph,
                                   pendant_graph_g0, turan_graph, turan_parts)


def to_networkx(graph):
    other = nx.Graph()
    other.add_nodes_from(range(graph.n))
    other.add_edges_from(graph.edges())
    return other


class TestGraph(unittest.TestCase):
    def test_edge_pairs_order(self):
        self.assertEqual(
            edge_pairs(4), [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
        )

    def test_edge_mask_roundtrip(self):
        graph = from_edges(5, [(0, 1), (2, 4), (3, 4)])
        self.assertEqual(Graph.from_edge_mask(5, graph.edge_mask), graph)
        # (0,1) is bit 0, (2,4) bit 8, (3,4) bit 9
        self.assertEqual(graph.edge_mask, 1 | 1 << 8 | 1 << 9)

    def test_validation(self):
        with self.assertRaises(InvalidArgument):
            Graph(3, [0b010, 0b000, 0b000])
        with self.assertRaises(InvalidArgument):
            Graph(2, [0b01, 0b00])
        with self.assertRaises(InvalidArgument):
            Graph(2, [0b10])
        with self.assertRaises(CapacityError):
            empty_graph(65)
        self.assertEqual(Graph(2, [0b10, 0b01]), complete_graph(2))

    def test_immutable(self):
        graph = complete_graph(3)
        with self.assertRaises(AttributeError):
            graph.n = 4
        changed = graph.without_edge(0, 1)
        self.assertTrue(graph.has_edge(0, 1))
        self.assertFalse(changed.has_edge(0, 1))
        self.assertEqual(changed.with_edge(1, 0), graph)

    def test_relabel_and_induced(self):
        graph = path_graph(4)
        relabeled = graph.relabel([3, 2, 1, 0])
        self.assertEqual(relabeled, graph)
        star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
        moved = star.relabel([2, 0, 1, 3])
        self.assertEqual(moved.degree(2), 3)
        self.assertEqual(star.induced([0, 2, 3]).edges(), [(0, 1), (0, 2)])
        with self.assertRaises(InvalidArgument):
            graph.relabel([0, 0, 1, 2])

    def test_pickle(self):
        graph = k3_join_empty(6)
        self.assertEqual(pickle.loads(pickle.dumps(graph)), graph)

    def test_degrees_and_neighbors(self):
        graph = k3_join_empty(6)
        self.assertEqual(graph.degrees(), [5, 5, 5, 3, 3, 3])
        self.assertEqual(graph.neighbors(3), frozenset([0, 1, 2]))
        self.assertEqual(graph.edge_count, 12)


class TestConstructions(unittest.TestCase):
    def test_complete_and_empty(self):
        self.assertEqual(complete_graph(5).edge_count, 10)
        self.assertEqual(empty_graph(4).edge_count, 0)
        self.assertEqual(complete_graph(0).n, 0)

    def test_cycle(self):
        self.assertTrue(nx.is_isomorphic(
            to_networkx(cycle_graph(6)), nx.cycle_graph(6)
        ))
        with self.assertRaises(InvalidArgument):
            cycle_graph(2)

    def test_join_and_union(self):
        joined = join(complete_graph(2), empty_graph(3))
        self.assertEqual(joined.edge_count, 1 + 6)
        union = disjoint_union(complete_graph(3), complete_graph(2))
        self.assertEqual(union.edges(), [(0, 1), (0, 2), (1, 2), (3, 4)])
        with self.assertRaises(CapacityError):
            join(complete_graph(40), complete_graph(25))

    def test_join_degrees(self):
        pairs = [
            (complete_graph(3), empty_graph(4)),
            (path_graph(4), cycle_graph(5)),
            (flower(3, 3, 2), turan_graph(6, 3)),
            (empty_graph(0), complete_graph(2)),
        ]
        for first, second in pairs:
            joined = join(first, second)
            self.assertEqual(
                joined.degrees(),
                [d + second.n for d in first.degrees()]
                + [d + first.n for d in second.degrees()]
            )

    def test_multipartite(self):
        graph = complete_multipartite(MultipartiteSpec([1, 3, 2]))
        self.assertTrue(nx.is_isomorphic(
            to_networkx(graph), nx.complete_multipartite_graph(1, 3, 2)
        ))
        with self.assertRaises(InvalidArgument):
            MultipartiteSpec([2, 0])
        with self.assertRaises(InvalidArgument):
            MultipartiteSpec([])

    def test_turan(self):
        self.assertEqual(turan_parts(7, 3), [3, 2, 2])
        self.assertEqual(turan_parts(2, 4), [1, 1])
        self.assertEqual(turan_parts(0, 0), [])
        with self.assertRaises(InvalidArgument):
            turan_parts(3, 0)
        self.assertTrue(nx.is_isomorphic(
            to_networkx(turan_graph(10, 3)), nx.turan_graph(10, 3)
        ))

    def test_km_join_turan(self):
        graph = km_join_turan(14, 1, 3)
        self.assertEqual(graph.degrees()[0], 13)
        self.assertEqual(graph.edge_count, 13 + 6 * 7)
        self.assertEqual(km_join_turan(5, 3, 4), k3_join_empty(5))

    def test_k5_constructions(self):
        self.assertEqual(kn_union_empty(6).degrees(), [4] * 5 + [0])
        g0 = pendant_graph_g0()
        self.assertEqual(g0.degrees(), [5, 4, 4, 4, 4, 1])
        with self.assertRaises(InvalidArgument):
            kn_union_empty(4)

    def test_flower(self):
        # three triangles sharing one vertex
        friendship = flower(3, 3, 3)
        self.assertTrue(nx.is_isomorphic(
            to_networkx(friendship), nx.windmill_graph(3, 3)
        ))
        # two K_4 sharing a triangle
        graph = flower(3, 4, 2)
        self.assertEqual(graph.n, 5)
        self.assertEqual(graph.edge_count, 9)
        self.assertFalse(graph.has_edge(3, 4))
        with self.assertRaises(InvalidArgument):
            flower(3, 5, 2)

    def test_flower_petals_share_the_kernel(self):
        for r, k, petals in [(3, 3, 4), (3, 4, 3), (4, 5, 3), (4, 6, 2),
                             (5, 7, 3)]:
            graph = to_networkx(flower(r, k, petals))
            cliques = [
                set(clique) for clique in nx.enumerate_all_cliques(graph)
                if len(clique) == k
            ]
            self.assertEqual(len(cliques), petals)
            for first in cliques:
                for second in cliques:
                    if first is not second:
                        self.assertEqual(
                            len(first & second), 2 * k - 2 * r + 1
                        )
            self.assertFalse(any(
                len(clique) > k for clique in nx.find_cliques(graph)
            ))

    def test_common_neighborhood(self):
        graph = k3_join_empty(5)
        self.assertEqual(common_neighborhood(graph, [3, 4]), {0, 1, 2})
        self.assertEqual(common_neighborhood(graph, [0, 1, 2]), {3, 4})
        self.assertEqual(common_neighborhood(graph, []), set(range(5)))
        with self.assertRaises(InvalidArgument):
            common_neighborhood(graph, [7])


class TestEnumeration(unittest.TestCase):
    def test_labeled_enumeration(self):
        graphs = list(enumerate_labeled_graphs(4))
        self.assertEqual(len(graphs), labeled_graph_count(4))
        self.assertEqual(graphs[0], empty_graph(4))
        self.assertEqual(graphs[-1], complete_graph(4))
        self.assertEqual(len(set(graphs)), 64)

    def test_labeled_enumeration_limit(self):
        with self.assertRaises(CapacityError) as caught:
            next(enumerate_labeled_graphs(8))
        self.assertIn('--input', caught.exception.remedy)
