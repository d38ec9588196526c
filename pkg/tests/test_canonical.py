"""
Tests for canonical graph6 codes.
"""

import random
import unittest

import context  # noqa: F401
from clique_spectra.canonical import (canonical_code, canonical_form,
                                      canonical_labeling)
from clique_spectra.graph6 import graph6_encode
from clique_spectra.graphs import (complete_graph, cycle_graph, empty_graph,
                                   enumerate_labeled_graphs, flower,
                                   from_edges, k3_join_empty, kn_union_empty,
                                   pendant_graph_g0, turan_graph)

# Unlabeled graph counts on n vertices
UNLABELED_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}


class TestCanonicalCode(unittest.TestCase):
    def test_invariant_under_relabeling(self):
        rng = random.Random(3)
        graphs = [
            k3_join_empty(7), turan_graph(8, 3), flower(4, 5, 3),
            pendant_graph_g0(), cycle_graph(9),
            from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6)]),
        ]
        for graph in graphs:
            code = canonical_code(graph)
            for _ in range(100):
                perm = list(range(graph.n))
                rng.shuffle(perm)
                self.assertEqual(canonical_code(graph.relabel(perm)), code)

    def test_isomorphism_classes(self):
        for n in range(1, 7):
            codes = set(
                canonical_code(graph) for graph in enumerate_labeled_graphs(n)
            )
            self.assertEqual(len(codes), UNLABELED_COUNTS[n])

    def test_code_is_least_labeling(self):
        # the least graph6 payload puts the non-edges first
        self.assertEqual(canonical_code(complete_graph(4)), 'C~')
        self.assertEqual(canonical_code(empty_graph(4)), 'C?')
        star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
        self.assertEqual(
            canonical_code(star), graph6_encode(from_edges(4, [
                (0, 3), (1, 3), (2, 3)
            ]))
        )

    def test_canonical_form(self):
        graph = kn_union_empty(6)
        form = canonical_form(graph)
        self.assertEqual(graph6_encode(form), canonical_code(graph))
        key, order = canonical_labeling(graph)
        self.assertEqual(sorted(order), list(range(6)))

    def test_distinguishes_extremal_graphs(self):
        self.assertNotEqual(
            canonical_code(kn_union_empty(6)),
            canonical_code(pendant_graph_g0())
        )
