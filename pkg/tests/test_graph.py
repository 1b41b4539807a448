import itertools
import random

import networkx as nx
import pytest

from app.errors import InvalidTreeError
from app.enumeration.free_trees import free_trees
from app.graph.canonical import CanonicalCode, are_isomorphic, canonical_code, tree_centroids
from app.graph.prufer import prufer_decode, prufer_encode
from app.graph.tree import (
    Tree, degree_sequence, dump_tree, load_tree, path_tree, spider_tree,
    star_tree, tree_from_edges, tree_from_networkx,
)


class TestTreeFromEdges:
    def test_smallest_tree(self):
        tree = tree_from_edges(2, [(0, 1)])
        assert tree.adjacency == ((1,), (0,))

    def test_path(self):
        tree = tree_from_edges(3, [(0, 1), (1, 2)])
        assert tree.adjacency == ((1,), (0, 2), (1,))

    def test_single_vertex(self):
        assert tree_from_edges(1, []).n == 1

    def test_cycle_rejected(self):
        with pytest.raises(InvalidTreeError):
            tree_from_edges(4, [(0, 1), (0, 2), (1, 2)])

    def test_disconnected_rejected(self):
        with pytest.raises(InvalidTreeError):
            tree_from_edges(4, [(0, 1), (2, 3), (0, 1)])
        with pytest.raises(InvalidTreeError):
            tree_from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4)])

    def test_loop_and_range_rejected(self):
        with pytest.raises(InvalidTreeError):
            tree_from_edges(2, [(1, 1)])
        with pytest.raises(InvalidTreeError):
            tree_from_edges(2, [(0, 2)])

    def test_adjacency_symmetric(self):
        tree = spider_tree([3, 2, 1])
        for v in range(tree.n):
            for w in tree.adjacency[v]:
                assert v in tree.adjacency[w]


class TestDegreeSequence:
    def test_path(self):
        assert degree_sequence(path_tree(6)) == [2, 2, 2, 2, 1, 1]

    def test_star(self):
        assert degree_sequence(star_tree(5)) == [4, 1, 1, 1, 1]

    def test_spider(self):
        assert degree_sequence(spider_tree([2, 2, 1])) == [3, 2, 2, 1, 1, 1]

    def test_handshake(self):
        for n in range(1, 10):
            for tree in free_trees(n):
                assert sum(degree_sequence(tree)) == 2 * (n - 1)


class TestCanonicalCode:
    def test_relabeled_path(self):
        a = tree_from_edges(3, [(0, 1), (1, 2)])
        b = tree_from_edges(3, [(1, 0), (0, 2)])
        assert canonical_code(a) == canonical_code(b)

    def test_path_vs_star(self):
        assert canonical_code(path_tree(4)) != canonical_code(star_tree(4))

    def test_labeled_trees_on_three_vertices(self):
        codes = {canonical_code(prufer_decode([s], 3)) for s in range(3)}
        assert len(codes) == 1

    def test_string_form(self):
        code = canonical_code(path_tree(3))
        assert str(code) == '0,1,1'
        assert CanonicalCode.parse(str(code)) == code

    def test_bicentroidal_path(self):
        assert len(tree_centroids(path_tree(6))) == 2
        assert tree_centroids(path_tree(5)) == [2]

    def test_code_equality_matches_isomorphism(self):
        rng = random.Random(7)
        for n in range(1, 9):
            trees = list(free_trees(n))
            for a, b in itertools.combinations(trees, 2):
                assert canonical_code(a) != canonical_code(b)
                assert not are_isomorphic(a, b)
            for tree in trees:
                perm = list(range(n))
                rng.shuffle(perm)
                shuffled = tree.relabel(perm)
                assert canonical_code(shuffled) == canonical_code(tree)
                assert are_isomorphic(tree, shuffled)


class TestNetworkxInterface:
    def test_round_trip(self):
        tree = spider_tree([2, 1, 1])
        assert tree_from_networkx(tree.to_networkx()) == tree

    def test_labels_renumbered_in_sorted_order(self):
        graph = nx.Graph([('c', 'b'), ('b', 'a')])
        assert tree_from_networkx(graph).edges() == [(0, 1), (1, 2)]

    def test_cycle_rejected(self):
        with pytest.raises(InvalidTreeError):
            tree_from_networkx(nx.cycle_graph(4))


class TestPrufer:
    def test_base_case(self):
        assert prufer_decode([], 2).edges() == [(0, 1)]

    def test_constant_sequence_is_star(self):
        assert prufer_decode([3, 3, 3]).edges() == [(0, 3), (1, 3), (2, 3), (3, 4)]
        assert prufer_encode(star_tree(5)) == [0, 0, 0]

    def test_round_trip(self):
        for n in range(2, 7):
            for seq in itertools.product(range(n), repeat=n - 2):
                assert prufer_encode(prufer_decode(seq, n)) == list(seq)

    def test_out_of_range(self):
        with pytest.raises(InvalidTreeError):
            prufer_decode([5, 0], 4)

    def test_encode_needs_two_vertices(self):
        with pytest.raises(InvalidTreeError):
            prufer_encode(Tree(n=1, adjacency=((),)))


class TestEdgeListJson:
    def test_dump_and_load(self, tmp_path):
        tree = spider_tree([2, 1, 1])
        path = tmp_path / 'tree.json'
        path.write_text(dump_tree(tree))
        assert load_tree(str(path)) == tree

    def test_malformed_document(self, tmp_path):
        path = tmp_path / 'bad.json'
        path.write_text('{"n": 3, "edges": [[0, 1]]}')
        with pytest.raises(InvalidTreeError):
            load_tree(str(path))
