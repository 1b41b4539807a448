import pytest

from app.errors import DegenerateAlphaError, OracleCostError
from app.graph.tree import Tree, path_tree, spider_tree, star_tree
from app.invariants.domination import (
    domination_number, domination_number_oracle, is_dominating_set, min_dominating_sets,
)
from app.invariants.edge_partition import EdgePartition, edge_partition
from app.invariants.randic import (
    first_zagreb_index, modified_first_zagreb_index, pendent_count, zeroth_order_general_randic,
)


class TestZerothOrderIndex:
    def test_alpha_zero_counts_vertices(self, small_trees):
        for n, tree in small_trees:
            assert zeroth_order_general_randic(tree, 0) == n

    def test_alpha_one_is_handshake(self, small_trees):
        for n, tree in small_trees:
            assert zeroth_order_general_randic(tree, 1) == 2 * (n - 1)

    def test_path_six_alpha_two(self):
        assert zeroth_order_general_randic(path_tree(6), 2) == 18
        assert first_zagreb_index(path_tree(6)) == 18

    def test_integer_alpha_is_exact(self):
        value = zeroth_order_general_randic(star_tree(9), 3)
        assert isinstance(value, int)
        assert value == 8 ** 3 + 8

    def test_float_alpha(self):
        assert zeroth_order_general_randic(star_tree(5), 0.5) == pytest.approx(2 + 4)
        assert modified_first_zagreb_index(path_tree(3)) == pytest.approx(2 + 2 ** -0.5)

    def test_integral_float_alpha_normalized(self):
        assert zeroth_order_general_randic(path_tree(6), 2.0) == 18

    def test_single_vertex(self):
        single = Tree(n=1, adjacency=((),))
        assert zeroth_order_general_randic(single, 2) == 0
        with pytest.raises(DegenerateAlphaError):
            zeroth_order_general_randic(single, -1)
        with pytest.raises(DegenerateAlphaError):
            zeroth_order_general_randic(single, 0)

    def test_m1_matches_direct_loop(self, small_trees):
        for _, tree in small_trees:
            direct = 0
            for v in range(tree.n):
                direct += len(tree.adjacency[v]) * len(tree.adjacency[v])
            assert zeroth_order_general_randic(tree, 2) == direct


class TestDominationNumber:
    def test_star(self):
        for n in range(2, 9):
            assert domination_number(star_tree(n)).gamma == 1

    def test_path_six(self):
        assert domination_number(path_tree(6)).gamma == 2

    def test_spider_two_two_one(self):
        assert domination_number(spider_tree([2, 2, 1])).gamma == 3

    def test_certificate_dominates(self, small_trees):
        for _, tree in small_trees:
            cert = domination_number(tree)
            assert cert.dominates(tree)
            assert len(cert.vertex_set) == cert.gamma

    def test_certificate_deterministic(self):
        assert domination_number(path_tree(7)) == domination_number(path_tree(7))

    @pytest.mark.parametrize('n', range(2, 21))
    def test_paths(self, n):
        assert domination_number(path_tree(n)).gamma == -(-n // 3)

    def test_dp_matches_oracle(self, small_trees):
        for _, tree in small_trees:
            assert domination_number(tree).gamma == domination_number_oracle(tree)

    def test_range(self, small_trees):
        for n, tree in small_trees:
            assert 1 <= domination_number(tree).gamma <= n // 2


class TestOracle:
    def test_small_paths(self):
        assert domination_number_oracle(path_tree(3)) == 1
        assert domination_number_oracle(path_tree(7)) == 3

    def test_cost_guard(self):
        with pytest.raises(OracleCostError):
            domination_number_oracle(path_tree(17))
        with pytest.raises(OracleCostError):
            min_dominating_sets(path_tree(17))


class TestMinDominatingSets:
    def test_path_three(self):
        sets = min_dominating_sets(path_tree(3))
        assert [c.vertex_set for c in sets] == [frozenset({1})]

    def test_path_four(self):
        sets = {c.vertex_set for c in min_dominating_sets(path_tree(4))}
        assert sets == {frozenset(s) for s in ({0, 2}, {0, 3}, {1, 2}, {1, 3})}

    def test_star_five(self):
        sets = min_dominating_sets(star_tree(5))
        assert len(sets) == 1 and sets[0].vertex_set == frozenset({0})

    def test_all_minimum_and_dominating(self):
        tree = spider_tree([2, 2, 2])
        sets = min_dominating_sets(tree)
        assert sets
        for cert in sets:
            assert cert.gamma == 3
            assert is_dominating_set(tree, cert.vertex_set)


class TestEdgePartition:
    def test_path_three_center(self):
        assert edge_partition(path_tree(3), {1}) == EdgePartition(2, 0, 0)

    def test_path_six(self):
        assert edge_partition(path_tree(6), {1, 4}) == EdgePartition(4, 0, 1)

    def test_whole_vertex_set(self, small_trees):
        for n, tree in small_trees:
            assert edge_partition(tree, range(n)) == EdgePartition(0, n - 1, 0)

    def test_structural_identities(self, small_trees):
        for n, tree in small_trees:
            for cert in min_dominating_sets(tree):
                part = edge_partition(tree, cert.vertex_set)
                inside = sum(tree.degree(v) for v in cert.vertex_set)
                outside = sum(tree.degree(v) for v in range(n) if v not in cert.vertex_set)
                assert part.l1 + part.l2 + part.l3 == n - 1
                assert inside == part.l1 + 2 * part.l2
                assert outside == part.l1 + 2 * part.l3
                assert part.l1 >= n - cert.gamma
                assert abs(part.difference) <= cert.gamma - 1


class TestStructuralFacts:
    def test_max_degree_at_most_n_minus_gamma(self, small_trees):
        for n, tree in small_trees:
            assert tree.max_degree() <= n - domination_number(tree).gamma

    def test_pendent_count_lower_bound(self, small_trees):
        for n, tree in small_trees:
            if n >= 3:
                assert pendent_count(tree) >= 3 * domination_number(tree).gamma - n
