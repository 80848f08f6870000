import pytest

from planeperm import DomainError
from planeperm.alternating import (
    AltLabel,
    SmallForest,
    alt_tree_to_forest,
    enumerate_alt_trees,
    forest_to_alt_tree,
    validate_alternating_tree,
    validate_forest,
)
from planeperm.bijections import LabeledTree


def E(v, starred=False):
    return AltLabel("E", v, starred)


def O(v, starred=False):
    return AltLabel("O", v, starred)


def T(label, *kids):
    return LabeledTree(label, tuple(kids))


class TestValidation:
    def test_root_must_be_maximal_even_label(self):
        bad = T(E(1), T(O(1), T(E(2))))
        with pytest.raises(DomainError):
            validate_alternating_tree(bad)

    def test_parity_must_alternate(self):
        bad = T(E(2), T(E(1)))
        with pytest.raises(DomainError):
            validate_alternating_tree(bad)

    def test_no_stars_allowed_in_input(self):
        bad = T(E(1), T(O(1, starred=True)))
        with pytest.raises(DomainError):
            validate_alternating_tree(bad)

    def test_good_tree(self):
        good = T(E(2), T(O(1), T(E(1))), T(O(2)))
        assert validate_alternating_tree(good) == (2, 1)


class TestForwardMap:
    def test_small_tree_is_a_fixed_point(self):
        tree = T(E(1), T(O(1)), T(O(2)))
        forest = alt_tree_to_forest(tree)
        assert forest == SmallForest([tree])

    def test_three_edge_trace(self):
        tree = T(E(2), T(O(1), T(E(1))), T(O(2)))
        forest = alt_tree_to_forest(tree)
        expected = SmallForest(
            [
                T(O(1), T(E(1))),
                T(E(2), T(O(3, starred=True)), T(O(2))),
            ]
        )
        assert forest == expected

    def test_single_vertex(self):
        tree = T(E(1))
        assert forest_to_alt_tree(alt_tree_to_forest(tree)) == tree


class TestBackwardMap:
    def test_trace_inverse(self):
        forest = SmallForest(
            [
                T(O(1), T(E(1))),
                T(E(2), T(O(3, starred=True)), T(O(2))),
            ]
        )
        assert forest_to_alt_tree(forest) == T(E(2), T(O(1), T(E(1))), T(O(2)))

    def test_inconsistent_star_pool_rejected(self):
        # a starred E label exists although there is only one E-tree
        forest = SmallForest(
            [
                T(O(1), T(E(1))),
                T(E(2), T(O(2)), T(O(4, starred=True))),
                T(O(3), T(E(3, starred=True))),
            ]
        )
        with pytest.raises(DomainError):
            forest_to_alt_tree(forest)

    def test_starred_root_rejected(self):
        forest = SmallForest([T(E(2, starred=True), T(O(1)))])
        with pytest.raises(DomainError) as err:
            forest_to_alt_tree(forest)
        assert "condition (a)" in str(err.value)

    def test_moved_top_star_violates_condition_b(self):
        # valid pools, but the top starred O leaf sits under the wrong E root
        forest = SmallForest(
            [
                T(E(1), T(O(3, starred=True))),
                T(E(2), T(O(2))),
                T(O(1), T(E(3, starred=True))),
            ]
        )
        with pytest.raises(DomainError) as err:
            forest_to_alt_tree(forest)
        assert "condition (b)" in str(err.value)


class TestExhaustivePool:
    @pytest.mark.parametrize("edges", [1, 2, 3, 4])
    def test_round_trip_and_sizes(self, edges):
        count = 0
        for tree in enumerate_alt_trees(edges, 4, 4):
            if tree.size() != edges:
                continue
            forest = alt_tree_to_forest(tree)
            k, b, l_e, l_o = validate_forest(forest)
            internal = _internal_profile(tree)
            assert len(forest) == l_e + l_o == len(internal["even"]) + len(internal["odd"]) + 1
            assert sorted(t.size() for t in forest if t.label.parity == "O") == internal["odd"]
            non_root_e = sorted(
                t.size() for t in forest if t.label.parity == "E" and t.label.value != k
            )
            assert non_root_e == internal["even"]
            assert forest_to_alt_tree(forest) == tree
            count += 1
        assert count > 0


def _internal_profile(tree):
    even, odd = [], []

    def rec(node, depth):
        if node.children and depth > 0:
            (even if depth % 2 == 0 else odd).append(len(node.children))
        for child in node.children:
            rec(child, depth + 1)

    rec(tree, 0)
    return {"even": sorted(even), "odd": sorted(odd)}
