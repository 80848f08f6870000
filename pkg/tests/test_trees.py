import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planeperm import (
    DomainError,
    ParseError,
    PlaneTree,
    catalan,
    enumerate_trees,
    heights,
    internal_outdegrees,
    leaf_heights,
    left_paths,
    level_profile,
    level_switch,
    mirror,
    parse_tree,
    right_paths,
    rsw,
    rsw_multiset,
    rsw_tree,
    to_text,
    tree_height,
)
from planeperm.errors import ResourceLimitError
from planeperm.trees import level_degree_distributions, level_populations


def path(n):
    return parse_tree("(" * n + ")" * n)


def star(n):
    return parse_tree("()" * n)


class TestCodec:
    def test_examples(self):
        assert parse_tree("(())").size == 2
        assert to_text(parse_tree("()()")) == "()()"
        assert parse_tree("") == PlaneTree()

    @pytest.mark.parametrize("n", range(9))
    def test_round_trip_all_words(self, n):
        for tree in enumerate_trees(n):
            assert parse_tree(to_text(tree)) == tree

    def test_unbalanced_reports_offset(self):
        with pytest.raises(ParseError) as err:
            parse_tree("(()")
        assert err.value.offset == 3
        with pytest.raises(ParseError) as err:
            parse_tree("())(")
        assert err.value.offset == 2

    def test_rejects_other_characters(self):
        with pytest.raises(ParseError) as err:
            parse_tree("(x)")
        assert err.value.offset == 1


class TestEnumeration:
    @pytest.mark.parametrize("n", range(9))
    def test_counts_are_catalan(self, n):
        seen = list(enumerate_trees(n))
        assert len(seen) == catalan(n)
        assert len(set(seen)) == len(seen)

    def test_n0_and_n2(self):
        assert list(enumerate_trees(0)) == [PlaneTree()]
        assert {to_text(t) for t in enumerate_trees(2)} == {"(())", "()()"}

    def test_bound(self):
        with pytest.raises(ResourceLimitError):
            next(enumerate_trees(3, bound=2))


class TestHeights:
    def test_examples(self):
        assert heights(parse_tree("(())")) == (0, 1, 2)
        assert heights(parse_tree("()()")) == (0, 1, 1)
        assert heights(parse_tree("(())()")) == (0, 1, 1, 2)

    def test_tree_height(self):
        assert tree_height(path(5)) == 5
        assert tree_height(star(5)) == 1
        assert tree_height(parse_tree("(())()")) == 2
        assert tree_height(PlaneTree()) == 0


class TestRsw:
    def test_path_addresses(self):
        t = path(2)
        assert rsw(t, ()) == 1
        assert rsw(t, (0,)) == 1
        assert rsw(t, (0, 0)) == 0

    def test_star_addresses(self):
        t = star(2)
        assert rsw(t, (0,)) == 1
        assert rsw(t, (1,)) == 0
        assert rsw(t, ()) == 2

    def test_three_star_values(self):
        assert rsw_multiset(star(3), "all") == (0, 1, 2, 3)

    def test_invalid_address(self):
        with pytest.raises(DomainError):
            rsw(star(2), (5,))

    def test_resolve_vertex_addressing(self):
        from planeperm.trees import resolve_vertex

        t = parse_tree("(())()")
        assert resolve_vertex(t, ()) is t
        assert resolve_vertex(t, (0, 0)).children == ()
        with pytest.raises(DomainError):
            resolve_vertex(t, (0, 0, 0))

    def test_multiset_examples(self):
        assert rsw_multiset(parse_tree("(())"), "all") == (0, 1, 1)
        assert rsw_multiset(parse_tree("()()"), "all") == (0, 1, 2)
        assert rsw_multiset(parse_tree("(()())"), "internal") == (1, 2)

    @pytest.mark.parametrize("n", range(7))
    def test_multiset_agrees_with_addressed_walk(self, n):
        for tree in enumerate_trees(n):
            by_address = []

            def visit(node, addr):
                by_address.append(rsw(tree, addr))
                for i, child in enumerate(node.children):
                    visit(child, addr + (i,))

            visit(tree, ())
            assert tuple(sorted(by_address)) == rsw_multiset(tree, "all")

    def test_rsw_tree_examples(self):
        assert rsw_tree(path(6)) == 1
        assert rsw_tree(star(6)) == 6
        assert rsw_tree(parse_tree("(())()")) == 2

    def test_rsw_tree_needs_an_edge(self):
        with pytest.raises(DomainError):
            rsw_tree(PlaneTree())


class TestPaths:
    def test_examples(self):
        assert left_paths(path(4)) == (4,)
        assert left_paths(star(4)) == (1, 1, 1, 1)
        assert left_paths(parse_tree("(())()")) == (2, 1)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_sums_and_cardinalities(self, n):
        for tree in enumerate_trees(n):
            lp = left_paths(tree)
            rp = right_paths(tree)
            od = internal_outdegrees(tree)
            assert sum(lp) == sum(rp) == sum(od) == n
            assert len(lp) == len(rp) == len(leaf_heights(tree))

    def test_outdegree_examples(self):
        assert internal_outdegrees(star(4)) == (4,)
        assert internal_outdegrees(path(4)) == (1, 1, 1, 1)
        assert internal_outdegrees(parse_tree("(())()")) == (2, 1)
        assert internal_outdegrees(PlaneTree()) == ()


class TestLevelProfile:
    def test_star(self):
        odd, even = level_profile(star(4))
        assert even == (4,)
        assert odd == (0, 0, 0, 0)

    def test_two_path(self):
        odd, even = level_profile(path(2))
        assert even == (1, 1)
        assert odd == (1,)

    def test_single_vertex_is_degenerate(self):
        odd, even = level_profile(PlaneTree())
        assert odd == ()
        assert even == ()

    @pytest.mark.parametrize("n", range(8))
    def test_even_degrees_sum_to_n(self, n):
        for tree in enumerate_trees(n):
            _, even = level_profile(tree)
            assert sum(even) == n


class TestRefinedEquidistributionAtN3:
    """The five 3-edge trees, classified two ways, carry the same data."""

    def test_leaf_and_internal_profiles_match(self):
        leaf_data = sorted(
            (len(leaf_heights(t)), leaf_heights(t)) for t in enumerate_trees(3)
        )
        internal_data = sorted(
            (len(rsw_multiset(t, "internal")), rsw_multiset(t, "internal"))
            for t in enumerate_trees(3)
        )
        assert leaf_data == [
            (1, (3,)),
            (2, (1, 2)),
            (2, (1, 2)),
            (2, (2, 2)),
            (3, (1, 1, 1)),
        ]
        assert leaf_data == internal_data


class TestTransforms:
    def test_mirror_example(self):
        assert to_text(mirror(parse_tree("(())()"))) == "()(())"

    @pytest.mark.parametrize("n", range(8))
    def test_mirror_involution(self, n):
        for tree in enumerate_trees(n):
            assert mirror(mirror(tree)) == tree

    def test_level_switch_requires_an_edge(self):
        with pytest.raises(DomainError):
            level_switch(PlaneTree())

    @pytest.mark.parametrize("n", range(1, 8))
    def test_level_switch_swaps_populations_and_degrees(self, n):
        for tree in enumerate_trees(n):
            switched = level_switch(tree)
            assert switched.size == tree.size
            even, odd = level_populations(tree)
            even2, odd2 = level_populations(switched)
            assert (even, odd) == (odd2, even2)
            deg_even, deg_odd = level_degree_distributions(tree)
            deg_even2, deg_odd2 = level_degree_distributions(switched)
            assert (deg_even, deg_odd) == (deg_odd2, deg_even2)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_level_switch_is_an_involution(self, n):
        for tree in enumerate_trees(n):
            assert level_switch(level_switch(tree)) == tree


@given(st.integers(min_value=0, max_value=30))
@settings(max_examples=60)
def test_random_words_round_trip(seed):
    # deterministic pseudo-random balanced word from the seed
    import random

    rng = random.Random(seed)
    word = []
    open_count = 0
    for _ in range(rng.randrange(0, 20)):
        if open_count == 0 or (rng.random() < 0.5 and open_count < 9):
            word.append("(")
            open_count += 1
        else:
            word.append(")")
            open_count -= 1
    word.extend(")" * open_count)
    text = "".join(word)
    assert to_text(parse_tree(text)) == text
