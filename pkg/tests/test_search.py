from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from repwords import (
    AvoidancePredicate,
    Word,
    incremental_violation_check,
    longest_avoiding,
    search,
)

# binary words that avoid cubes and squares with roots of length 3 or more
TREE_PREDICATE = AvoidancePredicate(alphabet_size=2, min_forbidden_square_root=3,
                                    forbid_cubes=True)
SQUAREFREE_BINARY = AvoidancePredicate(alphabet_size=2, min_forbidden_square_root=1)
LONGEST_29 = "00110010100110101100101001100"


def brute_force_longest(predicate, first_letter, max_length):
    """Filter every word of every length; independent of the tree walk."""
    best_length, best = -1, []
    for length in range(max_length + 1):
        for letters in product(range(predicate.alphabet_size), repeat=length):
            if letters and first_letter is not None and letters[0] != first_letter:
                continue
            word = Word(letters)
            if predicate.allows(word):
                if length > best_length:
                    best_length, best = length, [word]
                else:
                    best.append(word)
    return best_length, best


class TestTreeInstance:
    def test_leaf_count_and_height(self):
        report = search(TREE_PREDICATE, fix_first_letter=0, depth_cap=40)
        assert report.finite
        assert report.leaf_count == 289
        assert report.height == 30

    def test_unique_longest_avoiding_word(self):
        report = search(TREE_PREDICATE, fix_first_letter=0, depth_cap=40)
        assert [str(word) for word in report.maximal_avoiding] == [LONGEST_29]
        assert len(LONGEST_29) == 29

    def test_unfixed_root_doubles_the_leaves(self):
        fixed = search(TREE_PREDICATE, fix_first_letter=0, depth_cap=40)
        free = search(TREE_PREDICATE, depth_cap=40)
        assert free.leaf_count == 2 * fixed.leaf_count == 578
        assert free.height == fixed.height
        assert len(free.maximal_avoiding) == 2

    def test_deepest_leaves_extend_the_longest_word(self):
        report = search(TREE_PREDICATE, fix_first_letter=0, depth_cap=40)
        assert [str(word) for word in report.deepest_words] == [
            LONGEST_29 + "0", LONGEST_29 + "1"]

    def test_bfs_matches_dfs(self):
        dfs = search(TREE_PREDICATE, fix_first_letter=0, depth_cap=40, traversal="dfs")
        bfs = search(TREE_PREDICATE, fix_first_letter=0, depth_cap=40, traversal="bfs")
        assert dfs == bfs


class TestShortTrees:
    def test_binary_squarefree_height_four(self):
        report = search(SQUAREFREE_BINARY, fix_first_letter=0, depth_cap=10)
        assert report.finite and report.height == 4
        assert [str(word) for word in report.maximal_avoiding] == ["010"]

    def test_failing_root_is_a_leaf(self):
        predicate = AvoidancePredicate(alphabet_size=2, forbidden_factors=(Word("0"),))
        report = search(predicate, fix_first_letter=0, depth_cap=10)
        assert report.finite and report.leaf_count == 1 and report.height == 1

    def test_depth_cap_flags_large_trees(self):
        predicate = AvoidancePredicate(alphabet_size=2, min_forbidden_square_root=4,
                                       forbid_cubes=True)
        report = search(predicate, fix_first_letter=0, depth_cap=40)
        assert not report.finite

    def test_argument_validation(self):
        with pytest.raises(ValueError):
            search(TREE_PREDICATE, depth_cap=0)
        with pytest.raises(ValueError):
            search(TREE_PREDICATE, fix_first_letter=2)
        with pytest.raises(ValueError):
            search(TREE_PREDICATE, traversal="random")


class TestIncrementalCheck:
    def test_square_at_the_end(self):
        assert incremental_violation_check(Word("00"), SQUAREFREE_BINARY) is False

    def test_passing_prefix_of_the_long_word(self):
        assert incremental_violation_check(Word("001100101"), TREE_PREDICATE) is True
        assert TREE_PREDICATE.allows(Word("001100101"))

    def test_cube_at_the_end(self):
        cubes_only = AvoidancePredicate(alphabet_size=2, forbid_cubes=True)
        assert incremental_violation_check(Word("000"), cubes_only) is False

    def test_agrees_with_full_evaluation_along_paths(self):
        # walk the whole finite tree and compare node by node
        stack = [bytes([0])]
        while stack:
            label = stack.pop()
            word = Word(label)
            ok = incremental_violation_check(word, TREE_PREDICATE)
            assert ok == TREE_PREDICATE.allows(word)
            if ok:
                stack.append(label + bytes([0]))
                stack.append(label + bytes([1]))

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=30).map(Word))
    @settings(max_examples=200)
    def test_failed_words_have_no_passing_extensions(self, word):
        if TREE_PREDICATE.allows(word):
            return
        for letter in (0, 1):
            assert not TREE_PREDICATE.allows(word + Word([letter]))


class TestTraversalIndependence:
    @given(st.integers(1, 3), st.booleans(), st.booleans())
    @settings(max_examples=30, deadline=None)
    def test_small_random_predicates(self, min_root, cubes, overlaps):
        predicate = AvoidancePredicate(alphabet_size=2,
                                       min_forbidden_square_root=min_root,
                                       forbid_cubes=cubes,
                                       forbid_overlaps=overlaps)
        cap = 24
        dfs = search(predicate, fix_first_letter=0, depth_cap=cap, traversal="dfs")
        bfs = search(predicate, fix_first_letter=0, depth_cap=cap, traversal="bfs")
        if dfs.finite and bfs.finite:
            assert dfs == bfs
        else:
            assert dfs.finite == bfs.finite


class TestLongestAvoiding:
    def test_tree_instance(self):
        result = longest_avoiding(TREE_PREDICATE, fix_first_letter=0, depth_cap=40)
        assert result.exact and result.length == 29
        assert [str(word) for word in result.words] == [LONGEST_29]

    def test_overlapfree_with_only_short_squares(self):
        predicate = AvoidancePredicate(alphabet_size=2, min_forbidden_square_root=2,
                                       forbid_overlaps=True)
        result = longest_avoiding(predicate, fix_first_letter=0, depth_cap=30)
        assert result.exact and result.length == 8
        assert [str(word) for word in result.words] == [
            "00110010", "01001100", "01001101"]
        brute_length, brute_words = brute_force_longest(predicate, 0, 10)
        assert brute_length == result.length
        assert list(result.words) == brute_words

    def test_capped_tree_is_a_lower_bound(self):
        predicate = AvoidancePredicate(alphabet_size=2, min_forbidden_square_root=4,
                                       forbid_cubes=True)
        result = longest_avoiding(predicate, fix_first_letter=0, depth_cap=32)
        assert not result.exact
        assert result.length >= 32
