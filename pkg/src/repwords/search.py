"""Exhaustive avoidance trees.

Grow words letter by letter; a node whose label contains a forbidden
repetition or factor is a leaf, every other node gets one child per
letter.  The tree is finite exactly when the forbidden set is unavoidable,
and its height is the shortest length at which every word fails.  All the
supported predicates are closed under factors, so a leaf never has passing
descendants and each new node only needs its suffix inspected.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .words import Word, as_word
from .repetition import _has_square, avoids_factors, is_cubefree, is_overlapfree

_TRAVERSALS = ("dfs", "bfs")


@dataclass(frozen=True)
class AvoidancePredicate:
    """What a word must avoid to stay in the tree.

    ``min_forbidden_square_root`` forbids squares whose root has at least
    that length (None tolerates all squares).  Factors, cubes and overlaps
    are forbidden by their own switches.
    """

    alphabet_size: int
    min_forbidden_square_root: int | None = None
    forbid_cubes: bool = False
    forbid_overlaps: bool = False
    forbidden_factors: tuple[Word, ...] = ()

    def __post_init__(self):
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be positive")
        if self.min_forbidden_square_root is not None and self.min_forbidden_square_root < 1:
            raise ValueError("min_forbidden_square_root must be at least 1")
        object.__setattr__(self, "forbidden_factors",
                           tuple(as_word(f) for f in self.forbidden_factors))

    def allows(self, word) -> bool:
        """Full evaluation of the predicate on a whole word."""
        word = as_word(word)
        if self.min_forbidden_square_root is not None and \
                _has_square(word.data, self.min_forbidden_square_root, None):
            return False
        if self.forbid_cubes and not is_cubefree(word):
            return False
        if self.forbid_overlaps and not is_overlapfree(word):
            return False
        return avoids_factors(word, self.forbidden_factors)


def incremental_violation_check(word, predicate: AvoidancePredicate) -> bool:
    """Predicate value for a word all of whose proper prefixes pass.

    Only violations ending at the last letter are inspected; when some
    proper prefix already fails the result is unspecified.
    """
    data = as_word(word).data
    n = len(data)
    root = predicate.min_forbidden_square_root
    if root is not None:
        for p in range(root, n // 2 + 1):
            if data[n - 2 * p:n - p] == data[n - p:]:
                return False
    if predicate.forbid_cubes:
        for p in range(1, n // 3 + 1):
            if data[n - 3 * p:n - 2 * p] == data[n - 2 * p:n - p] == data[n - p:]:
                return False
    if predicate.forbid_overlaps:
        for p in range(1, (n - 1) // 2 + 1):
            if data[n - 2 * p - 1:n - p] == data[n - p - 1:]:
                return False
    for factor in predicate.forbidden_factors:
        if len(factor) <= n and data.endswith(factor.data):
            return False
    return True


@dataclass
class SearchReport:
    """What one tree traversal saw.

    When ``finite`` is False the depth cap was reached with a live node and
    the counts cover only the explored part of the tree.
    """

    finite: bool
    leaf_count: int
    height: int
    nodes_visited: int
    deepest_words: list[Word] = field(default_factory=list)
    maximal_avoiding: list[Word] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "finite": self.finite,
            "leaf_count": self.leaf_count,
            "height": self.height,
            "nodes_visited": self.nodes_visited,
            "deepest_words": [str(word) for word in self.deepest_words],
            "maximal_avoiding": [str(word) for word in self.maximal_avoiding],
        }


def search(predicate: AvoidancePredicate, fix_first_letter: int | None = None,
           depth_cap: int = 64, traversal: str = "dfs") -> SearchReport:
    """Traverse the avoidance tree and measure it.

    The root is the empty word, or a single fixed letter when the predicate
    is symmetric under letter renaming and ``fix_first_letter`` exploits
    that.  Leaves are the minimal violating words along each path; the
    report collects their count, the height (longest leaf), the deepest
    leaves, and the longest words that themselves pass.  Depth-first and
    breadth-first traversals produce identical reports on finite trees.
    """
    if depth_cap < 1:
        raise ValueError("depth_cap must be at least 1")
    if traversal not in _TRAVERSALS:
        raise ValueError(f"traversal must be one of {_TRAVERSALS}")
    k = predicate.alphabet_size
    if fix_first_letter is not None and not 0 <= fix_first_letter < k:
        raise ValueError(f"first letter {fix_first_letter} outside alphabet of size {k}")
    root = b"" if fix_first_letter is None else bytes([fix_first_letter])
    letters = [bytes([letter]) for letter in range(k)]

    finite = True
    leaf_count = 0
    height = 0
    nodes_visited = 0
    deepest: list[bytes] = []
    best_passing_length = -1
    best_passing: list[bytes] = []

    pending = deque([root])
    pop = pending.pop if traversal == "dfs" else pending.popleft
    while pending:
        label = pop()
        nodes_visited += 1
        if len(label) == len(root):
            ok = predicate.allows(Word(label, k))
        else:
            ok = incremental_violation_check(Word(label, k), predicate)
        if not ok:
            leaf_count += 1
            if len(label) > height:
                height = len(label)
                deepest = [label]
            elif len(label) == height:
                deepest.append(label)
            continue
        if len(label) > best_passing_length:
            best_passing_length = len(label)
            best_passing = [label]
        elif len(label) == best_passing_length:
            best_passing.append(label)
        if len(label) >= depth_cap:
            finite = False
            break
        children = [label + letter for letter in letters]
        pending.extend(reversed(children) if traversal == "dfs" else children)

    return SearchReport(
        finite=finite,
        leaf_count=leaf_count,
        height=height,
        nodes_visited=nodes_visited,
        deepest_words=[Word(label, k) for label in sorted(deepest)],
        maximal_avoiding=[Word(label, k) for label in sorted(best_passing)],
    )


@dataclass(frozen=True)
class LongestAvoiding:
    """Longest passing length and all passing words of that length.

    ``exact`` is False when the tree outran the depth cap, in which case
    the length is only a lower bound.
    """

    length: int
    words: tuple[Word, ...]
    exact: bool


def longest_avoiding(predicate: AvoidancePredicate, fix_first_letter: int | None = None,
                     depth_cap: int = 64) -> LongestAvoiding:
    """Convenience projection of ``search`` onto its longest passing words."""
    report = search(predicate, fix_first_letter=fix_first_letter, depth_cap=depth_cap)
    words = tuple(report.maximal_avoiding)
    length = len(words[0]) if words else -1
    return LongestAvoiding(length=length, words=words, exact=report.finite)
