"""Detection of squares, cubes, overlaps and forbidden factors.

Every detector runs the full quadratic comparison scan, one pass per root
length p, and reports every occurrence, nested and overlapping ones
included.  The per-root pass compares w[j] with w[j+p] for all j at once:
byte j of ``(w shifted by p) xor w`` is zero exactly where the letters
agree, so occurrences are zero runs of the required width.  The empty word
and single letters are squarefree, cubefree and overlap-free.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .words import Word, as_word

_ZERO_RUN = re.compile(rb"\x00+")


def _agreement_runs(data: bytes, period: int) -> list[tuple[int, int]]:
    """Maximal spans (start, end) of j with data[j] == data[j + period]."""
    length = len(data) - period
    if length <= 0:
        return []
    diff = int.from_bytes(data[period:], "big") ^ int.from_bytes(data[:length], "big")
    return [match.span() for match in _ZERO_RUN.finditer(diff.to_bytes(length, "big"))]


def _period_positions(data: bytes, period: int, width: int, limit: int) -> list[int]:
    """Positions i < limit where data[j] == data[j+period] for all j in [i, i+width)."""
    out = []
    for start, end in _agreement_runs(data, period):
        top = min(end - width, limit - 1)
        out.extend(range(start, top + 1))
    return out


def _period_somewhere(data: bytes, period: int, width: int, limit: int) -> bool:
    for start, end in _agreement_runs(data, period):
        if min(end - width, limit - 1) >= start:
            return True
    return False


@dataclass(frozen=True)
class SquareOccurrence:
    """A factor w[position .. position+2*root_length) of the form xx."""

    position: int
    root_length: int


def find_squares(word, min_root: int = 1, max_root: int | None = None) -> list[SquareOccurrence]:
    """All squares with min_root <= root <= max_root, sorted by (position, root)."""
    if min_root < 1:
        raise ValueError("square roots are nonempty; min_root must be at least 1")
    data = as_word(word).data
    n = len(data)
    high = n // 2 if max_root is None else min(max_root, n // 2)
    found = []
    for period in range(min_root, high + 1):
        for position in _period_positions(data, period, period, n - 2 * period + 1):
            found.append((position, period))
    found.sort()
    return [SquareOccurrence(position, period) for position, period in found]


def _has_square(data: bytes, min_root: int, max_root: int | None) -> bool:
    n = len(data)
    high = n // 2 if max_root is None else min(max_root, n // 2)
    return any(_period_somewhere(data, p, p, n - 2 * p + 1)
               for p in range(min_root, high + 1))


def is_squarefree(word) -> bool:
    return not _has_square(as_word(word).data, 1, None)


def find_cubes(word) -> list[tuple[int, int]]:
    """All (position, root_length) with w[pos .. pos+3*root) of the form xxx."""
    data = as_word(word).data
    n = len(data)
    found = []
    for period in range(1, n // 3 + 1):
        # xxx with |x| = p holds at i iff letters agree at distance p on [i, i+2p)
        for position in _period_positions(data, period, 2 * period, n - 3 * period + 1):
            found.append((position, period))
    found.sort()
    return found


def is_cubefree(word) -> bool:
    data = as_word(word).data
    n = len(data)
    return not any(_period_somewhere(data, p, 2 * p, n - 3 * p + 1)
                   for p in range(1, n // 3 + 1))


def find_overlaps(word) -> list[tuple[int, int]]:
    """All (position, period) with w[pos .. pos+2*period] of the form axaxa.

    The period is |ax|, so the occurrence spans 2*period + 1 letters; this
    makes an overlap exactly a square followed by a repeat of its first
    letter.
    """
    data = as_word(word).data
    n = len(data)
    found = []
    for period in range(1, (n - 1) // 2 + 1):
        for position in _period_positions(data, period, period + 1, n - 2 * period):
            found.append((position, period))
    found.sort()
    return found


def is_overlapfree(word) -> bool:
    data = as_word(word).data
    n = len(data)
    return not any(_period_somewhere(data, p, p + 1, n - 2 * p)
                   for p in range(1, (n - 1) // 2 + 1))


def max_square_root(word) -> int:
    """Largest root length of any square in the word, 0 if squarefree."""
    data = as_word(word).data
    n = len(data)
    for period in range(n // 2, 0, -1):
        if _period_somewhere(data, period, period, n - 2 * period + 1):
            return period
    return 0


def contains_factor(word, factor) -> bool:
    """True when ``factor`` occurs as a contiguous block of ``word``."""
    factor = as_word(factor)
    if len(factor) == 0:
        raise ValueError("factor containment is defined for nonempty factors")
    return as_word(word).data.find(factor.data) >= 0


def factor_occurrences(word, factor) -> list[int]:
    """All start positions of ``factor`` in ``word``, overlapping ones included."""
    factor = as_word(factor)
    if len(factor) == 0:
        raise ValueError("factor containment is defined for nonempty factors")
    data = as_word(word).data
    out = []
    start = data.find(factor.data)
    while start >= 0:
        out.append(start)
        start = data.find(factor.data, start + 1)
    return out


def avoids_factors(word, factors) -> bool:
    """True when none of the given factors occurs in the word."""
    word = as_word(word)
    return not any(contains_factor(word, factor) for factor in factors)


@dataclass
class RepetitionReport:
    """Everything the detectors found in one word."""

    squares: list[SquareOccurrence] = field(default_factory=list)
    cubes: list[tuple[int, int]] = field(default_factory=list)
    overlaps: list[tuple[int, int]] = field(default_factory=list)
    max_square_root: int = 0

    @classmethod
    def scan(cls, word, min_square_root: int = 1) -> "RepetitionReport":
        squares = find_squares(word, min_square_root)
        return cls(
            squares=squares,
            cubes=find_cubes(word),
            overlaps=find_overlaps(word),
            max_square_root=max((occ.root_length for occ in squares), default=0),
        )

    def to_dict(self) -> dict:
        return {
            "squares": [[occ.position, occ.root_length] for occ in self.squares],
            "cubes": [list(pair) for pair in self.cubes],
            "overlaps": [list(pair) for pair in self.overlaps],
            "max_square_root": self.max_square_root,
        }
