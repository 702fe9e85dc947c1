"""Mechanical checks behind the squarefree and cubefree constructions.

Each check answers one finite question about the two production morphisms:
do the forbidden factors stay out of images and seams, are all short-source
images repetition-clean, can an image sit at an unexpected offset inside a
pair of images, can two images share a split, does the bracketed template
1.A.3.A.2 always force a repetition, and do the advertised repetition
witnesses really occur.  Every check returns a VerificationReport whose
witnesses re-validate by direct letter comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .words import (
    CUBEFREE_MORPHISM,
    FORBIDDEN_FACTORS,
    Morphism,
    SQUAREFREE_MORPHISM,
    THUE_MORSE,
    Word,
    as_word,
)
from .repetition import (
    avoids_factors,
    contains_factor,
    factor_occurrences,
    find_cubes,
    find_squares,
    is_overlapfree,
    is_squarefree,
    max_square_root,
)

#: The two-letter members of FORBIDDEN_FACTORS; forbidding just these is the
#: hypothesis under which SQUAREFREE_MORPHISM preserves squarefreeness.
FORBIDDEN_BIGRAMS = tuple(factor for factor in FORBIDDEN_FACTORS if len(factor) == 2)

_SOURCE_ALPHABET = 4


@dataclass
class VerificationReport:
    """Outcome of one named check, with re-validatable witnesses."""

    check_name: str
    passed: bool
    witnesses: list = field(default_factory=list)
    expected_count: int | None = None
    actual_count: int | None = None

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "passed": self.passed,
            "expected_count": self.expected_count,
            "actual_count": self.actual_count,
            "witnesses": self.witnesses,
        }


@dataclass(frozen=True)
class InteriorOccurrence:
    """image(left) + image(right) == head + image(inner) + tail.

    Both head and tail are nonempty, so the inner image sits strictly
    inside the two-image window.  ``tail_is_image_prefix`` records whether
    the tail could start yet another image, which is what the split
    arguments must rule out.
    """

    left: int
    right: int
    inner: int
    head: Word
    tail: Word
    tail_is_image_prefix: bool

    def as_tuple(self) -> tuple:
        return (self.left, self.right, self.inner, str(self.head), str(self.tail))


@dataclass(frozen=True)
class Synchronization:
    """Two images whose outer parts combine into a third image.

    image(head_letter) = head + head_rest, image(tail_letter) = tail_rest +
    tail, and image(composite_letter) = head + tail, with head and tail
    nonempty proper parts.  Only the exceptional cases are recorded: those
    where the composite letter differs from both donors.
    """

    head_letter: int
    tail_letter: int
    composite_letter: int
    head: Word
    head_rest: Word
    tail_rest: Word
    tail: Word

    def as_tuple(self) -> tuple:
        return (self.head_letter, self.tail_letter, self.composite_letter,
                str(self.head), str(self.head_rest), str(self.tail_rest), str(self.tail))


@dataclass(frozen=True)
class Decomposition:
    """word == head + double(core) + tail, where double is the Thue-Morse map.

    head and tail come from {empty, 0, 1, 00, 11} and core is overlap-free.
    """

    head: Word
    core: Word
    tail: Word


def check_factor_closure(morphism: Morphism | None = None, factors=None,
                         name: str = "h-factor-closure") -> VerificationReport:
    """No forbidden factor occurs inside any image or across any image seam.

    A factor shorter than every image that occurs in some image of a word
    either lies inside a single letter image or straddles exactly one seam
    between adjacent images, so scanning all images and all ordered image
    pairs is exhaustive.
    """
    morphism = morphism if morphism is not None else SQUAREFREE_MORPHISM
    factors = tuple(as_word(f) for f in (factors if factors is not None else FORBIDDEN_FACTORS))
    witnesses = []
    k = morphism.alphabet_size
    for letter in range(k):
        image = morphism.image(letter)
        for factor in factors:
            for position in factor_occurrences(image, factor):
                witnesses.append({
                    "kind": "image",
                    "letter": letter,
                    "factor": str(factor),
                    "position": position,
                })
    for left, right in product(range(k), repeat=2):
        window = morphism.image(left) + morphism.image(right)
        seam = len(morphism.image(left))
        for factor in factors:
            for position in factor_occurrences(window, factor):
                if position < seam < position + len(factor):
                    witnesses.append({
                        "kind": "seam",
                        "pair": [left, right],
                        "factor": str(factor),
                        "position": position,
                    })
    return VerificationReport(check_name=name, passed=not witnesses, witnesses=witnesses)


def enumerate_valid_words(length: int, factors) -> list[Word]:
    """Squarefree words over {0,1,2,3} of the given length avoiding ``factors``.

    Returned in lexicographic order.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    factors = tuple(as_word(f) for f in factors)
    out = []
    for tup in product(range(_SOURCE_ALPHABET), repeat=length):
        word = Word(bytes(tup))
        if is_squarefree(word) and avoids_factors(word, factors):
            out.append(word)
    return out


def check_h_images_squarefree(morphism: Morphism | None = None) -> VerificationReport:
    """Images of all 49 valid five-letter sources are squarefree.

    Sources are filtered by squarefreeness and the four forbidden bigrams
    only; that is the exact hypothesis of the preservation claim.
    """
    morphism = morphism if morphism is not None else SQUAREFREE_MORPHISM
    words = enumerate_valid_words(5, FORBIDDEN_BIGRAMS)
    witnesses = []
    for word in words:
        image = morphism.apply(word)
        squares = find_squares(image, 1)
        if squares:
            occ = squares[0]
            witnesses.append({
                "word": str(word),
                "square_position": occ.position,
                "square_root": str(image[occ.position:occ.position + occ.root_length]),
            })
    return VerificationReport(
        check_name="h-images-squarefree",
        passed=len(words) == 49 and not witnesses,
        witnesses=witnesses,
        expected_count=49,
        actual_count=len(words),
    )


def check_g_images_square_bound(morphism: Morphism | None = None) -> VerificationReport:
    """Images of all 41 valid five-letter sources have square roots below 4."""
    morphism = morphism if morphism is not None else CUBEFREE_MORPHISM
    words = enumerate_valid_words(5, FORBIDDEN_FACTORS)
    witnesses = []
    for word in words:
        root = max_square_root(morphism.apply(word))
        if root > 3:
            witnesses.append({"word": str(word), "max_square_root": root})
    return VerificationReport(
        check_name="g-images-square-bound",
        passed=len(words) == 41 and not witnesses,
        witnesses=witnesses,
        expected_count=41,
        actual_count=len(words),
    )


def find_interior_occurrences(morphism: Morphism,
                              pairs=None) -> list[InteriorOccurrence]:
    """Images sitting strictly inside a window of two adjacent images.

    ``pairs`` limits the (left, right) windows scanned; by default every
    ordered pair is examined.  The morphism must be uniform, since the
    alignment windows slide over a fixed image width.
    """
    width = morphism.uniform_width
    if width is None:
        raise ValueError("interior-occurrence scan needs a uniform morphism")
    k = morphism.alphabet_size
    if pairs is None:
        pairs = product(range(k), repeat=2)
    out = []
    for left, right in pairs:
        window = morphism.image(left).data + morphism.image(right).data
        for inner in range(k):
            inner_data = morphism.image(inner).data
            for shift in range(1, width):
                if window[shift:shift + width] == inner_data:
                    tail = window[shift + width:]
                    out.append(InteriorOccurrence(
                        left=left,
                        right=right,
                        inner=inner,
                        head=Word(window[:shift]),
                        tail=Word(tail),
                        tail_is_image_prefix=any(
                            morphism.image(d).data.startswith(tail) for d in range(k)),
                    ))
    return out


def find_synchronizations(morphism: Morphism) -> list[Synchronization]:
    """Exceptional image splits: composite letter distinct from both donors."""
    width = morphism.uniform_width
    if width is None:
        raise ValueError("split scan needs a uniform morphism")
    k = morphism.alphabet_size
    out = []
    for head_letter, tail_letter, composite in product(range(k), repeat=3):
        head_image = morphism.image(head_letter).data
        tail_image = morphism.image(tail_letter).data
        for cut in range(1, width):
            if morphism.image(composite).data == head_image[:cut] + tail_image[cut:]:
                if composite == head_letter or composite == tail_letter:
                    continue
                out.append(Synchronization(
                    head_letter=head_letter,
                    tail_letter=tail_letter,
                    composite_letter=composite,
                    head=Word(head_image[:cut]),
                    head_rest=Word(head_image[cut:]),
                    tail_rest=Word(tail_image[:cut]),
                    tail=Word(tail_image[cut:]),
                ))
    return out


def legal_letter_pairs(factors=FORBIDDEN_FACTORS) -> list[tuple[int, int]]:
    """Ordered letter pairs that can appear in a valid source word."""
    return [(word[0], word[1]) for word in enumerate_valid_words(2, factors)]


_EXPECTED_INTERIOR_H = (
    (3, 1, 2, "020301", "0102"),
)
_EXPECTED_INTERIOR_G = (
    (0, 1, 3, "010", "110"),
    (1, 0, 2, "01", "0011"),
    (2, 3, 1, "0110", "10"),
)
_EXPECTED_SPLITS_G = (
    (2, 1, 3, "0110", "01", "0101", "10"),
)


def _interior_report(name: str, morphism: Morphism, expected: tuple) -> VerificationReport:
    found = find_interior_occurrences(morphism, pairs=legal_letter_pairs())
    witnesses = [{
        "pair": [occ.left, occ.right],
        "inner": occ.inner,
        "head": str(occ.head),
        "tail": str(occ.tail),
        "tail_is_image_prefix": occ.tail_is_image_prefix,
    } for occ in found]
    exact = tuple(occ.as_tuple() for occ in found) == expected
    no_continuation = all(not occ.tail_is_image_prefix for occ in found)
    return VerificationReport(
        check_name=name,
        passed=exact and no_continuation,
        witnesses=witnesses,
        expected_count=len(expected),
        actual_count=len(found),
    )


def check_h_interior_images(morphism: Morphism | None = None) -> VerificationReport:
    """Exactly one interior occurrence over legal pairs, with a dead-end tail."""
    morphism = morphism if morphism is not None else SQUAREFREE_MORPHISM
    return _interior_report("h-interior-images", morphism, _EXPECTED_INTERIOR_H)


def check_g_interior_images(morphism: Morphism | None = None) -> VerificationReport:
    """Exactly three interior occurrences over legal pairs, all with dead-end tails."""
    morphism = morphism if morphism is not None else CUBEFREE_MORPHISM
    return _interior_report("g-interior-images", morphism, _EXPECTED_INTERIOR_G)


def _split_report(name: str, morphism: Morphism, expected: tuple) -> VerificationReport:
    found = find_synchronizations(morphism)
    witnesses = [{
        "head_letter": sync.head_letter,
        "tail_letter": sync.tail_letter,
        "composite_letter": sync.composite_letter,
        "head": str(sync.head),
        "head_rest": str(sync.head_rest),
        "tail_rest": str(sync.tail_rest),
        "tail": str(sync.tail),
    } for sync in found]
    exact = tuple(sync.as_tuple() for sync in found) == expected
    return VerificationReport(
        check_name=name,
        passed=exact,
        witnesses=witnesses,
        expected_count=len(expected),
        actual_count=len(found),
    )


def check_h_image_splits(morphism: Morphism | None = None) -> VerificationReport:
    """No exceptional split: shared parts force a shared letter."""
    morphism = morphism if morphism is not None else SQUAREFREE_MORPHISM
    return _split_report("h-image-splits", morphism, ())


def check_g_image_splits(morphism: Morphism | None = None) -> VerificationReport:
    """Exactly one exceptional split, the 0110/01/0101/10 one."""
    morphism = morphism if morphism is not None else CUBEFREE_MORPHISM
    return _split_report("g-image-splits", morphism, _EXPECTED_SPLITS_G)


def _violates(word: Word, factors) -> bool:
    return not is_squarefree(word) or not avoids_factors(word, factors)


# Window lengths for the template check.  A three-letter prefix and a
# three-letter suffix of the bracketed block are the shortest windows for
# which every pair forces a violation; with a two-letter suffix the pairs
# 020/20 and 023/20 slip through.
_TEMPLATE_PREFIX = 3
_TEMPLATE_SUFFIX = 3


def check_template_1a3a2(factors=None) -> VerificationReport:
    """Words 1.A.3.A.2 always contain a square or a forbidden factor.

    Short blocks A are checked outright.  For longer blocks only the first
    three and last three letters of A matter: for every choice of those six
    letters, one of the fully determined segments 1+prefix, suffix+3+prefix,
    suffix+2 already contains a violation, whatever the middle of A is.
    """
    factors = tuple(as_word(f) for f in (factors if factors is not None else FORBIDDEN_FACTORS))
    witnesses = []
    short_bound = _TEMPLATE_PREFIX + _TEMPLATE_SUFFIX - 1
    checked = 0
    for length in range(short_bound + 1):
        for block in product(range(_SOURCE_ALPHABET), repeat=length):
            word = Word((1,) + block + (3,) + block + (2,))
            checked += 1
            if not _violates(word, factors):
                witnesses.append({"part": "short-block", "block": str(Word(block)),
                                  "word": str(word)})
    for prefix in product(range(_SOURCE_ALPHABET), repeat=_TEMPLATE_PREFIX):
        for suffix in product(range(_SOURCE_ALPHABET), repeat=_TEMPLATE_SUFFIX):
            segments = (
                Word((1,) + prefix),
                Word(suffix + (3,) + prefix),
                Word(suffix + (2,)),
            )
            checked += 1
            if not any(_violates(segment, factors) for segment in segments):
                witnesses.append({
                    "part": "long-block",
                    "prefix": str(Word(prefix)),
                    "suffix": str(Word(suffix)),
                    "segments": [str(segment) for segment in segments],
                })
    expected = sum(_SOURCE_ALPHABET ** n for n in range(short_bound + 1)) \
        + _SOURCE_ALPHABET ** (_TEMPLATE_PREFIX + _TEMPLATE_SUFFIX)
    return VerificationReport(
        check_name="template-1a3a2",
        passed=checked == expected and not witnesses,
        witnesses=witnesses,
        expected_count=expected,
        actual_count=checked,
    )


#: Repetitions that each forbidden factor provokes in its image: the factor,
#: the repetition roots, and the exponent (2 for squares, 3 for the cube).
_IMAGE_WITNESS_TABLE = (
    ("12", ("0110", "1100", "1001"), 2),
    ("13", ("0110",), 2),
    ("21", ("01",), 3),
    ("32", ("1001",), 2),
    ("231", ("10010110",), 2),
    ("10302", ("100100110110",), 2),
)


def check_g_image_witnesses(morphism: Morphism | None = None) -> VerificationReport:
    """Each forbidden factor's image contains its advertised repetition."""
    morphism = morphism if morphism is not None else CUBEFREE_MORPHISM
    witnesses = []
    passed = True
    for source, roots, exponent in _IMAGE_WITNESS_TABLE:
        image = morphism.apply(Word(source))
        for root in roots:
            pattern = Word(root) * exponent
            positions = factor_occurrences(image, pattern) if len(pattern) <= len(image) else []
            if not positions:
                passed = False
            witnesses.append({
                "source": source,
                "root": root,
                "exponent": exponent,
                "positions": positions,
                "found": bool(positions),
            })
    return VerificationReport(
        check_name="g-image-witnesses",
        passed=passed,
        witnesses=witnesses,
        expected_count=sum(len(roots) for _, roots, _ in _IMAGE_WITNESS_TABLE),
        actual_count=sum(1 for w in witnesses if w["found"]),
    )


_SHORT_CUBE_ROOTS = ("0", "1", "01", "10", "001", "010", "011", "100", "101", "110")


def check_g_cube_shortlist(morphism: Morphism | None = None) -> VerificationReport:
    """No image of a valid three-letter source contains a short cube.

    A cube in the image has root length at most 3, so the ten candidate
    cubes span at most nine letters and any occurrence lies inside the
    image of three consecutive source letters.
    """
    morphism = morphism if morphism is not None else CUBEFREE_MORPHISM
    words = enumerate_valid_words(3, FORBIDDEN_FACTORS)
    patterns = tuple(Word(root) * 3 for root in _SHORT_CUBE_ROOTS)
    witnesses = []
    for word in words:
        image = morphism.apply(word)
        for pattern in patterns:
            if contains_factor(image, pattern):
                witnesses.append({"word": str(word), "cube": str(pattern)})
    return VerificationReport(
        check_name="g-cube-shortlist",
        passed=len(words) == 16 and not witnesses,
        witnesses=witnesses,
        expected_count=16,
        actual_count=len(words),
    )


def check_enumeration_counts() -> VerificationReport:
    """The three source enumerations have sizes 49, 41 and 16."""
    counts = {
        "length-5-bigrams-only": len(enumerate_valid_words(5, FORBIDDEN_BIGRAMS)),
        "length-5-all-factors": len(enumerate_valid_words(5, FORBIDDEN_FACTORS)),
        "length-3-all-factors": len(enumerate_valid_words(3, FORBIDDEN_FACTORS)),
    }
    expected = {
        "length-5-bigrams-only": 49,
        "length-5-all-factors": 41,
        "length-3-all-factors": 16,
    }
    return VerificationReport(
        check_name="enumeration-counts",
        passed=counts == expected,
        witnesses=[{"enumeration": key, "expected": expected[key], "actual": counts[key]}
                   for key in expected],
        expected_count=sum(expected.values()),
        actual_count=sum(counts.values()),
    )


_EDGE_WORDS = tuple(Word(text) for text in ("", "0", "1", "00", "11"))
_BLOCK_TO_LETTER = {THUE_MORSE.image(letter).data: letter for letter in (0, 1)}


def _decode_doubling(data: bytes) -> bytes | None:
    """Invert the Thue-Morse map on a word of even length, or None."""
    out = bytearray()
    for index in range(0, len(data), 2):
        letter = _BLOCK_TO_LETTER.get(data[index:index + 2])
        if letter is None:
            return None
        out.append(letter)
    return bytes(out)


def decompose_overlapfree(word) -> list[Decomposition]:
    """All ways to peel an overlap-free binary word down one doubling level.

    Returns every (head, core, tail) with head and tail in
    {empty, 0, 1, 00, 11}, word == head + double(core) + tail, and core
    overlap-free.  Words that contain an overlap are rejected.
    """
    word = as_word(word)
    if not is_overlapfree(word):
        raise ValueError("decomposition is defined for overlap-free words only")
    data = word.data
    out = []
    for head in _EDGE_WORDS:
        if not data.startswith(head.data):
            continue
        for tail in _EDGE_WORDS:
            middle_length = len(data) - len(head) - len(tail)
            if middle_length < 0 or middle_length % 2:
                continue
            if not data.endswith(tail.data):
                continue
            core_data = _decode_doubling(data[len(head):len(data) - len(tail)])
            if core_data is None:
                continue
            core = Word(core_data)
            if is_overlapfree(core):
                out.append(Decomposition(head=head, core=core, tail=tail))
    return out


def run_all(squarefree_morphism: Morphism | None = None,
            cubefree_morphism: Morphism | None = None) -> list[VerificationReport]:
    """Every check, in declaration order; pass means all individual passes."""
    h = squarefree_morphism if squarefree_morphism is not None else SQUAREFREE_MORPHISM
    g = cubefree_morphism if cubefree_morphism is not None else CUBEFREE_MORPHISM
    return [
        check_factor_closure(h),
        check_h_images_squarefree(h),
        check_h_interior_images(h),
        check_h_image_splits(h),
        check_g_images_square_bound(g),
        check_g_interior_images(g),
        check_g_image_splits(g),
        check_template_1a3a2(),
        check_g_image_witnesses(g),
        check_g_cube_shortlist(g),
        check_enumeration_counts(),
    ]


#: Zero-argument runners for every named check, in run_all order.
CHECKS = {
    "h-factor-closure": check_factor_closure,
    "h-images-squarefree": check_h_images_squarefree,
    "h-interior-images": check_h_interior_images,
    "h-image-splits": check_h_image_splits,
    "g-images-square-bound": check_g_images_square_bound,
    "g-interior-images": check_g_interior_images,
    "g-image-splits": check_g_image_splits,
    "template-1a3a2": check_template_1a3a2,
    "g-image-witnesses": check_g_image_witnesses,
    "g-cube-shortlist": check_g_cube_shortlist,
    "enumeration-counts": check_enumeration_counts,
}
