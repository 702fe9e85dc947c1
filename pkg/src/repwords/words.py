"""Words over small integer alphabets, morphisms, and fixed-point streams.

A word is an immutable sequence of letters 0..k-1.  A morphism substitutes
a fixed nonempty image word for every letter; when the image of some letter
``a`` starts with ``a`` and is longer than one letter, iterating the
morphism from ``a`` converges to a unique infinite fixed point, whose
prefixes this module generates lazily.  There is no infinite-word type:
every operation takes an explicit prefix length.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def _digits_to_bytes(text: str) -> bytes:
    out = bytearray()
    for ch in text:
        if ch.isspace():
            continue
        if "0" <= ch <= "9":
            out.append(ord(ch) - ord("0"))
        else:
            raise ValueError(f"invalid letter {ch!r}: words are written as ASCII digits")
    return bytes(out)


class Word:
    """An immutable word over an integer alphabet.

    Accepts an iterable of letters, a digit string (whitespace ignored),
    raw bytes, or another Word.  Equality and hashing compare letters only;
    ``alphabet_size`` defaults to the smallest alphabet containing them.
    """

    __slots__ = ("_data", "_alphabet_size")

    def __init__(self, letters: "Word | str | bytes | Iterable[int]" = (),
                 alphabet_size: int | None = None):
        if isinstance(letters, Word):
            data = letters._data
        elif isinstance(letters, str):
            data = _digits_to_bytes(letters)
        elif isinstance(letters, (bytes, bytearray, memoryview)):
            data = bytes(letters)
        else:
            data = bytes(letters)
        if alphabet_size is None:
            alphabet_size = max(data) + 1 if data else 0
        elif data and max(data) >= alphabet_size:
            raise ValueError(
                f"letter {max(data)} does not fit an alphabet of size {alphabet_size}")
        self._data = data
        self._alphabet_size = alphabet_size

    @property
    def data(self) -> bytes:
        """The letters as raw bytes (one letter per byte)."""
        return self._data

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(self._data)

    @property
    def alphabet_size(self) -> int:
        return self._alphabet_size

    def __len__(self) -> int:
        return len(self._data)

    def __iter__(self) -> Iterator[int]:
        return iter(self._data)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self._data[index], self._alphabet_size)
        return self._data[index]

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self._data == other._data
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._data)

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self._data + other._data,
                    max(self._alphabet_size, other._alphabet_size))

    def __mul__(self, count: int) -> "Word":
        return Word(self._data * count, self._alphabet_size)

    def startswith(self, prefix: "Word") -> bool:
        return self._data.startswith(prefix._data)

    def endswith(self, suffix: "Word") -> bool:
        return self._data.endswith(suffix._data)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        if all(letter <= 9 for letter in self._data):
            return f"Word({format_word(self)!r})"
        return f"Word({self.letters!r})"


def parse_word(text: str) -> Word:
    """Read a word from ASCII digits; whitespace is skipped."""
    return Word(text)


def format_word(word: Word) -> str:
    """Render a word as ASCII digits (letters must be at most 9)."""
    if any(letter > 9 for letter in word.data):
        raise ValueError("letters above 9 have no single-digit form")
    return bytes(letter + ord("0") for letter in word.data).decode("ascii")


def as_word(value) -> Word:
    """Coerce a Word, digit string, bytes, or letter iterable to a Word."""
    return value if isinstance(value, Word) else Word(value)


class Morphism:
    """A map from letters to nonempty words, extended by concatenation.

    ``uniform_width`` is the common image length when all images share one,
    else None.
    """

    __slots__ = ("_images", "_image_data", "_uniform_width")

    def __init__(self, images: Iterable[Word | str | bytes | Iterable[int]]):
        imgs = tuple(as_word(image) for image in images)
        if not imgs:
            raise ValueError("a morphism needs at least one letter image")
        for letter, image in enumerate(imgs):
            if len(image) == 0:
                raise ValueError(f"image of letter {letter} is empty")
        widths = {len(image) for image in imgs}
        self._images = imgs
        self._image_data = tuple(image.data for image in imgs)
        self._uniform_width = widths.pop() if len(widths) == 1 else None

    @property
    def images(self) -> tuple[Word, ...]:
        return self._images

    @property
    def alphabet_size(self) -> int:
        """Size of the source alphabet."""
        return len(self._images)

    @property
    def uniform_width(self) -> int | None:
        return self._uniform_width

    def image(self, letter: int) -> Word:
        if not 0 <= letter < len(self._images):
            raise ValueError(f"letter {letter} outside alphabet of size {len(self._images)}")
        return self._images[letter]

    def _apply_data(self, data: bytes) -> bytes:
        images = self._image_data
        try:
            return b"".join(images[letter] for letter in data)
        except IndexError:
            bad = next(letter for letter in data if letter >= len(images))
            raise ValueError(
                f"letter {bad} outside alphabet of size {len(images)}") from None

    def apply(self, word) -> Word:
        """Image of a word: the concatenation of its letter images."""
        return Word(self._apply_data(as_word(word).data))

    __call__ = apply

    def is_prolongable(self, letter: int) -> bool:
        """True when image(letter) starts with the letter and is longer than it."""
        image = self.image(letter)
        return len(image) >= 2 and image.data[0] == letter

    def __repr__(self) -> str:
        return f"Morphism({tuple(str(image) for image in self._images)!r})"


class WordStream:
    """Cursor over the fixed point of a morphism, optionally mapped.

    The fixed point from a prolongable seed expands as
    seed, x, m(x), m(m(x)), ... where image(seed) = seed + x; chunks are
    buffered so that reading n letters and then m more sees exactly the
    letters of a single n+m read.  With ``outer`` set, every letter of the
    fixed point is pushed through the outer morphism first, materializing
    only as much of the inner word as the read demands.
    """

    __slots__ = ("_morphism", "_outer", "_seed", "_position", "_pending", "_chunks")

    def __init__(self, morphism: Morphism, seed: int, outer: Morphism | None = None):
        if not morphism.is_prolongable(seed):
            raise ValueError(
                f"morphism is not prolongable on {seed}: "
                f"image {morphism.image(seed)} does not extend the letter")
        self._morphism = morphism
        self._outer = outer
        self._seed = seed
        self._position = 0
        self._pending = bytearray()
        self._chunks = self._expand()

    def _expand(self) -> Iterator[bytes]:
        morphism = self._morphism
        yield bytes([self._seed])
        chunk = morphism.image(self._seed).data[1:]
        while True:
            yield chunk
            chunk = morphism._apply_data(chunk)

    @property
    def position(self) -> int:
        """Number of letters emitted so far."""
        return self._position

    def take(self, count: int) -> Word:
        """The next ``count`` letters, advancing the cursor."""
        if count < 0:
            raise ValueError("cannot take a negative number of letters")
        pending = self._pending
        outer = self._outer
        while len(pending) < count:
            chunk = next(self._chunks)
            pending.extend(outer._apply_data(chunk) if outer is not None else chunk)
        out = bytes(pending[:count])
        del pending[:count]
        self._position += count
        return Word(out)


def fixed_point_prefix(morphism: Morphism, seed: int, count: int) -> Word:
    """First ``count`` letters of the fixed point of ``morphism`` at ``seed``."""
    return WordStream(morphism, seed).take(count)


def mapped_stream_prefix(outer: Morphism, morphism: Morphism, seed: int,
                         count: int) -> Word:
    """First ``count`` letters of outer(fixed point of ``morphism`` at ``seed``).

    For a uniform outer morphism the inner prefix length is known up front
    (one spare letter covers the rounding); otherwise letters are pulled on
    demand.  Either way memory stays proportional to ``count``.
    """
    if count < 0:
        raise ValueError("cannot take a negative number of letters")
    width = outer.uniform_width
    if width is not None:
        inner = fixed_point_prefix(morphism, seed, -(-count // width) + 1)
        return Word(outer._apply_data(inner.data)[:count])
    return WordStream(morphism, seed, outer=outer).take(count)


#: 10-uniform morphism on {0,1,2,3}: its fixed point from 0 is squarefree
#: and contains none of FORBIDDEN_FACTORS.
SQUAREFREE_MORPHISM = Morphism(("0310201023", "0310230102", "0201031023", "0203010201"))

#: 6-uniform morphism into {0,1}: applied to any squarefree word avoiding
#: FORBIDDEN_FACTORS it yields a cubefree word whose squares all have roots
#: of length at most 3.
CUBEFREE_MORPHISM = Morphism(("010011", "010110", "011001", "011010"))

#: The overlap-free binary morphism 0 -> 01, 1 -> 10.
THUE_MORSE = Morphism(("01", "10"))

#: Factors that must stay out of the source word for CUBEFREE_MORPHISM to work.
FORBIDDEN_FACTORS = tuple(Word(text) for text in ("12", "13", "21", "32", "231", "10302"))

#: Names accepted by the CLI and the report renderer.
WORD_NAMES = ("h-fixed-point", "g-of-h", "thue-morse")


def named_stream(name: str) -> WordStream:
    """A fresh stream for one of the three named words."""
    if name == "h-fixed-point":
        return WordStream(SQUAREFREE_MORPHISM, 0)
    if name == "g-of-h":
        return WordStream(SQUAREFREE_MORPHISM, 0, outer=CUBEFREE_MORPHISM)
    if name == "thue-morse":
        return WordStream(THUE_MORSE, 0)
    raise ValueError(f"unknown word {name!r}; expected one of {', '.join(WORD_NAMES)}")


def named_prefix(name: str, count: int) -> Word:
    """First ``count`` letters of a named word."""
    return named_stream(name).take(count)
