"""Reduced words for the longest element of the symmetric group.

A permutation of {1..n} is stored as a tuple ``perm`` where ``perm[i]`` is the
value at position ``i + 1``.  Letter ``i`` (1-based) acts on the right by
swapping the values at positions ``i`` and ``i + 1``.  A word is a tuple of
letters applied left to right starting from the identity.  A word is reduced
for the longest element exactly when every step swaps an ascending adjacent
pair and the final permutation is ``(n, n-1, ..., 1)``.
"""

from math import factorial
from typing import NamedTuple

from .errors import InvalidPrefix

Perm = tuple[int, ...]
Word = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    """The order-reversing permutation, the unique longest element.

    >>> longest_element(4)
    (4, 3, 2, 1)
    """
    return tuple(range(n, 0, -1))


def apply_letter(perm: Perm, letter: int) -> Perm:
    """Swap the values at positions ``letter`` and ``letter + 1``.

    >>> apply_letter((1, 2, 3), 2)
    (1, 3, 2)
    """
    i = letter - 1
    if not 0 <= i < len(perm) - 1:
        raise ValueError(f"letter {letter} out of range for n={len(perm)}")
    return perm[:i] + (perm[i + 1], perm[i]) + perm[i + 2:]


def word_product(n: int, word: Word) -> Perm:
    """Apply the letters of ``word`` left to right starting from the identity.

    >>> word_product(4, (1, 2, 1, 3, 2, 1))
    (4, 3, 2, 1)
    """
    perm = list(range(1, n + 1))
    for letter in word:
        i = letter - 1
        if not 0 <= i < n - 1:
            raise ValueError(f"letter {letter} out of range for n={n}")
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return tuple(perm)


def word_length(n: int) -> int:
    """Number of letters in any reduced word for the longest element."""
    return n * (n - 1) // 2


def is_reduced_word_for_long_word(n: int, word: Word) -> bool:
    """True when ``word`` is a reduced word for ``longest_element(n)``.

    Checks the length, that every step swaps an ascending pair, and that the
    product is the order-reversing permutation.

    >>> is_reduced_word_for_long_word(4, (2, 3, 2, 1, 2, 3))
    True
    >>> is_reduced_word_for_long_word(4, (1, 1, 2, 1, 3, 2))
    False
    """
    if len(word) != word_length(n):
        return False
    perm = list(range(1, n + 1))
    for letter in word:
        i = letter - 1
        if not 0 <= i < n - 1 or perm[i] > perm[i + 1]:
            return False
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return True


def count_reduced_words(n: int) -> int:
    """Exact number of reduced words, by the hook length formula.

    The shape is the staircase (n-1, n-2, ..., 1); every hook length is odd.

    >>> [count_reduced_words(n) for n in range(1, 6)]
    [1, 1, 2, 16, 768]
    """
    total = word_length(n)
    hooks = 1
    for i in range(n - 1):
        for j in range(n - 1 - i):
            hooks *= 2 * (n - 2 - i - j) + 1
    return factorial(total) // hooks


def enumerate_words(n: int, prefix: Word = ()):
    """Yield every reduced word with the given prefix in lexicographic order.

    Raises InvalidPrefix when ``prefix`` cannot be extended to (or is not
    itself) a reduced word for the longest element.
    """
    total = word_length(n)
    if len(prefix) > total:
        raise InvalidPrefix(f"prefix longer than {total} letters")
    perm = list(range(1, n + 1))
    for letter in prefix:
        i = letter - 1
        if not 0 <= i < n - 1 or perm[i] > perm[i + 1]:
            raise InvalidPrefix(f"prefix {prefix} is not reduced")
        perm[i], perm[i + 1] = perm[i + 1], perm[i]

    word = list(prefix)

    def descend(depth: int):
        if depth == total:
            yield tuple(word)
            return
        for i in range(n - 1):
            if perm[i] < perm[i + 1]:
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
                word.append(i + 1)
                yield from descend(depth + 1)
                word.pop()
                perm[i], perm[i + 1] = perm[i + 1], perm[i]

    return descend(len(prefix))


class Crossing(NamedTuple):
    """A crossing event: at time ``time`` the values ``low < high`` swap."""

    time: int
    low: int
    high: int


def word_to_crossings(n: int, word: Word) -> list[Crossing]:
    """List the value pair swapped at each step, in time order.

    Times are 1-based.  For a reduced word for the longest element every
    unordered pair of values appears exactly once.

    >>> word_to_crossings(3, (1, 2, 1))
    [Crossing(time=1, low=1, high=2), Crossing(time=2, low=1, high=3), Crossing(time=3, low=2, high=3)]
    """
    perm = list(range(1, n + 1))
    out = []
    for t, letter in enumerate(word, start=1):
        i = letter - 1
        a, b = perm[i], perm[i + 1]
        if a > b:
            a, b = b, a
        out.append(Crossing(t, a, b))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return out


def reverse_word(word: Word) -> Word:
    """The word read backwards.

    Reversing a reduced word for the longest element gives another one.
    """
    return tuple(reversed(word))


def flip_word(n: int, word: Word) -> Word:
    """Replace every letter ``i`` by ``n - i``.

    Conjugation by the longest element; preserves reduced words.
    """
    return tuple(n - letter for letter in word)


def parse_word(text: str) -> Word:
    """Parse a word from its serialized form.

    Words for n <= 10 are strings of digits with no separators; larger
    alphabets use comma separated letters.  Whitespace separated letters are
    accepted on input as well.

    >>> parse_word("232123")
    (2, 3, 2, 1, 2, 3)
    >>> parse_word("10,9,10")
    (10, 9, 10)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty word")
    if "," in text:
        parts = text.split(",")
    elif any(c.isspace() for c in text):
        parts = text.split()
    else:
        parts = list(text)
    letters = tuple(int(p) for p in parts)
    if any(letter < 1 for letter in letters):
        raise ValueError(f"letters must be positive: {text!r}")
    return letters


def format_word(n: int, word: Word) -> str:
    """Serialize a word: digit string for n <= 10, comma separated above.

    >>> format_word(4, (2, 3, 2, 1, 2, 3))
    '232123'
    """
    if n <= 10:
        return "".join(str(letter) for letter in word)
    return ",".join(str(letter) for letter in word)
