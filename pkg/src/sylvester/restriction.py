"""Restriction of reduced words to wire subsets and quadruple classes.

Drawing a reduced word as a wiring diagram and keeping only the wires in a
subset S leaves a wiring diagram of the |S| chosen wires, hence a reduced word
for the longest element of S_|S|.  For four wires the sixteen possible
restrictions split into four orbits under word reversal and letter flip; the
REENTRANT orbit consists of the words whose middle wire pattern forces the
four points of a sweep realization to be in reentrant (non convex) position.
"""

import json
from functools import lru_cache
from importlib import resources

from .words import Word, enumerate_words, flip_word, format_word, parse_word, reverse_word

CLASS_LABELS = ("REENTRANT", "C1", "C2", "C3")

REENTRANT_SEED: Word = (1, 2, 3, 2, 1, 2)


def validate_subset(n: int, values) -> tuple[int, ...]:
    """Normalize a wire subset to a sorted tuple; at least two wires."""
    values = list(values)
    subset = sorted(set(values))
    if len(subset) != len(values):
        raise ValueError(f"duplicate wires in {values}")
    if len(subset) < 2:
        raise ValueError("subset needs at least two wires")
    if subset[0] < 1 or subset[-1] > n:
        raise ValueError(f"wires must lie in 1..{n}: {values}")
    return tuple(subset)


def restrict(n: int, word: Word, values) -> Word:
    """The reduced word traced by the wires in ``values`` alone.

    Letters are re-indexed to 1..k-1 for k chosen wires: a crossing of two
    chosen wires at position i becomes letter j, the number of chosen wires
    at positions <= i at that time.
    """
    subset = validate_subset(n, values)
    chosen = set(subset)
    perm = list(range(1, n + 1))
    pos = list(range(n))  # pos[v - 1] is the 0-based position of value v
    out = []
    for step, letter in enumerate(word, start=1):
        i = letter - 1
        if not 0 <= i < n - 1:
            raise ValueError(f"letter {letter} out of range for n={n}")
        a, b = perm[i], perm[i + 1]
        if a > b:
            raise ValueError(f"word is not reduced at position {step}")
        if a in chosen and b in chosen:
            out.append(sum(1 for v in subset if pos[v - 1] <= i))
        perm[i], perm[i + 1] = b, a
        pos[a - 1], pos[b - 1] = i + 1, i
    return tuple(out)


def compute_quad_classes() -> dict[str, list[str]]:
    """Recompute the class table from scratch.

    The sixteen reduced words for the longest element of S_4 fall into four
    orbits of size four under reversal and flip.  The orbit of the seed word
    1 2 3 2 1 2 is labeled REENTRANT; the rest are C1, C2, C3 ordered by
    their lexicographically smallest member.
    """
    words = list(enumerate_words(4))
    orbits = []
    seen = set()
    for word in words:
        if word in seen:
            continue
        orbit = {word}
        frontier = [word]
        while frontier:
            w = frontier.pop()
            for image in (reverse_word(w), flip_word(4, w)):
                if image not in orbit:
                    orbit.add(image)
                    frontier.append(image)
        seen |= orbit
        orbits.append(sorted(orbit))
    reentrant = next(o for o in orbits if REENTRANT_SEED in o)
    rest = sorted((o for o in orbits if o is not reentrant), key=lambda o: o[0])
    table = {"REENTRANT": reentrant, "C1": rest[0], "C2": rest[1], "C3": rest[2]}
    return {label: [format_word(4, w) for w in orbit] for label, orbit in table.items()}


@lru_cache(maxsize=1)
def quad_classes() -> dict[str, tuple[Word, ...]]:
    """The frozen class table, loaded from package data."""
    raw = resources.files("sylvester.data").joinpath("quad_classes.json").read_text()
    data = json.loads(raw)
    return {label: tuple(parse_word(s) for s in data[label]) for label in CLASS_LABELS}


@lru_cache(maxsize=1)
def _word_to_label() -> dict[Word, str]:
    return {w: label for label, orbit in quad_classes().items() for w in orbit}


def reentrant_words() -> frozenset[Word]:
    """The four restrictions that witness a reentrant quadruple."""
    return frozenset(quad_classes()["REENTRANT"])


def classify(word: Word) -> str:
    """Class label of a reduced word for the longest element of S_4."""
    try:
        return _word_to_label()[tuple(word)]
    except KeyError:
        raise ValueError(f"{word} is not a reduced word for the longest element of S_4") from None


def is_reentrant(word: Word) -> bool:
    return tuple(word) in reentrant_words()


def class_code(word: Word) -> int:
    """Pack a length six word with letters 1..3 into a base 4 integer."""
    code = 0
    for letter in word:
        code = (code << 2) | letter
    return code


def build_class_table() -> list[int]:
    """Class index (position in CLASS_LABELS) by packed code; -1 if invalid."""
    table = [-1] * 4096
    for idx, label in enumerate(CLASS_LABELS):
        for word in quad_classes()[label]:
            table[class_code(word)] = idx
    return table


def class_subset_counts(n: int, word: Word) -> dict[str, int]:
    """Count the four wire subsets of each class for one word.

    Restriction is recomputed per subset, so this is the slow reference path;
    the exact engine reproduces these counts incrementally.
    """
    from itertools import combinations

    counts = dict.fromkeys(CLASS_LABELS, 0)
    for subset in combinations(range(1, n + 1), 4):
        counts[classify(restrict(n, word, subset))] += 1
    return counts


def reentrant_subset_count(n: int, word: Word) -> int:
    """Number of four-wire subsets whose restriction is reentrant."""
    return class_subset_counts(n, word)["REENTRANT"]
