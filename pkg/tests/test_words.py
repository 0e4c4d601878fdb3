import doctest
from itertools import combinations, product

import pytest
from hypothesis import given, strategies as st

import sylvester.words
from sylvester.errors import InvalidPrefix
from sylvester.words import (
    Crossing,
    apply_letter,
    count_reduced_words,
    enumerate_words,
    flip_word,
    format_word,
    identity,
    is_reduced_word_for_long_word,
    longest_element,
    parse_word,
    reverse_word,
    word_length,
    word_product,
    word_to_crossings,
)

# counts frozen from the hook length formula; n <= 6 re-derived by
# enumeration below, the rest pinned here against regressions
KNOWN_COUNTS = {
    1: 1,
    2: 1,
    3: 2,
    4: 16,
    5: 768,
    6: 292864,
    7: 1100742656,
    8: 48608795688960,
}


def test_identity_and_longest_element():
    assert identity(4) == (1, 2, 3, 4)
    assert longest_element(4) == (4, 3, 2, 1)
    assert longest_element(1) == (1,)


def test_apply_letter_swaps_adjacent_positions():
    assert apply_letter((1, 2, 3, 4), 2) == (1, 3, 2, 4)
    assert apply_letter(apply_letter((1, 2, 3), 1), 1) == (1, 2, 3)
    with pytest.raises(ValueError):
        apply_letter((1, 2, 3), 3)
    with pytest.raises(ValueError):
        apply_letter((1, 2, 3), 0)


def test_word_product_examples():
    assert word_product(4, parse_word("121321")) == (4, 3, 2, 1)
    assert word_product(4, parse_word("232123")) == (4, 3, 2, 1)
    assert word_product(3, (1, 1)) == (1, 2, 3)
    with pytest.raises(ValueError):
        word_product(4, (4,))


def test_is_reduced_word_examples():
    assert is_reduced_word_for_long_word(4, parse_word("232123"))
    assert not is_reduced_word_for_long_word(4, parse_word("112321"))  # repeat step
    assert not is_reduced_word_for_long_word(4, parse_word("12132"))  # short
    assert not is_reduced_word_for_long_word(4, parse_word("1213211"))  # long
    assert is_reduced_word_for_long_word(2, (1,))
    assert is_reduced_word_for_long_word(1, ())


def test_enumeration_matches_brute_force_n4(words4):
    brute = {
        w
        for w in product((1, 2, 3), repeat=6)
        if is_reduced_word_for_long_word(4, w)
    }
    assert set(words4) == brute
    assert len(words4) == 16


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_count_matches_enumeration(n):
    assert sum(1 for _ in enumerate_words(n)) == count_reduced_words(n)


def test_count_known_values():
    for n, value in KNOWN_COUNTS.items():
        assert count_reduced_words(n) == value


def test_enumeration_is_lexicographic_and_distinct(words5):
    assert words5 == sorted(words5)
    assert len(set(words5)) == len(words5)
    assert all(is_reduced_word_for_long_word(5, w) for w in words5)


def test_prefix_enumeration_partitions(words5):
    prefixes = sorted({w[:2] for w in words5})
    rebuilt = []
    for p in prefixes:
        rebuilt.extend(enumerate_words(5, p))
    assert rebuilt == words5


def test_full_word_prefix_yields_itself(words4):
    w = words4[0]
    assert list(enumerate_words(4, w)) == [w]


def test_invalid_prefix_raises():
    with pytest.raises(InvalidPrefix):
        list(enumerate_words(4, (1, 1)))
    with pytest.raises(InvalidPrefix):
        list(enumerate_words(4, (5,)))
    with pytest.raises(InvalidPrefix):
        list(enumerate_words(4, (1, 2, 1, 3, 2, 1, 1)))


def test_crossings_example():
    crossings = word_to_crossings(5, parse_word("1213214321"))
    assert crossings[0] == Crossing(1, 1, 2)
    assert [(c.low, c.high) for c in crossings] == [
        (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5),
    ]
    assert [c.time for c in crossings] == list(range(1, 11))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_crossings_cover_every_pair_once(n):
    expected = set(combinations(range(1, n + 1), 2))
    for w in enumerate_words(n):
        pairs = [(c.low, c.high) for c in word_to_crossings(n, w)]
        assert len(pairs) == len(expected)
        assert set(pairs) == expected


def test_reverse_and_flip_preserve_reduced_words(words4, words5):
    for n, words in ((4, words4), (5, words5)):
        ws = set(words)
        for w in words:
            assert reverse_word(reverse_word(w)) == w
            assert flip_word(n, flip_word(n, w)) == w
            assert reverse_word(w) in ws
            assert flip_word(n, w) in ws


def test_parse_and_format_roundtrip(words5):
    for w in words5:
        assert parse_word(format_word(5, w)) == w
    assert parse_word("2 3 2 1 2 3") == (2, 3, 2, 1, 2, 3)
    assert parse_word("10,9,10") == (10, 9, 10)
    assert format_word(11, (10, 9, 10)) == "10,9,10"
    with pytest.raises(ValueError):
        parse_word("")
    with pytest.raises(ValueError):
        parse_word("102")  # zero letter


@given(st.lists(st.integers(min_value=1, max_value=4), min_size=0, max_size=12))
def test_is_reduced_agrees_with_definition(letters):
    word = tuple(letters)
    n = 5
    ok = len(word) == word_length(n)
    perm = list(identity(n))
    for letter in word:
        i = letter - 1
        if i >= n - 1 or perm[i] > perm[i + 1]:
            ok = False
            break
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    ok = ok and tuple(perm) == longest_element(n)
    assert is_reduced_word_for_long_word(n, word) == ok


def test_doctests():
    failures, _ = doctest.testmod(sylvester.words)
    assert failures == 0
