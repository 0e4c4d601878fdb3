import doctest
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

import sylvester.tableaux
from support import chi_square_two_sample_p, chi_square_uniform_p, index_sampler_counts, SIGNIFICANCE
from sylvester.errors import MalformedTableau
from sylvester.streams import CounterRng
from sylvester.tableaux import (
    StaircaseTableau,
    _insert,
    hook_lengths,
    sample_tableau,
    sample_uniform_word,
    staircase_shape,
    tableau_to_word,
    word_to_tableau,
)
from sylvester.words import count_reduced_words, enumerate_words, word_length


def test_hook_lengths_staircase():
    assert hook_lengths(4) == ((5, 3, 1), (3, 1), (1,))
    assert hook_lengths(2) == ((1,),)
    # the count formula is N! over the hook product
    for n in (2, 3, 4, 5, 6):
        hooks = 1
        for row in hook_lengths(n):
            for h in row:
                hooks *= h
        assert factorial(word_length(n)) % hooks == 0
        assert factorial(word_length(n)) // hooks == count_reduced_words(n)


def test_insertion_tableau_is_superstandard(words4, words5):
    for n, words in ((4, words4), (5, words5)):
        for w in words:
            ins, _ = _insert(n, w)
            for i, row in enumerate(ins):
                assert row == [i + j + 1 for j in range(len(row))]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_bijection_roundtrip_exhaustive(n):
    tableaux = set()
    for w in enumerate_words(n):
        t = word_to_tableau(n, w)
        t.validate()
        assert tableau_to_word(t) == w
        tableaux.add(t.rows)
    # injective onto as many tableaux as words: a bijection
    assert len(tableaux) == count_reduced_words(n)


@given(st.integers(min_value=2, max_value=7), st.integers(min_value=0, max_value=10**9))
@settings(max_examples=60, deadline=None)
def test_sampled_tableaux_are_valid_and_roundtrip(n, trial):
    t = sample_tableau(n, CounterRng(99, trial))
    t.validate()
    w = tableau_to_word(t)
    assert word_to_tableau(n, w) == t


def test_sampling_is_deterministic_per_stream():
    a = sample_tableau(6, CounterRng(4, 123))
    b = sample_tableau(6, CounterRng(4, 123))
    c = sample_tableau(6, CounterRng(4, 124))
    assert a == b
    assert a != c


def test_malformed_tableaux_are_rejected():
    with pytest.raises(MalformedTableau):
        StaircaseTableau(4, ((1, 2, 3), (4, 5))).validate()  # wrong shape
    with pytest.raises(MalformedTableau):
        StaircaseTableau(4, ((1, 2, 2), (3, 4), (5,))).validate()  # not a permutation
    with pytest.raises(MalformedTableau):
        StaircaseTableau(4, ((2, 1, 3), (4, 5), (6,))).validate()  # row not increasing
    with pytest.raises(MalformedTableau):
        StaircaseTableau(4, ((2, 3, 5), (1, 4), (6,))).validate()  # column not increasing
    with pytest.raises(MalformedTableau):
        tableau_to_word(StaircaseTableau(3, ((1, 2), (3, 4))))


def test_word_to_tableau_rejects_bad_words():
    with pytest.raises(ValueError):
        word_to_tableau(4, (1, 2, 1))  # wrong length
    with pytest.raises(ValueError):
        word_to_tableau(4, (1, 1, 2, 1, 3, 2))  # not reduced
    with pytest.raises(ValueError):
        word_to_tableau(4, (1, 2, 4, 1, 3, 2))  # letter out of range


def test_sample_uniform_word_small_chi_square():
    draws = 30000
    counts = {}
    for t in range(draws):
        w = sample_uniform_word(4, CounterRng(17, t))
        counts[w] = counts.get(w, 0) + 1
    cells = list(enumerate_words(4))
    assert set(counts) <= set(cells)
    assert chi_square_uniform_p(counts, cells, draws) >= SIGNIFICANCE


def test_sampler_against_independent_index_sampler():
    # two sample comparison with a sampler built on enumeration indexing
    draws = 60000
    hook = {}
    for t in range(draws):
        w = sample_uniform_word(4, CounterRng(23, t))
        hook[w] = hook.get(w, 0) + 1
    index = index_sampler_counts(4, draws, seed=24)
    assert chi_square_two_sample_p(hook, index) >= SIGNIFICANCE


def test_staircase_shape():
    assert staircase_shape(5) == (4, 3, 2, 1)
    assert staircase_shape(2) == (1,)


def test_doctests():
    failures, _ = doctest.testmod(sylvester.tableaux)
    assert failures == 0
