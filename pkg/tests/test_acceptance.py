"""Acceptance checks, one test per criterion.

`pytest tests/test_acceptance.py -v` prints one pass/fail line per criterion;
add `-s` for measured values.  The n=7 enumeration is opt-in via
`pytest tests/test_acceptance.py -v -m slow` (roughly five minutes).
"""

import os
import subprocess
import sys
import time
from fractions import Fraction
from itertools import combinations
from math import comb, pi, sqrt

import pytest

from support import SIGNIFICANCE, chi_square_uniform_p
from sylvester.engine import (
    _prefixes,
    exact_probability,
    load_checkpoint,
    monte_carlo_probability,
    report_to_csv,
    sample_word_counts,
)
from sylvester.errors import ResourceLimit
from sylvester.geometry import (
    Region,
    sample_region,
    sweep_histogram,
    sweep_word,
    sylvester_probability,
    in_convex_position,
)
from sylvester.restriction import is_reentrant, reentrant_subset_count, restrict
from sylvester.streams import CounterRng
from sylvester.tableaux import tableau_to_word, word_to_tableau
from sylvester.words import count_reduced_words, flip_word, reverse_word


def test_reduced_word_counts_n4_through_n8():
    t0 = time.perf_counter()
    counts = [count_reduced_words(n) for n in range(4, 9)]
    elapsed = time.perf_counter() - t0
    assert counts == [16, 768, 292864, 1100742656, 48608795688960]
    assert elapsed < 1.0


def test_exact_n4_quarter_under_one_second():
    exact_probability(4)  # warm the compiled kernel cache before timing
    t0 = time.perf_counter()
    report = exact_probability(4)
    elapsed = time.perf_counter() - t0
    assert report.total_words == 16
    assert report.total_pairs == 16
    assert report.reentrant_pairs == 4
    assert report.probability == Fraction(1, 4)
    print(f"\nn=4 exact: 4/16 in {elapsed:.4f}s")
    assert elapsed < 1.0


def test_exact_n5_distribution_under_ten_seconds():
    exact_probability(4)  # warm the compiled kernel cache before timing
    t0 = time.perf_counter()
    report = exact_probability(5)
    elapsed = time.perf_counter() - t0
    assert report.total_words == 768
    assert report.total_pairs == 5 * 768
    assert report.reentrant_pairs == 960
    assert report.probability == Fraction(1, 4)
    assert report.histogram == {0: 328, 2: 400, 4: 40}
    assert report.class_pairs["REENTRANT"] == 960
    assert sorted(report.class_pairs.values()) == [928, 960, 972, 980]
    print(f"\nn=5 exact: 960/3840 in {elapsed:.4f}s")
    assert elapsed < 10.0


def test_exact_n6_quarter_under_ten_minutes():
    exact_probability(4)  # warm the compiled kernel cache before timing
    t0 = time.perf_counter()
    report = exact_probability(6)
    elapsed = time.perf_counter() - t0
    assert report.total_words == 292864
    assert report.total_pairs == 15 * 292864
    assert report.reentrant_pairs == 1098240
    assert report.probability == Fraction(1, 4)
    print(f"\nn=6 exact: 1098240/4392960 in {elapsed:.2f}s")
    assert elapsed < 600.0


@pytest.mark.slow
def test_exact_n7_quarter_with_checkpoint(tmp_path):
    exact_probability(4)  # warm the compiled kernel cache before timing
    t0 = time.perf_counter()
    report = exact_probability(7, checkpoint=str(tmp_path / "n7.ckpt"))
    elapsed = time.perf_counter() - t0
    assert report.total_words == 1100742656
    assert report.total_pairs == 35 * 1100742656
    assert report.reentrant_pairs == 9631498240
    assert report.probability == Fraction(1, 4)
    print(f"\nn=7 exact: 9631498240/38525992960 in {elapsed:.0f}s")


def test_n8_budget_gate_and_monte_carlo_quarter():
    with pytest.raises(ResourceLimit):
        exact_probability(8)
    # the full n=8 pair count divides into an exact integer quarter
    assert comb(8, 4) * count_reduced_words(8) == 4 * 850_653_924_556_800
    trials = 10**6
    est = monte_carlo_probability(8, trials, seed=1)
    sigma = sqrt(0.25 * 0.75 / trials)
    delta = abs(est.reentrant_fraction - 0.25)
    print(f"\nn=8 Monte Carlo: {est.reentrant_fraction:.5f} ({delta / sigma:.2f} sigma from 1/4)")
    assert delta < 3.0 * sigma


def test_exact_results_identical_across_worker_counts():
    for n in (4, 5, 6):
        baseline = exact_probability(n, workers=1)
        for workers in (2, 4, 8):
            assert exact_probability(n, workers=workers) == baseline


KILL_SCRIPT = """
import sys, time
import sylvester.engine as engine

real = engine._run_prefix

def slowed(n, prefix):
    time.sleep(0.15)
    return real(n, prefix)

engine._run_prefix = slowed
engine.exact_probability(6, checkpoint=sys.argv[1])
"""


def test_checkpoint_kill_and_resume_equality_n6(tmp_path):
    path = str(tmp_path / "n6.ckpt")
    proc = subprocess.Popen([sys.executable, "-c", KILL_SCRIPT, path])
    try:
        finished = 0
        deadline = time.time() + 120.0
        while time.time() < deadline and finished < 3:
            if os.path.exists(path):
                with open(path) as f:
                    finished = sum(1 for line in f if line.startswith("#h "))
            time.sleep(0.02)
    finally:
        proc.kill()
        proc.wait()
    assert finished >= 3, "writer did not finish three prefixes before the deadline"
    depth, done = load_checkpoint(path, 6)
    total = len(_prefixes(6, depth))
    assert 0 < len(done) < total, "the kill landed after the run completed"
    resumed = exact_probability(6, checkpoint=path)
    direct = exact_probability(6)
    assert resumed == direct
    assert report_to_csv(resumed) == report_to_csv(direct)
    print(f"\nkilled after {len(done)}/{total} prefixes; resumed run matches the direct run")


def test_tableau_word_roundtrip_exhaustive(words4, words5):
    for n, words in ((4, words4), (5, words5)):
        for word in words:
            assert tableau_to_word(word_to_tableau(n, word)) == word


def test_sampler_uniformity_chi_square(words4, words5):
    counts4 = sample_word_counts(4, 10**6, seed=5)
    assert set(counts4) <= set(words4)
    p4 = chi_square_uniform_p(counts4, list(words4), 10**6)
    counts5 = sample_word_counts(5, 10**7, seed=5)
    assert set(counts5) <= set(words5)
    p5 = chi_square_uniform_p(counts5, list(words5), 10**7)
    print(f"\nchi-square p: n=4 {p4:.4f} (16 cells, 1e6 draws), n=5 {p5:.4f} (768 cells, 1e7 draws)")
    assert p4 >= SIGNIFICANCE
    assert p5 >= SIGNIFICANCE


def test_geometry_oracle_ten_thousand_configs():
    trials = 10_000
    agree = 0
    for t in range(trials):
        config = sample_region(Region.square(), 4, CounterRng(202, t))
        agree += is_reentrant(sweep_word(config)) == (not in_convex_position(config))
    print(f"\nsweep class vs hull test agreement: {agree}/{trials}")
    assert agree == trials


def test_classical_four_point_probabilities():
    trials = 100_000
    fixtures = [
        ("triangle", Region.triangle(), 1.0 / 3.0),
        ("square", Region.square(), 11.0 / 36.0),
        ("disk", Region.disk(), 35.0 / (12.0 * pi**2)),
    ]
    print()
    for name, region, target in fixtures:
        hist = sweep_histogram(region, trials, seed=31)
        sigma = sqrt(target * (1.0 - target) / trials)
        delta = abs(hist.reentrant_fraction - target)
        print(f"{name}: {hist.reentrant_fraction:.5f} vs {target:.5f} ({delta / sigma:.2f} sigma)")
        assert delta < 3.0 * sigma
        if name == "square":
            hull = sylvester_probability(region, trials, seed=31)
            assert hull.reentrant_count == hist.reentrant_count


def test_restriction_symmetry_exhaustive_n5(words5):
    n = 5
    checks = 0
    for word in words5:
        reversed_word = reverse_word(word)
        flipped_word = flip_word(n, word)
        assert reentrant_subset_count(n, word) == reentrant_subset_count(n, reversed_word)
        assert reentrant_subset_count(n, word) == reentrant_subset_count(n, flipped_word)
        for k in (2, 3, 4):
            for subset in combinations(range(1, n + 1), k):
                mirrored = tuple(sorted(n + 1 - v for v in subset))
                restricted = restrict(n, word, subset)
                assert restrict(n, reversed_word, mirrored) == reverse_word(restricted)
                assert restrict(n, flipped_word, mirrored) == flip_word(k, restricted)
                checks += 2
    print(f"\n{checks} equivariance checks over all 768 words")
