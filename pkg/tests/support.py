"""Shared test helpers: chi square utilities and an independent word sampler."""

from scipy.stats import chi2

from sylvester.streams import CounterRng
from sylvester.words import enumerate_words

SIGNIFICANCE = 1e-3


def chi_square_uniform_p(counts: dict, cells: list, draws: int) -> float:
    """p-value of observed counts against the uniform distribution on cells."""
    expected = draws / len(cells)
    stat = sum((counts.get(c, 0) - expected) ** 2 / expected for c in cells)
    return float(chi2.sf(stat, len(cells) - 1))


def chi_square_two_sample_p(a: dict, b: dict) -> float:
    """Two sample chi square p-value that a and b draw from one distribution."""
    cells = set(a) | set(b)
    na = sum(a.values())
    nb = sum(b.values())
    ka = (nb / na) ** 0.5
    kb = (na / nb) ** 0.5
    stat = 0.0
    for c in cells:
        oa = a.get(c, 0)
        ob = b.get(c, 0)
        stat += (ka * oa - kb * ob) ** 2 / (oa + ob)
    return float(chi2.sf(stat, len(cells) - 1))


def index_sampler_counts(n: int, draws: int, seed: int) -> dict:
    """Uniform words by indexing the full enumeration: a sampler that shares
    no code with the hook walk, for two sample comparisons."""
    words = list(enumerate_words(n))
    counts: dict = {}
    for t in range(draws):
        w = words[CounterRng(seed, t).randbelow(len(words))]
        counts[w] = counts.get(w, 0) + 1
    return counts
