"""Exact and Monte Carlo engines for the four point probability.

The exact engine walks every reduced word for the longest element of S_n and
counts, over all words and all 4-wire subsets, how many restrictions land in
each quadruple class.  The conjecture under test is that the REENTRANT share
tends to 1/4.  Work is split by word prefixes so runs parallelize and can be
checkpointed and resumed; per trial counter streams make the Monte Carlo
estimator independent of chunking and worker count.
"""

import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, sqrt

import numpy as np

from . import _kernels
from .errors import CheckpointMismatch, ResourceLimit
from .restriction import CLASS_LABELS, build_class_table
from .words import Word, count_reduced_words, format_word, parse_word, word_length

DEFAULT_BUDGET = 10**11

CHECKPOINT_MAGIC = "#sylvester-ckpt v1"


@lru_cache(maxsize=8)
def _subset_arrays(n: int):
    """(subsets, pair_start, pair_list, class_table) for the kernels, 0-based."""
    quads = list(combinations(range(n), 4))
    subsets = np.array(quads, dtype=np.int64).reshape(len(quads), 4)
    buckets: dict[int, list[int]] = {}
    for s, quad in enumerate(quads):
        for a, b in combinations(quad, 2):
            buckets.setdefault(a * n + b, []).append(s)
    pair_start = np.zeros(n * n + 1, dtype=np.int64)
    flat: list[int] = []
    for pairid in range(n * n):
        pair_start[pairid] = len(flat)
        flat.extend(buckets.get(pairid, ()))
    pair_start[n * n] = len(flat)
    pair_list = np.array(flat, dtype=np.int64)
    class_table = np.array(build_class_table(), dtype=np.int8)
    return subsets, pair_start, pair_list, class_table


@dataclass(frozen=True)
class PairCountReport:
    """Exact counts over every (word, 4-subset) pair for one n."""

    n: int
    total_words: int
    class_pairs: dict[str, int]
    histogram: dict[int, int]

    @property
    def total_pairs(self) -> int:
        return self.total_words * comb(self.n, 4)

    @property
    def reentrant_pairs(self) -> int:
        return self.class_pairs["REENTRANT"]

    @property
    def probability(self) -> Fraction:
        if self.total_pairs == 0:
            return Fraction(0, 1)
        return Fraction(self.reentrant_pairs, self.total_pairs)


REPORT_COLUMNS = (
    "n,total_words,total_pairs,reentrant_pairs,c1_pairs,c2_pairs,c3_pairs,"
    "probability_num,probability_den"
)


def report_to_csv(report: PairCountReport) -> str:
    """One header line plus one data row, trailing newline included."""
    p = report.probability
    row = (
        report.n,
        report.total_words,
        report.total_pairs,
        report.reentrant_pairs,
        report.class_pairs["C1"],
        report.class_pairs["C2"],
        report.class_pairs["C3"],
        p.numerator,
        p.denominator,
    )
    return REPORT_COLUMNS + "\n" + ",".join(str(v) for v in row) + "\n"


Fragment = tuple[int, tuple[int, int, int, int], dict[int, int]]


def _run_prefix(n: int, prefix: Word) -> Fragment:
    """Exhaust all completions of ``prefix``; (words, class counts, histogram)."""
    subsets, pair_start, pair_list, class_table = _subset_arrays(n)
    class_out = np.zeros(4, dtype=np.int64)
    hist_out = np.zeros(comb(n, 4) + 1, dtype=np.int64)
    arr = np.array([p - 1 for p in prefix], dtype=np.int64)
    words = _kernels.count_fragment_kernel(
        n, arr, subsets, pair_start, pair_list, class_table, class_out, hist_out
    )
    hist = {int(k): int(v) for k, v in enumerate(hist_out) if v}
    return int(words), tuple(int(v) for v in class_out), hist


def _prefixes(n: int, depth: int) -> list[Word]:
    """All reduced word prefixes of the given length, in lexicographic order."""
    out: list[Word] = []
    perm = list(range(1, n + 1))
    word: list[int] = []

    def descend(d: int) -> None:
        if d == depth:
            out.append(tuple(word))
            return
        for i in range(n - 1):
            if perm[i] < perm[i + 1]:
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
                word.append(i + 1)
                descend(d + 1)
                word.pop()
                perm[i], perm[i + 1] = perm[i + 1], perm[i]

    descend(0)
    return out


def _choose_depth(n: int, min_tasks: int) -> int:
    depth = 0
    while depth < word_length(n) and len(_prefixes(n, depth)) < min_tasks:
        depth += 1
    return depth


def _format_hist(hist: dict[int, int]) -> str:
    return ",".join(f"{k}:{hist[k]}" for k in sorted(hist))


def _parse_hist(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    for part in text.split(","):
        k, _, mult = part.partition(":")
        out[int(k)] = int(mult)
    return out


def load_checkpoint(path: str, n: int) -> tuple[int, dict[Word, Fragment]]:
    """Parse a checkpoint file; returns (depth, finished fragments by prefix).

    A prefix counts as finished only when both its record line and its ``#h``
    histogram line are present and the histogram total matches the record's
    word count.  A torn or malformed final line (from a killed writer) is
    skipped; damage anywhere else raises CheckpointMismatch.
    """
    with open(path) as f:
        lines = f.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        return -1, {}
    header = lines[0].split()
    if (
        len(header) != 4
        or " ".join(header[:2]) != CHECKPOINT_MAGIC
        or not header[2].startswith("n=")
        or not header[3].startswith("depth=")
    ):
        raise CheckpointMismatch(f"{path}: unrecognized header {lines[0]!r}")
    file_n = int(header[2][2:])
    depth = int(header[3][6:])
    if file_n != n:
        raise CheckpointMismatch(f"{path} was written for n={file_n}, requested n={n}")
    records: dict[Word, tuple[int, tuple[int, int, int, int]]] = {}
    hists: dict[Word, dict[int, int]] = {}
    for pos, line in enumerate(lines[1:], start=1):
        last = pos == len(lines) - 1
        try:
            if line.startswith("#h "):
                _, prefix_text, hist_text = line.split(" ", 2)
                hists[parse_word(prefix_text)] = _parse_hist(hist_text)
            elif line.startswith("#"):
                continue
            else:
                fields = line.split("\t")
                if len(fields) != 6 or len(parse_word(fields[0])) != depth:
                    raise ValueError(line)
                words, reentrant, c1, c2, c3 = (int(v) for v in fields[1:])
                records[parse_word(fields[0])] = (words, (reentrant, c1, c2, c3))
        except ValueError:
            if last:
                break  # torn trailing write from a killed run
            raise CheckpointMismatch(f"{path}: malformed line {pos + 1}: {line!r}") from None
    done = {
        prefix: (words, classes, hists[prefix])
        for prefix, (words, classes) in records.items()
        if prefix in hists and sum(hists[prefix].values()) == words
    }
    return depth, done


def _drop_torn_tail(path: str) -> None:
    """Truncate a trailing line with no newline, left behind by a killed run,
    so appended records start on a line of their own."""
    with open(path, "rb+") as f:
        data = f.read()
        if data and not data.endswith(b"\n"):
            cut = data.rfind(b"\n")
            f.truncate(cut + 1 if cut >= 0 else 0)


def _append_fragment(f, n: int, prefix: Word, fragment: Fragment) -> None:
    words, classes, hist = fragment
    record = "\t".join(
        [format_word(n, prefix), str(words)] + [str(v) for v in classes]
    )
    f.write(f"{record}\n#h {format_word(n, prefix)} {_format_hist(hist)}\n")
    f.flush()


def exact_probability(
    n: int,
    workers: int | None = None,
    checkpoint: str | None = None,
    budget: int | None = DEFAULT_BUDGET,
) -> PairCountReport:
    """Exact class counts over all (word, 4-subset) pairs by exhaustive search.

    Work splits on word prefixes; with ``checkpoint`` set, finished prefixes
    are appended to the file and a rerun resumes from it.  Raises
    ResourceLimit when the predicted pair count exceeds ``budget``.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    workers = workers or 1
    predicted = count_reduced_words(n) * max(comb(n, 4), 1)
    if budget is not None and predicted > budget:
        raise ResourceLimit(
            f"n={n} needs {predicted} word-subset visits, over the budget of {budget}; "
            "raise budget to force the run"
        )
    min_tasks = 8 * workers if (workers > 1 or checkpoint) else 1
    depth = _choose_depth(n, min_tasks)
    done: dict[Word, Fragment] = {}
    if checkpoint and os.path.exists(checkpoint) and os.path.getsize(checkpoint) > 0:
        file_depth, done = load_checkpoint(checkpoint, n)
        depth = file_depth
    prefixes = _prefixes(n, depth)
    pending = [p for p in prefixes if p not in done]

    out = None
    if checkpoint:
        if os.path.exists(checkpoint):
            _drop_torn_tail(checkpoint)
        out = open(checkpoint, "a")
        if os.path.getsize(checkpoint) == 0:
            out.write(f"{CHECKPOINT_MAGIC} n={n} depth={depth}\n")
            out.flush()
    try:
        if workers == 1 or len(pending) <= 1:
            for prefix in pending:
                fragment = _run_prefix(n, prefix)
                done[prefix] = fragment
                if out:
                    _append_fragment(out, n, prefix, fragment)
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = {pool.submit(_run_prefix, n, p): p for p in pending}
                for future in as_completed(futures):
                    prefix = futures[future]
                    fragment = future.result()
                    done[prefix] = fragment
                    if out:
                        _append_fragment(out, n, prefix, fragment)
    finally:
        if out:
            out.close()

    total_words = 0
    class_totals = [0, 0, 0, 0]
    histogram: dict[int, int] = {}
    for prefix in prefixes:  # fixed merge order, independent of completion order
        words, classes, hist = done[prefix]
        total_words += words
        for k in range(4):
            class_totals[k] += classes[k]
        for k, mult in hist.items():
            histogram[k] = histogram.get(k, 0) + mult
    expected = count_reduced_words(n)
    if total_words != expected:
        raise RuntimeError(
            f"enumeration visited {total_words} words for n={n}, hook formula says {expected}"
        )
    class_pairs = dict(zip(CLASS_LABELS, class_totals))
    return PairCountReport(
        n=n,
        total_words=total_words,
        class_pairs=class_pairs,
        histogram=dict(sorted(histogram.items())),
    )


def class_pair_counts(n: int, **kwargs) -> dict[str, int]:
    """Per class (word, 4-subset) pair counts; see exact_probability."""
    return exact_probability(n, **kwargs).class_pairs


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo estimate from uniform (word, 4-subset) trials."""

    n: int
    trials: int
    seed: int
    class_counts: dict[str, int]

    @property
    def reentrant_fraction(self) -> float:
        return self.class_counts["REENTRANT"] / self.trials

    @property
    def stderr(self) -> float:
        p = self.reentrant_fraction
        return sqrt(p * (1.0 - p) / self.trials)


def _mc_chunks(trials: int, workers: int) -> list[tuple[int, int]]:
    per = max(50_000, -(-trials // max(workers * 4, 1)))
    return [(t0, min(t0 + per, trials)) for t0 in range(0, trials, per)]


def monte_carlo_probability(
    n: int, trials: int, seed: int = 0, workers: int | None = None
) -> McEstimate:
    """Estimate the reentrant probability from independent uniform trials.

    Each trial draws a uniform reduced word and a uniform 4-subset from its
    own counter stream, so the result depends only on (n, trials, seed).
    """
    if n < 4:
        raise ValueError(f"need n >= 4 for four point classes, got n={n}")
    if trials < 1:
        raise ValueError("need at least one trial")
    workers = workers or 1
    subsets, _, _, class_table = _subset_arrays(n)
    totals = np.zeros(5, dtype=np.int64)

    def run(span: tuple[int, int]) -> np.ndarray:
        out = np.zeros(5, dtype=np.int64)
        _kernels.mc_class_kernel(n, seed, span[0], span[1], subsets, class_table, out)
        return out

    spans = _mc_chunks(trials, workers)
    if workers == 1 or len(spans) == 1:
        for span in spans:
            totals += run(span)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for out in pool.map(_mc_worker, [(n, seed, span) for span in spans]):
                totals += out
    if totals[4]:
        raise RuntimeError("sampled a word whose restriction was not reduced")
    counts = {label: int(totals[k]) for k, label in enumerate(CLASS_LABELS)}
    return McEstimate(n=n, trials=trials, seed=seed, class_counts=counts)


def _mc_worker(args) -> np.ndarray:
    n, seed, span = args
    subsets, _, _, class_table = _subset_arrays(n)
    out = np.zeros(5, dtype=np.int64)
    _kernels.mc_class_kernel(n, seed, span[0], span[1], subsets, class_table, out)
    return out


def sample_word_counts(
    n: int, draws: int, seed: int = 0, workers: int | None = None
) -> dict[Word, int]:
    """Histogram of ``draws`` exact uniform reduced words, keyed by word.

    Uses the batch sampler; trial t of a given seed always yields the same
    word no matter how draws are chunked.
    """
    if not 2 <= n <= 7:
        raise ValueError(f"word histograms are supported for 2 <= n <= 7, got n={n}")
    workers = workers or 1
    total = word_length(n)
    spans = _mc_chunks(draws, workers)

    def decode(code: int) -> Word:
        return tuple((code >> (3 * (total - 1 - t))) & 7 for t in range(total))

    counts: dict[Word, int] = {}
    if workers == 1 or len(spans) == 1:
        outs = []
        for t0, t1 in spans:
            out = np.zeros(t1 - t0, dtype=np.uint64)
            _kernels.word_codes_kernel(n, seed, t0, t1, out)
            outs.append(out)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outs = list(pool.map(_codes_worker, [(n, seed, span) for span in spans]))
    values, mults = np.unique(np.concatenate(outs), return_counts=True)
    for code, mult in zip(values.tolist(), mults.tolist()):
        counts[decode(code)] = mult
    return counts


def _codes_worker(args) -> np.ndarray:
    n, seed, (t0, t1) = args
    out = np.zeros(t1 - t0, dtype=np.uint64)
    _kernels.word_codes_kernel(n, seed, t0, t1, out)
    return out
