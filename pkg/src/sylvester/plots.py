"""Figure rendering to files for the report paths.

All functions render with the Agg backend and write PNG files; nothing is
shown interactively.
"""

import matplotlib

matplotlib.use("Agg")

from .engine import McEstimate, PairCountReport
from .geometry import SweepHistogram
from .restriction import CLASS_LABELS, is_reentrant
from .words import parse_word

REFERENCE = 0.25
BAR_COLOR = "#4878a8"
HIGHLIGHT = "#c44e52"


def _finish(fig, path: str) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    import matplotlib.pyplot as plt

    plt.close(fig)


def save_report_figure(report: PairCountReport, path: str) -> None:
    """Class pair shares and the per word reentrant count distribution."""
    import matplotlib.pyplot as plt

    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.6))
    total = report.total_pairs or 1
    shares = [report.class_pairs[label] / total for label in CLASS_LABELS]
    colors = [HIGHLIGHT] + [BAR_COLOR] * 3
    left.bar(CLASS_LABELS, shares, color=colors)
    left.axhline(REFERENCE, color="black", linewidth=0.8, linestyle="--")
    left.set_ylabel("share of (word, 4-subset) pairs")
    left.set_title(f"n={report.n}: exact class shares")
    left.tick_params(axis="x", labelsize=8)
    ks = sorted(report.histogram)
    right.bar([str(k) for k in ks], [report.histogram[k] for k in ks], color=BAR_COLOR)
    right.set_xlabel("reentrant 4-subsets per word")
    right.set_ylabel("words")
    right.set_title("per word distribution")
    _finish(fig, path)


def save_mc_figure(est: McEstimate, path: str) -> None:
    """Class frequencies of the Monte Carlo trials with the 1/4 reference."""
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5.5, 3.6))
    fracs = [est.class_counts[label] / est.trials for label in CLASS_LABELS]
    colors = [HIGHLIGHT] + [BAR_COLOR] * 3
    ax.bar(CLASS_LABELS, fracs, color=colors)
    ax.errorbar(
        [0], [est.reentrant_fraction], yerr=[3 * est.stderr],
        fmt="none", ecolor="black", capsize=4,
    )
    ax.axhline(REFERENCE, color="black", linewidth=0.8, linestyle="--")
    ax.set_ylabel("fraction of trials")
    ax.set_title(f"n={est.n}: {est.trials} uniform (word, subset) trials, seed {est.seed}")
    _finish(fig, path)


def save_sweep_figure(hist: SweepHistogram, path: str) -> None:
    """Flip pair bucket frequencies of sweep words; reentrant buckets marked."""
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 3.6))
    keys = sorted(hist.buckets)
    fracs = [hist.buckets[k] / hist.trials for k in keys]
    colors = []
    for k in keys:
        try:
            reentrant = hist.n == 4 and is_reentrant(parse_word(k))
        except ValueError:
            reentrant = False
        colors.append(HIGHLIGHT if reentrant else BAR_COLOR)
    ax.bar(keys, fracs, color=colors)
    ax.set_ylabel("fraction of trials")
    ax.set_xlabel("sweep word flip pair (smaller member)")
    ax.set_title(f"{hist.region}, n={hist.n}, {hist.trials} trials, seed {hist.seed}")
    ax.tick_params(axis="x", rotation=45, labelsize=8)
    _finish(fig, path)
