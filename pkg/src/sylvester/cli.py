"""Command line interface.

Subcommands: count, exact, sample, restrict, classify, geometry.  Reports
writable with --out are CSV; unless --no-plot is given, a PNG figure with the
same stem is rendered next to each CSV.  Exit codes: 0 on success, 2 on
usage errors, 3 on runtime failures such as resource limits, checkpoint
mismatches, or degenerate geometry.
"""

import argparse
import os
import sys

from .engine import DEFAULT_BUDGET
from .errors import SylvesterError
from .words import count_reduced_words, format_word, parse_word


def _workers_default() -> int:
    env = os.environ.get("SYLVESTER_WORKERS", "")
    return int(env) if env else 1


def _write_csv(path: str, text: str) -> None:
    with open(path, "w") as f:
        f.write(text)


def _figure_path(out: str) -> str:
    stem, _ = os.path.splitext(out)
    return stem + ".png"


def _class_line(n: int, word) -> str:
    from .restriction import classify, is_reentrant

    label = classify(word)
    flag = "true" if is_reentrant(word) else "false"
    return f"{format_word(n, word)} class={label} reentrant={flag}"


def cmd_count(args) -> int:
    print(count_reduced_words(args.n))
    return 0


def cmd_exact(args) -> int:
    from .engine import exact_probability, report_to_csv

    report = exact_probability(
        args.n,
        workers=args.workers,
        checkpoint=args.checkpoint,
        budget=None if args.budget == 0 else args.budget,
    )
    p = report.probability
    print(
        f"n={report.n} total_words={report.total_words} total_pairs={report.total_pairs} "
        f"reentrant_pairs={report.reentrant_pairs}"
    )
    for label, pairs in report.class_pairs.items():
        print(f"{label}\t{pairs}")
    value = float(p) if report.total_pairs else 0.0
    print(f"probability = {p.numerator}/{p.denominator} = {value:.6f}")
    if args.out:
        _write_csv(args.out, report_to_csv(report))
        if not args.no_plot:
            from .plots import save_report_figure

            save_report_figure(report, _figure_path(args.out))
    return 0


def cmd_sample(args) -> int:
    from .engine import monte_carlo_probability

    est = monte_carlo_probability(args.n, args.trials, seed=args.seed, workers=args.workers)
    print(
        f"n={est.n} trials={est.trials} seed={est.seed} "
        f"reentrant_fraction={est.reentrant_fraction:.6f} stderr={est.stderr:.6f}"
    )
    if args.out:
        rows = ["class_key,count,fraction"]
        for label, count in est.class_counts.items():
            rows.append(f"{label},{count},{count / est.trials}")
        _write_csv(args.out, "\n".join(rows) + "\n")
        if not args.no_plot:
            from .plots import save_mc_figure

            save_mc_figure(est, _figure_path(args.out))
    return 0


def cmd_restrict(args) -> int:
    from .restriction import restrict

    word = parse_word(args.word)
    subset = sorted(int(v) for v in args.subset.split(","))
    restricted = restrict(args.n, word, subset)
    k = len(subset)
    if k == 4:
        print(_class_line(k, restricted))
    else:
        print(format_word(k, restricted))
    return 0


def cmd_classify(args) -> int:
    word = parse_word(args.word)
    print(_class_line(4, word))
    return 0


def cmd_geometry(args) -> int:
    from .geometry import (
        Region,
        read_point_config,
        sweep_histogram,
        sweep_word,
        sylvester_probability,
    )

    if args.points:
        config = read_point_config(args.points)
        word = sweep_word(config, line_angle=args.line_angle)
        n = len(config)
        if n == 4:
            print(_class_line(n, word))
        else:
            print(format_word(n, word))
        return 0
    if not args.region:
        raise ValueError("geometry needs --points or --region")
    region = Region.from_name(args.region)
    if args.method == "hull":
        est = sylvester_probability(region, args.trials, seed=args.seed)
        print(
            f"region={est.region} trials={est.trials} seed={est.seed} "
            f"reentrant_fraction={est.reentrant_fraction:.6f} stderr={est.stderr:.6f}"
        )
        if args.out:
            convex = est.trials - est.reentrant_count
            rows = [
                "class_key,count,fraction",
                f"CONVEX,{convex},{convex / est.trials}",
                f"REENTRANT,{est.reentrant_count},{est.reentrant_count / est.trials}",
            ]
            _write_csv(args.out, "\n".join(rows) + "\n")
        return 0
    hist = sweep_histogram(
        region, args.trials, seed=args.seed, n=args.n, line_angle=args.line_angle
    )
    summary = f"region={hist.region} n={hist.n} trials={hist.trials} seed={hist.seed}"
    if hist.n == 4:
        summary += f" reentrant_fraction={hist.reentrant_fraction:.6f} stderr={hist.stderr:.6f}"
    print(summary)
    if args.out:
        _write_csv(args.out, hist.to_csv())
        if not args.no_plot:
            from .plots import save_sweep_figure

            save_sweep_figure(hist, _figure_path(args.out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylvester",
        description="Reduced word enumeration, quadruple classes, and sweep words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of reduced words for the longest element")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("exact", help="exact class counts over all (word, 4-subset) pairs")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--workers", type=int, default=_workers_default())
    p.add_argument("--checkpoint", help="append finished prefixes here and resume from it")
    p.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="work budget in word-subset visits; 0 disables the limit",
    )
    p.add_argument("--out", help="write the report CSV here")
    p.add_argument("--no-plot", action="store_true", help="skip the PNG next to --out")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("sample", help="Monte Carlo estimate from uniform words and subsets")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=_workers_default())
    p.add_argument("--out", help="write the class histogram CSV here")
    p.add_argument("--no-plot", action="store_true")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("restrict", help="restrict a reduced word to a wire subset")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--subset", required=True, help="comma separated wire labels, e.g. 1,3,4,5")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("classify", help="class of a reduced word for the longest element of S_4")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("geometry", help="sweep words of planar point sets")
    p.add_argument("--points", help="file with one 'x y' point per line")
    p.add_argument("--region", help="square, disk, or triangle")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-n", type=int, default=4)
    p.add_argument("--line-angle", type=float, default=0.0)
    p.add_argument("--method", choices=("sweep", "hull"), default="sweep")
    p.add_argument("--out", help="write the bucket histogram CSV here")
    p.add_argument("--no-plot", action="store_true")
    p.set_defaults(func=cmd_geometry)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SylvesterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
