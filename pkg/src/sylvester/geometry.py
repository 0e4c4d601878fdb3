"""Planar point configurations and their sweep words.

Sweeping a directed line of angle ``line_angle`` counterclockwise through
half a turn, the projections of two points onto the line coincide exactly
once, when the line is perpendicular to their connecting segment.  Ordering
the points by their initial projections and replaying the swaps in event
angle order spells out a reduced word for the longest element of S_n, one
letter per adjacent transposition.  Four points land in the REENTRANT class
exactly when one of them lies inside the triangle of the other three, which
connects the word statistics to the classical four point probability.
"""

from dataclasses import dataclass
from math import atan2, cos, fmod, pi, sin, sqrt
from typing import Iterable, TextIO

from .errors import DegenerateConfiguration, RetriesExhausted
from .restriction import classify, is_reentrant
from .streams import CounterRng
from .words import Word, flip_word, format_word

DEFAULT_TOL = 1e-9
RETRY_CAP = 1000

Point = tuple[float, float]


@dataclass(frozen=True)
class PointConfig:
    """A labeled tuple of planar points."""

    points: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.points)

    def translated(self, dx: float, dy: float) -> "PointConfig":
        return PointConfig(tuple((x + dx, y + dy) for x, y in self.points))

    def scaled(self, factor: float) -> "PointConfig":
        return PointConfig(tuple((x * factor, y * factor) for x, y in self.points))


def read_point_config(source: TextIO | str) -> PointConfig:
    """Parse one ``x y`` pair per line; ``#`` starts a comment."""
    if isinstance(source, str):
        with open(source) as f:
            return read_point_config(f)
    points = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'x y', got {raw.rstrip()!r}")
        points.append((float(parts[0]), float(parts[1])))
    return PointConfig(tuple(points))


def orient2d(a: Point, b: Point, c: Point) -> float:
    """Twice the signed area of triangle abc; positive when counterclockwise."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _pair_angles(points: tuple[Point, ...], line_angle: float) -> list[tuple[float, int, int]]:
    """(event angle in [0, pi), a, b) for every point pair."""
    events = []
    n = len(points)
    for a in range(n):
        for b in range(a + 1, n):
            dx = points[b][0] - points[a][0]
            dy = points[b][1] - points[a][1]
            theta = fmod(atan2(dy, dx) + pi / 2 - line_angle, pi)
            if theta < 0:
                theta += pi
            events.append((theta, a, b))
    return events


def check_general_position(config: PointConfig, tol: float = DEFAULT_TOL) -> None:
    """Raise DegenerateConfiguration on coincident points, collinear triples,
    or two point pairs whose connecting directions agree within ``tol``."""
    pts = config.points
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(pts[i][0] - pts[j][0]) < tol and abs(pts[i][1] - pts[j][1]) < tol:
                raise DegenerateConfiguration(f"points {i + 1} and {j + 1} coincide")
    events = sorted(t for t, _, _ in _pair_angles(pts, 0.0))
    for k in range(1, len(events)):
        if events[k] - events[k - 1] < tol:
            raise DegenerateConfiguration("two point pairs are parallel within tolerance")
    if len(events) > 1 and (events[0] + pi) - events[-1] < tol:
        raise DegenerateConfiguration("two point pairs are parallel within tolerance")
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                area = orient2d(pts[i], pts[j], pts[k])
                span = max(abs(v) for p in (pts[i], pts[j], pts[k]) for v in p)
                if abs(area) < tol * max(span, 1.0) ** 2:
                    raise DegenerateConfiguration(
                        f"points {i + 1}, {j + 1}, {k + 1} are collinear within tolerance"
                    )


def sweep_word(config: PointConfig, line_angle: float = 0.0, tol: float = DEFAULT_TOL) -> Word:
    """The reduced word spelled by sweeping a rotating line over the points.

    Points are labeled 1..n by increasing projection onto the starting line;
    when some pair is already perpendicular to it (event angle below ``tol``),
    labels come from the line backed off by half the gap to the nearest other
    event.  Each event then swaps two adjacent labels; the emitted letter is
    the 1-based position of the swap.
    """
    check_general_position(config, tol)
    pts = config.points
    n = len(pts)
    events = sorted(_pair_angles(pts, line_angle))
    label_angle = line_angle
    if events and events[0][0] < tol:
        later = [t for t, _, _ in events if t >= tol]
        room = [pi - events[-1][0]] + [t for t in later[:1]]
        label_angle = line_angle - 0.5 * min(min(room), pi / 2)
    ux, uy = cos(label_angle), sin(label_angle)
    ranked = sorted(range(n), key=lambda i: pts[i][0] * ux + pts[i][1] * uy)
    pos = [0] * n  # 0-based position of each point along the line
    for position, point in enumerate(ranked):
        pos[point] = position
    letters = []
    for _, a, b in events:
        i, j = pos[a], pos[b]
        if j < i:
            a, b, i, j = b, a, j, i
        if j - i != 1:
            raise DegenerateConfiguration(
                f"points {a + 1} and {b + 1} are not adjacent at their crossing"
            )
        pos[a], pos[b] = j, i
        letters.append(i + 1)
    return tuple(letters)


@dataclass(frozen=True)
class Region:
    """A sampling region; build with the square/disk/triangle/polygon constructors."""

    kind: str
    vertices: tuple[Point, ...] = ()

    @staticmethod
    def square() -> "Region":
        return Region("square")

    @staticmethod
    def disk() -> "Region":
        return Region("disk")

    @staticmethod
    def triangle(a: Point = (0.0, 0.0), b: Point = (1.0, 0.0), c: Point = (0.0, 1.0)) -> "Region":
        return Region("triangle", (a, b, c))

    @staticmethod
    def polygon(vertices: Iterable[Point]) -> "Region":
        vertices = tuple((float(x), float(y)) for x, y in vertices)
        if len(vertices) < 3:
            raise ValueError("polygon needs at least three vertices")
        return Region("polygon", vertices)

    @staticmethod
    def from_name(name: str) -> "Region":
        try:
            return {"square": Region.square, "disk": Region.disk, "triangle": Region.triangle}[name]()
        except KeyError:
            raise ValueError(f"unknown region {name!r}; use square, disk, or triangle") from None

    def sample_point(self, rng: CounterRng) -> Point:
        """One uniform point; draw order is fixed per region kind."""
        if self.kind == "square":
            return rng.random(), rng.random()
        if self.kind == "disk":
            r = sqrt(rng.random())
            angle = 2.0 * pi * rng.random()
            return r * cos(angle), r * sin(angle)
        if self.kind == "triangle":
            (ax, ay), (bx, by), (cx, cy) = self.vertices
            u = rng.random()
            v = rng.random()
            if u + v > 1.0:
                u, v = 1.0 - u, 1.0 - v
            return ax + u * (bx - ax) + v * (cx - ax), ay + u * (by - ay) + v * (cy - ay)
        if self.kind == "polygon":
            xs = [v[0] for v in self.vertices]
            ys = [v[1] for v in self.vertices]
            lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
            for _ in range(RETRY_CAP):
                x = lo_x + (hi_x - lo_x) * rng.random()
                y = lo_y + (hi_y - lo_y) * rng.random()
                if _in_polygon((x, y), self.vertices):
                    return x, y
            raise RetriesExhausted(f"no point accepted in {RETRY_CAP} polygon draws")
        raise ValueError(f"unknown region kind {self.kind!r}")


def _in_polygon(p: Point, vertices: tuple[Point, ...]) -> bool:
    """Even-odd rule ray cast; boundary hits may land either way."""
    x, y = p
    inside = False
    m = len(vertices)
    for i in range(m):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % m]
        if (y1 > y) != (y2 > y) and x < x1 + (y - y1) * (x2 - x1) / (y2 - y1):
            inside = not inside
    return inside


def sample_region(
    region: Region, n: int, rng: CounterRng, tol: float = DEFAULT_TOL
) -> PointConfig:
    """``n`` independent uniform points, redrawn until in general position."""
    for _ in range(100):
        config = PointConfig(tuple(region.sample_point(rng) for _ in range(n)))
        try:
            check_general_position(config, tol)
        except DegenerateConfiguration:
            continue
        return config
    raise RetriesExhausted("could not sample a configuration in general position")


def in_convex_position(config: PointConfig) -> bool:
    """True when no point lies inside the triangle of three others."""
    pts = config.points
    n = len(pts)
    for i in range(n):
        for j in range(n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    if i in (j, k, l):
                        continue
                    if _in_triangle(pts[i], pts[j], pts[k], pts[l]):
                        return False
    return True


def _in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    d1 = orient2d(a, b, p)
    d2 = orient2d(b, c, p)
    d3 = orient2d(c, a, p)
    return (d1 >= 0 and d2 >= 0 and d3 >= 0) or (d1 <= 0 and d2 <= 0 and d3 <= 0)


@dataclass(frozen=True)
class SweepHistogram:
    """Word bucket counts from sweeping random configurations."""

    region: str
    n: int
    trials: int
    seed: int
    buckets: dict[str, int]

    @property
    def reentrant_count(self) -> int:
        from .words import parse_word

        return sum(c for key, c in self.buckets.items() if is_reentrant(parse_word(key)))

    @property
    def reentrant_fraction(self) -> float:
        return self.reentrant_count / self.trials

    @property
    def stderr(self) -> float:
        p = self.reentrant_fraction
        return sqrt(p * (1.0 - p) / self.trials)

    def to_csv(self) -> str:
        lines = ["class_key,count,fraction"]
        for key in sorted(self.buckets):
            count = self.buckets[key]
            lines.append(f"{key},{count},{count / self.trials}")
        return "\n".join(lines) + "\n"


def _bucket_key(n: int, word: Word) -> str:
    """Sweep words come in flip pairs (reversing the sweep direction flips
    every letter), so histograms are kept per unordered flip pair, keyed by
    the lexicographically smaller member."""
    flipped = flip_word(n, word)
    return format_word(n, min(word, flipped))


def sweep_histogram(
    region: Region, trials: int, seed: int = 0, n: int = 4, line_angle: float = 0.0
) -> SweepHistogram:
    """Histogram of sweep word flip pairs over random configurations.

    Trial t draws its configuration from counter stream (seed, t).  For four
    points the reentrant share of the buckets estimates the probability that
    a random quadruple is in non convex position.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    buckets: dict[str, int] = {}
    for t in range(trials):
        config = sample_region(region, n, CounterRng(seed, t))
        word = sweep_word(config, line_angle)
        key = _bucket_key(n, word)
        buckets[key] = buckets.get(key, 0) + 1
    return SweepHistogram(
        region=region.kind, n=n, trials=trials, seed=seed, buckets=dict(sorted(buckets.items()))
    )


@dataclass(frozen=True)
class HullEstimate:
    """Monte Carlo estimate that a random quadruple is in non convex position."""

    region: str
    trials: int
    seed: int
    reentrant_count: int

    @property
    def reentrant_fraction(self) -> float:
        return self.reentrant_count / self.trials

    @property
    def stderr(self) -> float:
        p = self.reentrant_fraction
        return sqrt(p * (1.0 - p) / self.trials)


def sylvester_probability(region: Region, trials: int, seed: int = 0) -> HullEstimate:
    """Classical four point estimate by direct convex position testing.

    Uses the same per trial configurations as ``sweep_histogram`` on the same
    seed, so the two pipelines can be compared configuration by configuration.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    hits = 0
    for t in range(trials):
        config = sample_region(region, 4, CounterRng(seed, t))
        if not in_convex_position(config):
            hits += 1
    return HullEstimate(region=region.kind, trials=trials, seed=seed, reentrant_count=hits)


@dataclass(frozen=True)
class RestrictionEstimate:
    """Reentrant share over all 4-subsets of random n-point sweep words."""

    region: str
    n: int
    trials: int
    seed: int
    reentrant_pairs: int
    total_pairs: int

    @property
    def reentrant_fraction(self) -> float:
        return self.reentrant_pairs / self.total_pairs

    @property
    def stderr(self) -> float:
        p = self.reentrant_fraction
        return sqrt(p * (1.0 - p) / self.total_pairs)


def restriction_probability(
    region: Region, n: int, trials: int, seed: int = 0, line_angle: float = 0.0
) -> RestrictionEstimate:
    """Sweep random n-point configurations and restrict to every 4-subset.

    Estimates the same limit quantity as the word engines, but with words
    weighted by the geometric measure instead of uniformly.
    """
    from math import comb

    from .restriction import reentrant_subset_count

    if n < 4:
        raise ValueError(f"need n >= 4, got n={n}")
    if trials < 1:
        raise ValueError("need at least one trial")
    hits = 0
    for t in range(trials):
        config = sample_region(region, n, CounterRng(seed, t))
        word = sweep_word(config, line_angle)
        hits += reentrant_subset_count(n, word)
    return RestrictionEstimate(
        region=region.kind,
        n=n,
        trials=trials,
        seed=seed,
        reentrant_pairs=hits,
        total_pairs=trials * comb(n, 4),
    )


def classify_config(config: PointConfig, line_angle: float = 0.0) -> str:
    """Class label of a four point configuration's sweep word."""
    if len(config) != 4:
        raise ValueError(f"need exactly four points, got {len(config)}")
    return classify(sweep_word(config, line_angle))
