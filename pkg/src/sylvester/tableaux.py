"""Staircase standard tableaux and the word bijection.

Reduced words for the longest element of S_n biject with standard Young
tableaux of staircase shape (n-1, n-2, ..., 1) via Coxeter-Knuth insertion:
the word maps to the recording tableau, and the insertion tableau is always
the superstandard one whose cell (i, j) holds i + j - 1 (1-based).  Uniform
tableaux come from the greedy hook walk, so composing the two gives exact
uniform sampling of reduced words.
"""

from bisect import bisect_right
from dataclasses import dataclass

from .errors import MalformedTableau
from .streams import CounterRng
from .words import Word, word_length

Shape = tuple[int, ...]


def staircase_shape(n: int) -> Shape:
    return tuple(range(n - 1, 0, -1))


def hook_lengths(n: int) -> tuple[tuple[int, ...], ...]:
    """Hook lengths of the staircase shape; every one is odd.

    >>> hook_lengths(4)
    ((5, 3, 1), (3, 1), (1,))
    """
    return tuple(
        tuple(2 * (n - 2 - i - j) + 1 for j in range(n - 1 - i))
        for i in range(n - 1)
    )


@dataclass(frozen=True)
class StaircaseTableau:
    """A filling of the staircase shape by ``rows`` of 1-based entries."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        """Raise MalformedTableau unless this is a standard staircase tableau."""
        n = self.n
        shape = staircase_shape(n)
        if tuple(len(r) for r in self.rows) != shape:
            raise MalformedTableau(
                f"shape {tuple(len(r) for r in self.rows)} is not the staircase for n={n}"
            )
        total = word_length(n)
        seen = sorted(v for row in self.rows for v in row)
        if seen != list(range(1, total + 1)):
            raise MalformedTableau(f"entries are not a permutation of 1..{total}")
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise MalformedTableau(f"row {row} is not increasing")
        for i in range(len(self.rows) - 1):
            upper, lower = self.rows[i], self.rows[i + 1]
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise MalformedTableau(f"column through rows {i} and {i + 1} is not increasing")

    def position_of(self, value: int) -> tuple[int, int]:
        """0-based (row, column) of ``value``."""
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if v == value:
                    return i, j
        raise KeyError(value)


def sample_tableau(n: int, rng: CounterRng) -> StaircaseTableau:
    """Draw a uniform standard staircase tableau by the greedy hook walk.

    Values are placed largest first.  Each round starts at a uniformly random
    remaining cell and repeatedly jumps to a uniformly random other cell of
    the current hook until it rests at a corner, which receives the value.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    rowlen = list(staircase_shape(n))
    depth = len(rowlen)
    grid = [[0] * rowlen[i] for i in range(depth)]
    for value in range(word_length(n), 0, -1):
        r = rng.randbelow(value)
        i = 0
        while r >= rowlen[i]:
            r -= rowlen[i]
            i += 1
        j = r
        while True:
            arm = rowlen[i] - 1 - j
            leg = 0
            while i + 1 + leg < depth and rowlen[i + 1 + leg] > j:
                leg += 1
            if arm == 0 and leg == 0:
                break
            t = rng.randbelow(arm + leg)
            if t < arm:
                j += 1 + t
            else:
                i += 1 + (t - arm)
        grid[i][j] = value
        rowlen[i] -= 1
    return StaircaseTableau(n, tuple(tuple(row) for row in grid))


def _insert(n: int, word: Word) -> tuple[list[list[int]], list[list[int]]]:
    """Coxeter-Knuth insertion; returns (insertion rows, recording rows)."""
    ins: list[list[int]] = []
    rec: list[list[int]] = []
    for time, letter in enumerate(word, start=1):
        if not 1 <= letter <= n - 1:
            raise ValueError(f"letter {letter} out of range for n={n}")
        x = letter
        q = 0
        while True:
            if q == len(ins):
                ins.append([x])
                rec.append([time])
                break
            row = ins[q]
            if x > row[-1]:
                row.append(x)
                rec[q].append(time)
                break
            idx = bisect_right(row, x)
            if idx == len(row):
                # x equals the row maximum with nothing to bump
                raise ValueError(f"word is not reduced at position {time}")
            y = row[idx]
            if y == x + 1 and idx > 0 and row[idx - 1] == x:
                x = y  # row already holds x and x + 1; pass x + 1 down unchanged
            else:
                row[idx] = x
                x = y
            q += 1
    return ins, rec


def word_to_tableau(n: int, word: Word) -> StaircaseTableau:
    """Recording tableau of the word under Coxeter-Knuth insertion.

    For reduced words for the longest element this is a bijection onto
    standard staircase tableaux, inverted by ``tableau_to_word``.
    """
    if len(word) != word_length(n):
        raise ValueError(f"expected {word_length(n)} letters, got {len(word)}")
    ins, rec = _insert(n, word)
    tableau = StaircaseTableau(n, tuple(tuple(row) for row in rec))
    tableau.validate()
    return tableau


def tableau_to_word(tableau: StaircaseTableau) -> Word:
    """Invert ``word_to_tableau`` by reverse insertion, largest entry first.

    The insertion tableau of any reduced word for the longest element is the
    superstandard staircase filling, so reverse bumping starts from it.  Each
    round pops the cell holding the current largest recording entry and walks
    back up; the value leaving the top row is the recovered letter.
    """
    tableau.validate()
    n = tableau.n
    total = word_length(n)
    rowlen = list(staircase_shape(n))
    ins = [[i + j + 1 for j in range(rowlen[i])] for i in range(len(rowlen))]
    pos = [(0, 0)] * (total + 1)
    for i, row in enumerate(tableau.rows):
        for j, v in enumerate(row):
            pos[v] = (i, j)
    letters = [0] * total
    for k in range(total, 0, -1):
        r, c = pos[k]
        if c != rowlen[r] - 1 or (r + 1 < len(rowlen) and rowlen[r + 1] > c):
            raise MalformedTableau(f"entry {k} is not at a removable corner")
        y = ins[r][c]
        rowlen[r] -= 1
        for q in range(r - 1, -1, -1):
            row = ins[q]
            length = rowlen[q]
            idx = bisect_right(row, y - 1, 0, length) - 1
            if idx < 0:
                raise MalformedTableau(f"reverse bump of {y} failed in row {q}")
            if idx + 1 < length and row[idx + 1] == y:
                if row[idx] != y - 1:
                    raise MalformedTableau(f"reverse bump of {y} failed in row {q}")
                y = y - 1  # row holds y - 1 and y; pass y - 1 up unchanged
            else:
                y, row[idx] = row[idx], y
        letters[k - 1] = y
    return tuple(letters)


def sample_uniform_word(n: int, rng: CounterRng) -> Word:
    """Exactly uniform reduced word for the longest element."""
    return tableau_to_word(sample_tableau(n, rng))
