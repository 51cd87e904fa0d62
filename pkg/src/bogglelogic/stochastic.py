"""Probabilistic reconstruction: words needed to pin down a board.

How many random words from a played game determine the board? For
two-letter words on 3x3 the answer is exact: a two-letter word carries the
same fact as its reversal, so the universe is the 20 edges and every
m-subset count comes from the census table. For longer words the module
runs seeded Monte Carlo: draw words uniformly without replacement from the
board's own length-k word set and stop when the accumulated list first
becomes a puzzle.

Conventions: two-letter draws are deduplicated by reversal (20 possible
words); longer words are drawn as directed sequences (160 possible at
k = 3), matching how the word counts 137/160 are stated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .board import Board, standard_board, word_set
from .census import mask_of_edges, puzzle_counts_by_size, puzzle_table, subset_counts_total
from .errors import InvalidDimensionError, ResourceLimitError

Z95 = 1.959963984540054  # two-sided 95% normal quantile


@dataclass(frozen=True)
class SamplingConfig:
    """Reproducible sampling setup; the seed fully determines the stream."""

    n: int = 3
    k: int = 2
    seed: int = 0
    trials: int = 1000
    model: str = "uniform-without-replacement"

    def __post_init__(self):
        if self.trials < 1:
            raise InvalidDimensionError("trials must be >= 1")
        if self.k < 2:
            raise InvalidDimensionError("word length must be >= 2")


@dataclass(frozen=True)
class EstimateReport:
    """Mean/median words-to-unique and the probability curve P(unique | m)."""

    n: int
    k: int
    mean_estimate: float
    median_m: int
    probability_curve: dict[int, float]
    ci_halfwidth: float
    exact: bool
    stopping_counts: tuple[int, ...] = field(default=(), repr=False)


@dataclass(frozen=True)
class ProbabilityEstimate:
    """P(random m-subset is a puzzle) with a 95% Wilson interval."""

    m: int
    probability: float
    low: float
    high: float
    trials: int
    exact: bool = False


def exact_two_letter_curve(n: int = 3) -> EstimateReport:
    """Exact reconstruction curve for two-letter words on the 3x3 board.

    probability_curve[m] is the fraction of m-edge subsets that are puzzles;
    the median is the first m at or past 50%, and the mean is the expected
    number of distinct two-letter words drawn until the set first pins the
    board (sum of the miss probabilities).
    """
    if n != 3:
        raise ResourceLimitError(f"exact curve needs the n=3 census (got n={n})")
    puzzles = puzzle_counts_by_size(3)
    totals = subset_counts_total()
    curve = {m: puzzles[m] / totals[m] for m in range(21)}
    median_m = next(m for m in range(21) if curve[m] >= 0.5)
    mean = float(sum(1.0 - curve[m] for m in range(21)))
    return EstimateReport(3, 2, mean, median_m, curve, 0.0, True)


def sampling_universe(board: Board, k: int) -> tuple[tuple, ...]:
    """The word pool for draws: length-k words, reversal-deduped when k=2."""
    words = word_set(board, k, k)
    if k == 2:
        words = {min(w, w[::-1]) for w in words}
    return tuple(sorted(words))


def _edge_mask_steps(board: Board, words: list[tuple]) -> list[int]:
    """Cumulative adjacency-graph masks as words are revealed one by one."""
    cell_of = {label: i for i, label in enumerate(board.grid)}
    masks = []
    mask = 0
    for w in words:
        cells = [cell_of[x] for x in w]
        mask |= mask_of_edges(list(zip(cells, cells[1:])))
        masks.append(mask)
    return masks


def monte_carlo_words_to_unique(
    cfg: SamplingConfig, board: Board | None = None
) -> EstimateReport:
    """Words-to-unique distribution by seeded simulation.

    Each trial shuffles the word pool with its own (seed, trial) stream,
    reveals words one at a time, and records the first count at which the
    list becomes a puzzle. Identical configs reproduce identical reports.
    """
    if board is None:
        board = standard_board(cfg.n)
    if board.n != 3:
        raise ResourceLimitError("words-to-unique needs the n=3 census table")
    table = puzzle_table()
    universe = sampling_universe(board, cfg.k)
    stops = []
    for t in range(cfg.trials):
        rng = np.random.default_rng([cfg.seed, t])
        order = [universe[i] for i in rng.permutation(len(universe))]
        for count, mask in enumerate(_edge_mask_steps(board, order), start=1):
            if table[mask]:
                stops.append(count)
                break
        else:
            raise AssertionError("the full word set always determines the board")
    arr = np.array(stops, dtype=float)
    mean = float(arr.mean())
    ci = float(Z95 * arr.std(ddof=1) / math.sqrt(len(arr))) if len(arr) > 1 else 0.0
    curve = {m: float((arr <= m).mean()) for m in range(int(arr.min()), int(arr.max()) + 1)}
    median_m = next(m for m in sorted(curve) if curve[m] >= 0.5)
    return EstimateReport(
        cfg.n, cfg.k, mean, median_m, curve, ci, False, tuple(stops)
    )


def wilson_interval(successes: int, trials: int, z: float = Z95) -> tuple[float, float]:
    """95% Wilson score interval; well behaved at 0 and 1."""
    if trials == 0:
        return (0.0, 1.0)
    p = successes / trials
    denom = 1 + z * z / trials
    center = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom
    return (max(0.0, center - half), min(1.0, center + half))


def probability_at(
    cfg: SamplingConfig, m: int, board: Board | None = None
) -> ProbabilityEstimate:
    """Estimate P(a uniform m-subset of the word pool is a puzzle).

    Exhaustively exact at the boundaries (m = 0 and the full pool); Monte
    Carlo with a Wilson interval in between.
    """
    if board is None:
        board = standard_board(cfg.n)
    if board.n != 3:
        raise ResourceLimitError("subset probability needs the n=3 census table")
    universe = sampling_universe(board, cfg.k)
    if not 0 <= m <= len(universe):
        raise InvalidDimensionError(f"m must be in 0..{len(universe)}, got {m}")
    table = puzzle_table()
    if m == len(universe):
        return ProbabilityEstimate(m, 1.0, 1.0, 1.0, 0, exact=True)
    if m == 0:
        return ProbabilityEstimate(m, 0.0, 0.0, 0.0, 0, exact=True)
    hits = 0
    for t in range(cfg.trials):
        rng = np.random.default_rng([cfg.seed, t])
        picks = rng.choice(len(universe), size=m, replace=False)
        words = [universe[i] for i in picks]
        mask = _edge_mask_steps(board, words)[-1]
        if table[mask]:
            hits += 1
    low, high = wilson_interval(hits, cfg.trials)
    return ProbabilityEstimate(m, hits / cfg.trials, low, high, cfg.trials)
