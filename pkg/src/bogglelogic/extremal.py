"""Word overlap between boards and extremal overlap searches.

How many words can two different boards share? The exhaustive answer for
3x3 gives the reconstruction guarantee: if a board's word list is longer
than the best possible overlap with an impostor, the board is determined.
The scan walks all 9! label placements (one representative per symmetry
class, 45,360 of them) with vectorized word-code membership tests.

For n >= 4 the 16! scan is out of reach; targeted searches (all label
transpositions, corner/side swaps, seeded local search) give heuristic
lower bounds, reported as such.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .board import Board, canonical_board, standard_board, word_set
from .errors import InvalidComparisonError, ResourceLimitError
from .kinggraph import dihedral_group, path_catalog

STRATEGIES = ("transpositions", "corner-side-swaps", "local-search")


@dataclass(frozen=True)
class OverlapResult:
    """A candidate board and its shared-word count with the reference."""

    board: Board
    common_count: int
    k: int
    strategy: str | None = None


@dataclass(frozen=True)
class ExhaustiveScan:
    """Outcome of the full 9! overlap maximization."""

    reference: Board
    k: int
    max_common: int
    threshold: int  # max_common + 1 words guarantee reconstruction
    maximizers: tuple[OverlapResult, ...]  # canonical, outside the reference orbit
    classes_visited: int


@dataclass(frozen=True)
class Threshold:
    """A word-count guarantee; exact only when backed by the full scan."""

    n: int
    k: int
    value: int
    exact: bool


def overlap(b1: Board, b2: Board, k: int) -> int:
    """Number of length-k words the two boards share (directed words)."""
    if b1.n != b2.n:
        raise InvalidComparisonError(f"board sizes differ: {b1.n} vs {b2.n}")
    return len(word_set(b1, k, k) & word_set(b2, k, k))


@lru_cache(maxsize=None)
def _perm_grids() -> np.ndarray:
    """All 9! grids over labels 1..9, lexicographic, as int8 rows."""
    return np.array(
        list(itertools.permutations(range(1, 10))), dtype=np.int8
    )


@lru_cache(maxsize=None)
def _inverse_cell_maps(n: int) -> np.ndarray:
    """Row per symmetry: grid[inv_map] is the moved grid."""
    out = []
    for d in dihedral_group(n):
        inv = np.zeros(n * n, dtype=np.int64)
        for src, dst in enumerate(d.cell_map):
            inv[dst] = src
        out.append(inv)
    return np.stack(out)


def _grid_codes(grids: np.ndarray, n: int) -> np.ndarray:
    base = n * n
    powers = (base ** np.arange(base - 1, -1, -1)).astype(np.int64)
    return grids.astype(np.int64) @ powers


def _canonical_codes(grids: np.ndarray, n: int) -> np.ndarray:
    """Minimum grid code over the 8 symmetry images, per row."""
    best = None
    for inv in _inverse_cell_maps(n):
        codes = _grid_codes(grids[:, inv], n)
        best = codes if best is None else np.minimum(best, codes)
    return best


@lru_cache(maxsize=None)
def _paths_array(n: int, k: int) -> np.ndarray:
    return np.array(path_catalog(n, k).paths(k), dtype=np.int64)


def _word_codes(grids: np.ndarray, paths: np.ndarray) -> np.ndarray:
    """Base-10 packed label sequences for every path, per grid row."""
    k = paths.shape[1]
    powers = (10 ** np.arange(k - 1, -1, -1)).astype(np.int64)
    return grids.astype(np.int64)[:, paths] @ powers


def _int_grid(board: Board) -> np.ndarray:
    grid = np.asarray(board.grid)
    if not np.issubdtype(grid.dtype, np.integer):
        raise InvalidComparisonError("exhaustive scans need integer-labeled boards")
    return grid.astype(np.int64)


def max_overlap_exhaustive(
    reference: Board | None = None,
    k: int = 3,
    chunk: int = 30_000,
) -> ExhaustiveScan:
    """Scan all 9! boards for the ones sharing the most k-words with the reference.

    Visits one representative per symmetry class (their count is reported and
    is always 45,360), excludes the reference's own class, and returns every
    maximizer as a canonical board. The guarantee threshold is max + 1.
    """
    if reference is None:
        reference = standard_board(3)
    if reference.n != 3:
        raise ResourceLimitError(f"exhaustive scan is 3x3 only (got n={reference.n}); 16! boards is out of reach")
    if not 2 <= k <= 9:
        raise InvalidComparisonError(f"word length must be in 2..9, got {k}")
    ref_grid = _int_grid(reference)
    paths = _paths_array(3, k)
    ref_codes = _word_codes(ref_grid[None, :], paths)[0]
    if k <= 6:
        table = np.zeros(10**k, dtype=bool)
        table[ref_codes] = True
        membership = lambda codes: table[codes]
    else:
        sorted_ref = np.sort(ref_codes)  # 10^k lookup table would not fit
        membership = lambda codes: sorted_ref[
            np.clip(np.searchsorted(sorted_ref, codes), 0, len(sorted_ref) - 1)
        ] == codes
    ref_canon = int(_canonical_codes(ref_grid[None, :], 3)[0])

    grids = _perm_grids()
    best = -1
    best_rows: list[np.ndarray] = []
    visited = 0
    for start in range(0, len(grids), chunk):
        g = grids[start : start + chunk]
        canon = _canonical_codes(g, 3)
        own = _grid_codes(g, 3)
        keep = canon == own  # one representative per symmetry class
        g = g[keep]
        canon = canon[keep]
        visited += len(g)
        if not len(g):
            continue
        common = membership(_word_codes(g, paths)).sum(axis=1)
        common[canon == ref_canon] = -1  # the reference's own class
        top = int(common.max(initial=-1))
        if top > best:
            best = top
            best_rows = [g[common == top]]
        elif top == best:
            best_rows.append(g[common == top])

    maximizers = tuple(
        OverlapResult(canonical_board(Board(3, tuple(int(x) for x in row))), best, k)
        for row in np.concatenate(best_rows)
    )
    return ExhaustiveScan(
        reference=reference,
        k=k,
        max_common=best,
        threshold=best + 1,
        maximizers=maximizers,
        classes_visited=visited,
    )


def guarantee_threshold(n: int = 3, k: int = 3) -> Threshold:
    """Fewest words that force a unique board, for length-k word lists.

    Exact for n = 3 via the exhaustive scan. Two-letter words are counted up
    to reversal (both directions carry the same fact), so the k = 2 value is
    max shared edges + 1. For n >= 4 the value is a heuristic lower bound
    from the transposition search.
    """
    if n == 3:
        scan = max_overlap_exhaustive(standard_board(3), k)
        if k == 2:
            return Threshold(n, k, scan.max_common // 2 + 1, True)
        return Threshold(n, k, scan.threshold, True)
    results = overlap_search(standard_board(n), k, "transpositions")
    return Threshold(n, k, results[0].common_count + 1, False)


def _corner_side_pairs(board: Board) -> list[tuple]:
    """Label pairs (corner, orthogonally adjacent boundary cell)."""
    n = board.n
    last = n - 1
    pairs = []
    for r, c in ((0, 0), (0, last), (last, 0), (last, last)):
        for dr, dc in ((0, 1), (0, -1), (1, 0), (-1, 0)):
            r2, c2 = r + dr, c + dc
            if 0 <= r2 < n and 0 <= c2 < n:
                pairs.append((board.label_at(r, c), board.label_at(r2, c2)))
    return pairs


def _swap(board: Board, a, b) -> Board:
    grid = tuple(b if x == a else a if x == b else x for x in board.grid)
    return Board(board.n, grid)


def overlap_search(
    reference: Board,
    k: int,
    strategy: str = "transpositions",
    seed: int = 0,
    restarts: int = 8,
) -> list[OverlapResult]:
    """Best-overlap candidates from one search strategy, sorted descending.

    transpositions      all label-pair swaps of the reference
    corner-side-swaps   only corner labels swapped with adjacent side labels
    local-search        steepest ascent over swaps from seeded random starts

    Heuristic for n >= 4: these are lower bounds, not proven maxima.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; pick one of {STRATEGIES}")
    ref_words = word_set(reference, k, k)

    def common(b: Board) -> int:
        return len(ref_words & word_set(b, k, k))

    results: list[OverlapResult] = []
    if strategy == "transpositions":
        for a, b in itertools.combinations(sorted(set(reference.grid), key=str), 2):
            cand = _swap(reference, a, b)
            results.append(OverlapResult(cand, common(cand), k, strategy))
    elif strategy == "corner-side-swaps":
        for a, b in _corner_side_pairs(reference):
            cand = _swap(reference, a, b)
            results.append(OverlapResult(cand, common(cand), k, strategy))
    else:
        rng = np.random.default_rng(seed)
        labels = sorted(set(reference.grid), key=str)
        seen = set()
        for _ in range(restarts):
            grid = tuple(rng.permutation(np.array(reference.grid)).tolist())
            cur = Board(reference.n, grid)
            cur_common = common(cur)
            improved = True
            while improved:
                improved = False
                for a, b in itertools.combinations(labels, 2):
                    cand = _swap(cur, a, b)
                    c = common(cand)
                    if c > cur_common and cand.grid != reference.grid:
                        cur, cur_common, improved = cand, c, True
            if cur.grid not in seen and cur.grid != reference.grid:
                seen.add(cur.grid)
                results.append(OverlapResult(cur, cur_common, k, strategy))
    results.sort(key=lambda r: (-r.common_count, tuple(str(x) for x in r.board.grid)))
    return results
