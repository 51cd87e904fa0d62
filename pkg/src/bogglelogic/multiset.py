"""Repeated-letter boards: types, equivalence classes, solvability.

Boards are grouped by their label multiset, written as a partition of n^2:
type (8,1) means eight 1s and one 2, type (1,...,1) means all labels
distinct. Two boards are equivalent when they carry exactly the same words;
a board is solvable when its equivalence class is exactly its symmetry
orbit, i.e. word lists can still tell it apart from genuinely different
boards.

Classification grades the word-set comparison by length: the length-2
signature splits almost everything, and only groups still holding more than
one symmetry orbit escalate to longer words (up to k_max, default the full
n^2). A group that collapses to a single orbit is finished early: its class
is squeezed between the orbit and the group.
"""

from __future__ import annotations

import hashlib
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .board import Board, word_set
from .errors import InvalidDimensionError, PatternError, ResourceLimitError
from .kinggraph import dihedral_group, path_catalog

_SENTINEL = np.iinfo(np.int64).max


def normalize_partition(parts, n: int = 3) -> tuple[int, ...]:
    """Validate and sort a partition of n^2 (nonincreasing, positive)."""
    lam = tuple(sorted((int(p) for p in parts), reverse=True))
    if not lam or any(p <= 0 for p in lam):
        raise InvalidDimensionError(f"partition parts must be positive: {parts!r}")
    if sum(lam) != n * n:
        raise InvalidDimensionError(f"partition {lam} does not sum to {n * n}")
    return lam


def board_count(lam: tuple[int, ...]) -> int:
    """|B(lam)| = (n^2)! / prod(multiplicities!)."""
    total = math.factorial(sum(lam))
    for p in lam:
        total //= math.factorial(p)
    return total


def _labels_of(lam: tuple[int, ...]) -> list[int]:
    items: list[int] = []
    for label, mult in enumerate(lam, start=1):
        items.extend([label] * mult)
    return sorted(items)


@lru_cache(maxsize=None)
def _grids_for(lam: tuple[int, ...]) -> np.ndarray:
    """All distinct grids of one type, lexicographic, labels 1..len(lam)."""
    items = _labels_of(lam)
    if len(set(items)) == len(items):
        rows = list(itertools.permutations(items))
    else:
        rows = sorted(set(itertools.permutations(items)))
    return np.array(rows, dtype=np.int8)


def enumerate_boards(
    lam, n: int = 3, budget: int = 500_000
) -> Iterator[Board]:
    """Stream every board of the given type exactly once, in grid order."""
    lam = normalize_partition(lam, n)
    if n != 3:
        raise ResourceLimitError(f"type enumeration is 3x3 only (got n={n})")
    if board_count(lam) > budget:
        raise ResourceLimitError(
            f"{board_count(lam)} boards of type {lam} exceed the budget {budget}"
        )
    for row in _grids_for(lam):
        yield Board(n, tuple(int(x) for x in row))


@lru_cache(maxsize=None)
def _paths_array(k: int) -> np.ndarray:
    return np.array(path_catalog(3, 9).paths(k), dtype=np.int64)


@lru_cache(maxsize=None)
def _inverse_cell_maps() -> np.ndarray:
    out = []
    for d in dihedral_group(3):
        inv = np.zeros(9, dtype=np.int64)
        for src, dst in enumerate(d.cell_map):
            inv[dst] = src
        out.append(inv)
    return np.stack(out)


def _canonical_codes(grids: np.ndarray) -> np.ndarray:
    """Per-row minimum 4-bit-packed grid over the 8 symmetry images."""
    powers = (np.int64(16) ** np.arange(8, -1, -1)).astype(np.int64)
    best = None
    for inv in _inverse_cell_maps():
        codes = grids[:, inv].astype(np.int64) @ powers
        best = codes if best is None else np.minimum(best, codes)
    return best


def _set_keys(grids: np.ndarray, rows: np.ndarray, k: int) -> list[bytes]:
    """Length-k word-set fingerprints (exact, not hashed) for chosen rows.

    Words are 4-bit packed label sequences; per-row duplicates (repeated
    labels can spell one word along many paths) are squeezed out so the key
    encodes the word *set*.
    """
    paths = _paths_array(k)
    powers = (np.int64(16) ** np.arange(k - 1, -1, -1)).astype(np.int64)
    keys: list[bytes] = []
    step = max(1, 40_000_000 // (paths.shape[0] * 8))
    for start in range(0, len(rows), step):
        chunk = rows[start : start + step]
        codes = grids[chunk].astype(np.int64)[:, paths] @ powers
        codes.sort(axis=1)
        dup = codes[:, 1:] == codes[:, :-1]
        codes[:, 1:][dup] = _SENTINEL
        codes.sort(axis=1)
        lengths = (codes != _SENTINEL).sum(axis=1)
        for row, ln in zip(codes, lengths):
            keys.append(row[:ln].tobytes())
    return keys


@dataclass(frozen=True)
class ClassSummary:
    """One equivalence class: smallest member, size, orbits inside."""

    representative: tuple
    size: int
    orbit_count: int
    solvable: bool


@dataclass(frozen=True)
class EquivalenceClassReport:
    """Word-set equivalence classes of all boards of one type."""

    lam: tuple[int, ...]
    n: int
    k_max: int
    board_count: int
    class_count: int
    orbit_count: int
    solvable_count: int
    all_solvable: bool
    max_k_used: int
    classes: tuple[ClassSummary, ...]  # capped; sorted by representative grid
    class_cap: int


def classify(
    lam, n: int = 3, k_max: int = 9, class_cap: int = 32
) -> EquivalenceClassReport:
    """Group all boards of a type by word-set equality and score solvability.

    A board is solvable when its class holds a single symmetry orbit;
    ``all_solvable`` answers whether word lists can distinguish every pair
    of genuinely different boards of this type.
    """
    lam = normalize_partition(lam, n)
    if n != 3:
        raise ResourceLimitError(f"classification is 3x3 only (got n={n})")
    if not 2 <= k_max <= 9:
        raise InvalidDimensionError(f"k_max must be in 2..9, got {k_max}")
    grids = _grids_for(lam)
    total = len(grids)
    canon = _canonical_codes(grids)
    orbit_count = int(np.unique(canon).size)

    gid = np.zeros(total, dtype=np.int64)
    open_ids = {0}
    group_orbits = {0: orbit_count}
    max_k_used = 0
    for k in range(2, k_max + 1):
        if not open_ids:
            break
        max_k_used = k
        rows = np.flatnonzero(np.isin(gid, np.fromiter(open_ids, dtype=np.int64)))
        keys = _set_keys(grids, rows, k)
        lookup: dict[tuple[int, bytes], int] = {}
        base = int(gid.max()) + 1
        for row, key in zip(rows, keys):
            pair = (int(gid[row]), key)
            new = lookup.setdefault(pair, base + len(lookup))
            gid[row] = new
        # orbits per refreshed group
        open_ids = set()
        pairs = np.unique(np.stack([gid[rows], canon[rows]], axis=1), axis=0)
        counts = dict(zip(*np.unique(pairs[:, 0], return_counts=True)))
        for g, c in counts.items():
            group_orbits[int(g)] = int(c)
            if c > 1 and k < k_max:
                open_ids.add(int(g))

    unique_gids, first_rows, sizes = np.unique(gid, return_index=True, return_counts=True)
    class_count = len(unique_gids)
    solvable_count = 0
    summaries = []
    for g, first, size in zip(unique_gids, first_rows, sizes):
        orbits = group_orbits[int(g)]
        solvable = orbits == 1
        if solvable:
            solvable_count += int(size)
        summaries.append(
            ClassSummary(tuple(int(x) for x in grids[first]), int(size), orbits, solvable)
        )
    summaries.sort(key=lambda s: s.representative)
    return EquivalenceClassReport(
        lam=lam,
        n=n,
        k_max=k_max,
        board_count=total,
        class_count=class_count,
        orbit_count=orbit_count,
        solvable_count=solvable_count,
        all_solvable=solvable_count == total,
        max_k_used=max_k_used,
        classes=tuple(summaries[:class_cap]),
        class_cap=class_cap,
    )


def word_signature(board: Board, k_max: int | None = None) -> bytes:
    """Digest of a board's word sets, graded by length.

    Equal word sets give equal digests; distinct sets collide only if
    blake2b does. Useful as a dictionary key when comparing boards of
    arbitrary label types.
    """
    if k_max is None:
        k_max = board.n * board.n
    h = hashlib.blake2b(digest_size=16)
    h.update(f"{board.n}:{k_max}".encode())
    for k in range(2, k_max + 1):
        block = sorted(",".join(str(x) for x in w) for w in word_set(board, k, k))
        h.update(f"|{k}|".encode())
        h.update(";".join(block).encode())
    return h.digest()


def parse_pattern(pattern: str) -> tuple:
    """Parse a template like '1-x-1' into labels and None wildcards."""
    tokens = pattern.strip().split("-")
    if not 2 <= len(tokens) <= 4:
        raise PatternError(f"pattern must have 2..4 positions: {pattern!r}")
    out = []
    for t in tokens:
        t = t.strip()
        if t in ("x", "?", "*"):
            out.append(None)
        elif t.isdigit():
            out.append(int(t))
        elif len(t) == 1 and t.isalpha():
            out.append(t)
        else:
            raise PatternError(f"bad pattern token {t!r} in {pattern!r}")
    return tuple(out)


def pattern_count(board: Board, pattern: str | tuple) -> int:
    """Distinct words matching a wildcard template, e.g. '1-x-1'.

    Fixed positions must equal the template label; wildcards match any
    label. Counts words (distinct label sequences), not paths.
    """
    tokens = parse_pattern(pattern) if isinstance(pattern, str) else tuple(pattern)
    k = len(tokens)
    grid = board.grid
    found = set()
    for p in path_catalog(board.n, k).paths(k):
        w = tuple(grid[c] for c in p)
        if all(t is None or t == x for t, x in zip(tokens, w)):
            found.add(w)
    return len(found)
