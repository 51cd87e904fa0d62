"""Exhaustive census of two-letter-word puzzles on the 3x3 board.

A list of two-letter words is, up to reversal, a subset of the 20 king-graph
edges, so the whole universe is the 2^20 edge subsets. This module classifies
every subset as puzzle / non-puzzle once (memoized over the 131k symmetry
classes of subsets) and derives from that table:

* the minimal census: every edge-minimal puzzle, deduplicated both by
  placement symmetry and by abstract graph isomorphism,
* the global minimum number of two-letter words a puzzle needs, and
* exact counts of how many m-edge subsets are puzzles, for the exact
  reconstruction-probability curve.

Everything here is specific to n = 3; the 4x4 universe (2^42) is out of
reach and rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .board import Board, standard_board
from .errors import ResourceLimitError
from .graphs import canonical_form
from .kinggraph import build_king_graph, dihedral_group, neighbor_masks

K3_EDGES: tuple[tuple[int, int], ...] = tuple(build_king_graph(3))
_EDGE_INDEX = {e: i for i, e in enumerate(K3_EDGES)}
_HOST_MASKS = neighbor_masks(3)
_HOST_DEGS = tuple(m.bit_count() for m in _HOST_MASKS)


def _require_n3(n: int) -> None:
    if n != 3:
        raise ResourceLimitError(
            f"the two-letter census is exhaustive only for n=3 (got n={n}); "
            "a 4x4 board has 2^42 edge subsets"
        )


@lru_cache(maxsize=None)
def _edge_perms() -> tuple[tuple[int, ...], ...]:
    """How each square symmetry permutes the 20 edge indices."""
    out = []
    for d in dihedral_group(3):
        p = [0] * len(K3_EDGES)
        for i, (a, b) in enumerate(K3_EDGES):
            a2, b2 = d.cell_map[a], d.cell_map[b]
            p[i] = _EDGE_INDEX[(min(a2, b2), max(a2, b2))]
        out.append(tuple(p))
    return tuple(out)


@lru_cache(maxsize=None)
def canonical_mask_table() -> np.ndarray:
    """Symmetry-canonical representative (minimum image) for every mask."""
    masks = np.arange(1 << 20, dtype=np.uint32)
    canon = masks.copy()
    for p in _edge_perms()[1:]:
        img = np.zeros_like(masks)
        for e in range(20):
            img |= ((masks >> np.uint32(e)) & np.uint32(1)) << np.uint32(p[e])
        np.minimum(canon, img, out=canon)
    return canon


@lru_cache(maxsize=None)
def _coverage_table() -> np.ndarray:
    """Number of cells touched by each edge subset."""
    masks = np.arange(1 << 20, dtype=np.uint32)
    cover = np.zeros(1 << 20, dtype=np.uint8)
    for v in range(9):
        incident = np.uint32(
            sum(1 << i for i, (a, b) in enumerate(K3_EDGES) if v in (a, b))
        )
        cover += ((masks & incident) != 0).astype(np.uint8)
    return cover


def count_mask_embeddings(mask: int, cutoff: int = 9) -> int:
    """Monomorphisms of the edge subset (as an abstract graph) into K_3.

    The subset's graph lives on its covered cells; counting stops at
    ``cutoff``. A subset covering at least 8 cells is a puzzle exactly when
    this count is 8: the eight symmetries of any one embedding.
    """
    hadj = [0] * 9
    verts_mask = 0
    m = mask
    while m:
        low = m & -m
        m ^= low
        a, b = K3_EDGES[low.bit_length() - 1]
        hadj[a] |= 1 << b
        hadj[b] |= 1 << a
        verts_mask |= (1 << a) | (1 << b)
    verts = [v for v in range(9) if verts_mask >> v & 1]
    verts.sort(key=lambda v: -hadj[v].bit_count())
    k = len(verts)
    placed_before = [
        [j for j in range(i) if hadj[verts[i]] >> verts[j] & 1] for i in range(k)
    ]
    need = [hadj[v].bit_count() for v in verts]
    assign = [0] * k
    count = 0

    def rec(i: int, used: int) -> bool:
        nonlocal count
        if i == k:
            count += 1
            return count >= cutoff
        cand = 0x1FF & ~used
        for j in placed_before[i]:
            cand &= _HOST_MASKS[assign[j]]
        d = need[i]
        while cand:
            low = cand & -cand
            cand ^= low
            cell = low.bit_length() - 1
            if _HOST_DEGS[cell] < d:
                continue
            assign[i] = cell
            if rec(i + 1, used | low):
                return True
        return False

    rec(0, 0)
    return count


@lru_cache(maxsize=None)
def puzzle_table() -> np.ndarray:
    """Boolean puzzle/non-puzzle verdict for all 2^20 edge subsets.

    Computed once per canonical symmetry class (coverage of >= 8 cells,
    exactly 8 embeddings) and broadcast to the full universe.
    """
    canon = canonical_mask_table()
    cover = _coverage_table()
    masks = np.arange(1 << 20, dtype=np.uint32)
    table = np.zeros(1 << 20, dtype=bool)
    reps = np.flatnonzero((canon == masks) & (cover >= 8))
    verdicts = np.fromiter(
        (count_mask_embeddings(int(m)) == 8 for m in reps), dtype=bool, count=reps.size
    )
    table[reps] = verdicts
    return table[canon]


def is_puzzle_mask(mask: int, n: int = 3) -> bool:
    """Table lookup: does this edge subset determine the board?"""
    _require_n3(n)
    return bool(puzzle_table()[mask])


def mask_of_edges(edges: Sequence[tuple[int, int]]) -> int:
    """Bitmask of a set of king-graph cell edges."""
    mask = 0
    for a, b in edges:
        mask |= 1 << _EDGE_INDEX[(min(a, b), max(a, b))]
    return mask


def mask_words(mask: int, board: Board | None = None) -> tuple[tuple, ...]:
    """The two-letter word list of an edge subset, read off a board.

    Defaults to the standard board; each edge becomes one word with its
    smaller label first.
    """
    if board is None:
        board = standard_board(3)
    words = []
    for i, (a, b) in enumerate(K3_EDGES):
        if mask >> i & 1:
            la, lb = board.grid[a], board.grid[b]
            words.append((la, lb) if la <= lb else (lb, la))
    return tuple(sorted(words))


@dataclass(frozen=True)
class CensusEntry:
    """One edge-minimal puzzle, up to placement symmetry.

    ``edge_mask`` is the canonical (minimum) bitmask of its symmetry class;
    ``certificate`` identifies the abstract graph, so entries with equal
    certificates are the same puzzle told with different words.
    """

    edge_mask: int
    edge_count: int
    certificate: bytes
    representative_words: tuple[tuple, ...]


@lru_cache(maxsize=None)
def minimal_census(n: int = 3) -> tuple[CensusEntry, ...]:
    """Every edge-minimal puzzle of two-letter words, one per placement class.

    A puzzle is minimal when deleting any single edge breaks it. Entries are
    sorted by (edge count, canonical mask).
    """
    _require_n3(n)
    table = puzzle_table()
    canon = canonical_mask_table()
    idx = np.arange(1 << 20, dtype=np.uint32)
    minimal = table.copy()
    for e in range(20):
        bit = np.uint32(1 << e)
        has = (idx & bit) != 0
        minimal &= ~(has & table[idx ^ bit])
    reps = np.flatnonzero(minimal & (canon == idx))
    entries = []
    for mask in reps:
        mask = int(mask)
        edges = [K3_EDGES[i] for i in range(20) if mask >> i & 1]
        entries.append(
            CensusEntry(
                edge_mask=mask,
                edge_count=len(edges),
                certificate=canonical_form(edges),
                representative_words=mask_words(mask),
            )
        )
    entries.sort(key=lambda e: (e.edge_count, e.edge_mask))
    return tuple(entries)


def census_min_edges(n: int = 3) -> int:
    """Fewest two-letter words any puzzle needs (the bound is >= 11)."""
    return min(e.edge_count for e in minimal_census(n))


def isomorphism_class_count(n: int = 3) -> int:
    """Number of abstractly inequivalent minimal puzzles."""
    return len({e.certificate for e in minimal_census(n)})


@lru_cache(maxsize=None)
def puzzle_counts_by_size(n: int = 3) -> tuple[int, ...]:
    """How many m-edge subsets are puzzles, for m = 0..20."""
    _require_n3(n)
    table = puzzle_table()
    sizes = np.bitwise_count(np.arange(1 << 20, dtype=np.uint32))
    return tuple(int(x) for x in np.bincount(sizes[table], minlength=21))


def subset_counts_total() -> tuple[int, ...]:
    """C(20, m) for m = 0..20."""
    return tuple(math.comb(20, m) for m in range(21))
