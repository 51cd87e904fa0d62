"""Boards, words, and word sets.

A board is an n x n grid of labels in row-major order. In the canonical
"math" convention the labels are the integers 1..n^2, each used once; boards
with repeated labels are allowed and described by their type: the partition
of n^2 recording label multiplicities.

A word is a sequence of at least two labels read along a directed simple
path of the king's graph (no cell reused). A word and its reverse are
distinct words; the word set of a board is therefore closed under reversal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator

from .errors import (
    InvalidComparisonError,
    InvalidDimensionError,
    InvalidPermutationError,
    InvalidWordError,
)
from .kinggraph import DihedralElement, adjacency_sets, dihedral_group, path_catalog

Label = Hashable
Word = tuple  # tuple of labels, length >= 2


@dataclass(frozen=True)
class Board:
    """An n x n board; ``grid[row * n + col]`` is the label at (row, col)."""

    n: int
    grid: tuple

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise InvalidDimensionError(f"board side must be >= 2, got {self.n!r}")
        if len(self.grid) != self.n * self.n:
            raise InvalidDimensionError(
                f"grid has {len(self.grid)} labels, expected {self.n * self.n}"
            )
        object.__setattr__(self, "grid", tuple(self.grid))

    def label_at(self, row: int, col: int):
        return self.grid[row * self.n + col]

    def rows(self) -> list[tuple]:
        n = self.n
        return [self.grid[i * n : (i + 1) * n] for i in range(n)]

    @property
    def type_lambda(self) -> tuple[int, ...]:
        """Label multiplicities as a nonincreasing partition of n^2."""
        return tuple(sorted(Counter(self.grid).values(), reverse=True))

    @property
    def has_distinct_labels(self) -> bool:
        return len(set(self.grid)) == len(self.grid)

    def cells_of(self, label) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.grid) if x == label)

    def __str__(self) -> str:
        width = max(len(str(x)) for x in self.grid)
        return "\n".join(
            " ".join(str(x).rjust(width) for x in row) for row in self.rows()
        )


def spiral_cells(n: int) -> list[int]:
    """Cell ids along a clockwise inward spiral starting at the top-left."""
    order = []
    top, bottom, left, right = 0, n - 1, 0, n - 1
    while top <= bottom and left <= right:
        for c in range(left, right + 1):
            order.append(top * n + c)
        for r in range(top + 1, bottom + 1):
            order.append(r * n + right)
        if top < bottom:
            for c in range(right - 1, left - 1, -1):
                order.append(bottom * n + c)
        if left < right:
            for r in range(bottom - 1, top, -1):
                order.append(r * n + left)
        top, bottom, left, right = top + 1, bottom - 1, left + 1, right - 1
    return order


def standard_board(n: int = 3) -> Board:
    """The reference board: labels 1..n^2 along a clockwise spiral.

    For n = 3 this is rows (1,2,3), (8,9,4), (7,6,5): the ring 1..8 read
    clockwise from the top-left with 9 in the center.
    """
    grid = [0] * (n * n)
    for label, cell in enumerate(spiral_cells(n), start=1):
        grid[cell] = label
    return Board(n, tuple(grid))


def permute_board(board: Board, mapping: dict) -> Board:
    """Relabel a distinct-label board by a bijection on its alphabet.

    Labels absent from ``mapping`` stay fixed, so a transposition can be
    given as ``{1: 3, 3: 1}``.
    """
    if not board.has_distinct_labels:
        raise InvalidPermutationError("relabeling requires a distinct-label board")
    alphabet = set(board.grid)
    for src, dst in mapping.items():
        if src not in alphabet or dst not in alphabet:
            raise InvalidPermutationError(f"{src!r} -> {dst!r} leaves the alphabet")
    full = {x: mapping.get(x, x) for x in alphabet}
    if set(full.values()) != alphabet:
        raise InvalidPermutationError("mapping is not a bijection on the alphabet")
    return Board(board.n, tuple(full[x] for x in board.grid))


def apply_symmetry(board: Board, d: DihedralElement) -> Board:
    """The board moved by one symmetry of the square (labels ride along)."""
    grid = [None] * len(board.grid)
    for cell, label in enumerate(board.grid):
        grid[d.cell_map[cell]] = label
    return Board(board.n, tuple(grid))


def dihedral_orbit(board: Board) -> tuple[Board, ...]:
    """The distinct symmetry images of a board, sorted by grid.

    Distinct-label boards always have the full orbit of 8; repeated labels
    can shrink it (a lone odd label in the center is fixed by everything).
    """
    seen = {}
    for d in dihedral_group(board.n):
        img = apply_symmetry(board, d)
        seen[img.grid] = img
    return tuple(seen[g] for g in sorted(seen, key=_grid_sort_key))


def _grid_sort_key(grid: tuple):
    return tuple(str(x) for x in grid)


def canonical_board(board: Board) -> Board:
    """The lexicographically smallest symmetry image; orbit fingerprint."""
    return dihedral_orbit(board)[0]


def check_word(word: Word, min_len: int = 2, distinct: bool = False) -> None:
    if len(word) < min_len:
        raise InvalidWordError(f"word {word!r} shorter than {min_len} labels")
    if distinct and len(set(word)) != len(word):
        raise InvalidWordError(f"word {word!r} repeats a label")


def find_word_path(board: Board, word: Word) -> tuple[int, ...] | None:
    """First directed simple path spelling the word, or None.

    Repeated labels are handled by trying every cell that carries each
    letter; the search is depth-first over ascending cell ids, so the
    returned path is deterministic.
    """
    check_word(word)
    n = len(word)
    adj = adjacency_sets(board.n)
    starts = [c for c, x in enumerate(board.grid) if x == word[0]]
    path: list[int] = []

    def extend(i: int) -> bool:
        if i == n:
            return True
        prev = path[-1]
        for nxt in sorted(adj[prev]):
            if board.grid[nxt] == word[i] and nxt not in path:
                path.append(nxt)
                if extend(i + 1):
                    return True
                path.pop()
        return False

    for s in starts:
        path = [s]
        if extend(1):
            return tuple(path)
    return None


def word_on_board(board: Board, word: Word) -> bool:
    """True when some directed simple king-graph path spells the word."""
    return find_word_path(board, word) is not None


def word_set(board: Board, k_min: int = 2, k_max: int | None = None) -> frozenset:
    """All words of length k_min..k_max readable on the board.

    For a distinct-label board the length-k words are in bijection with the
    directed simple paths of that length.
    """
    cells = board.n * board.n
    if k_max is None:
        k_max = cells
    if not 2 <= k_min <= k_max <= cells:
        raise InvalidWordError(f"need 2 <= k_min <= k_max <= {cells}")
    catalog = path_catalog(board.n, k_max)
    grid = board.grid
    out = set()
    for k in range(k_min, k_max + 1):
        for p in catalog.paths(k):
            out.add(tuple(grid[c] for c in p))
    return frozenset(out)


def boards_equivalent(b1: Board, b2: Board, k_max: int | None = None) -> bool:
    """Word-set equality graded by length, shortest first.

    With ``k_max = n^2`` this is full equivalence: the boards carry exactly
    the same words. Comparison proceeds length by length so unequal boards
    usually separate at k = 2.
    """
    if b1.n != b2.n:
        raise InvalidComparisonError(f"board sizes differ: {b1.n} vs {b2.n}")
    if b1.type_lambda != b2.type_lambda:
        raise InvalidComparisonError(
            f"board types differ: {b1.type_lambda} vs {b2.type_lambda}"
        )
    if k_max is None:
        k_max = b1.n * b1.n
    for k in range(2, k_max + 1):
        if word_set(b1, k, k) != word_set(b2, k, k):
            return False
    return True


def words_from_strings(strings: Iterable[str]) -> list[Word]:
    """Lowercase letter words as label tuples, e.g. 'act' -> ('a','c','t')."""
    out = []
    for s in strings:
        if not s or not s.isascii() or not s.islower() or not s.isalpha():
            raise InvalidWordError(f"not a lowercase word: {s!r}")
        out.append(tuple(s))
    return out


def iter_label_words(board: Board, k: int) -> Iterator[Word]:
    """Stream the length-k words of a board in catalog (path) order."""
    catalog = path_catalog(board.n, k)
    grid = board.grid
    for p in catalog.paths(k):
        yield tuple(grid[c] for c in p)
