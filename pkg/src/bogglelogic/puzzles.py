"""Puzzle solving, uniqueness, minimality, and greedy minimization.

A word list is a puzzle when exactly one board (up to rotation and
reflection) contains every word. Solving embeds the list's adjacency graph
into the king's graph by monomorphism search and then places any unused
labels in the remaining cells; the report groups the resulting boards into
symmetry orbits.

Within a word no label may repeat, so a word lies on a distinct-label board
exactly when its consecutive labels are adjacent: all the information in a
word list is its adjacency graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .board import Board, canonical_board
from .errors import (
    InvalidPuzzleError,
    InvalidWordError,
    PuzzlePreconditionError,
)
from .graphs import AdjacencyGraph, adjacency_graph, count_monomorphisms, graph_from_edges
from .kinggraph import build_king_graph

MATH_MODE = "math"
LETTER_MODE = "letters"

#: Status values of a SolveReport.
NO_SOLUTION = "no-solution"
UNIQUE = "unique"
AMBIGUOUS = "ambiguous"

#: Placeholder label for an undetermined cell in letter mode.
WILDCARD = "?"

DEFAULT_ORBIT_CAP = 64


@dataclass(frozen=True)
class Puzzle:
    """A word list to be located in a single board."""

    words: tuple
    mode: str = MATH_MODE

    def __post_init__(self):
        if self.mode not in (MATH_MODE, LETTER_MODE):
            raise InvalidPuzzleError(f"unknown mode {self.mode!r}")
        object.__setattr__(self, "words", tuple(tuple(w) for w in self.words))
        for w in self.words:
            if len(w) < 2:
                raise InvalidWordError(f"word {w!r} shorter than 2 labels")

    def labels(self) -> set:
        out = set()
        for w in self.words:
            out.update(w)
        return out


@dataclass(frozen=True)
class SolveReport:
    """Solution set of a puzzle, grouped into symmetry orbits.

    ``solutions`` holds one canonical representative board per orbit, up to
    a cap; ``orbit_count`` is always exact even when the list is truncated.
    """

    status: str
    solutions: tuple[Board, ...]
    orbit_count: int
    monomorphism_count: int
    n: int
    truncated: bool = False


def _validate(puzzle: Puzzle, n: int) -> AdjacencyGraph:
    cells = n * n
    g = adjacency_graph(puzzle.words)
    if g.vertex_count > cells:
        raise InvalidPuzzleError(
            f"{g.vertex_count} distinct labels cannot fit a {n}x{n} board"
        )
    if puzzle.mode == MATH_MODE:
        for v in g.vertices:
            if not isinstance(v, int) or not 1 <= v <= cells:
                raise InvalidPuzzleError(f"label {v!r} outside 1..{cells}")
    return g


def solve(puzzle: Puzzle, n: int = 3, orbit_cap: int = DEFAULT_ORBIT_CAP) -> SolveReport:
    """All boards containing the word list, up to rotation and reflection.

    Unused labels are free: one missing label is forced into the leftover
    cell, while two or more always leave inequivalent completions, so only
    lists touching at least n^2 - 1 labels can be unique. The orbit count
    is exact; the representative list is capped at ``orbit_cap``. In letter
    mode undetermined cells are shown as '?', so listed representatives may
    cover several orbits that differ only in the unknown letters.
    """
    g = _validate(puzzle, n)
    cells = n * n
    host = build_king_graph(n)
    monos = count_monomorphisms(g, host)
    if not monos:
        return SolveReport(NO_SOLUTION, (), 0, 0, n)

    u = cells - g.vertex_count
    if puzzle.mode == MATH_MODE:
        unused = sorted(set(range(1, cells + 1)) - set(g.vertices))
    else:
        unused = [WILDCARD] * u

    # The symmetry group acts freely on completed boards (a non-identity
    # symmetry moves at least n^2 - n >= 2 cells with distinct labels), so
    # every solution orbit has size 8 and the count is exact without
    # enumeration. Letter-mode fillers stand for the remaining math labels.
    orbit_count = len(monos) * _factorial(u) // 8
    status = UNIQUE if orbit_count == 1 else AMBIGUOUS

    reps: dict[tuple, Board] = {}
    done = False
    for mono in monos:
        for filling in _fillings(unused, puzzle.mode):
            grid = [None] * cells
            for label, cell in mono.items():
                grid[cell] = label
            free = iter(filling)
            for c in range(cells):
                if grid[c] is None:
                    grid[c] = next(free)
            rep = canonical_board(Board(n, tuple(grid)))
            if rep.grid not in reps:
                reps[rep.grid] = rep
                if len(reps) >= orbit_cap:
                    done = True
                    break
        if done:
            break

    boards = tuple(v for _, v in sorted(reps.items(), key=lambda kv: _key(kv[0])))
    truncated = orbit_count > len(boards)
    return SolveReport(status, boards, orbit_count, len(monos), n, truncated)


def _key(grid: tuple):
    return tuple(str(x) for x in grid)


def _factorial(u: int) -> int:
    out = 1
    for i in range(2, u + 1):
        out *= i
    return out


def _fillings(unused: list, mode: str):
    if mode == MATH_MODE:
        return itertools.permutations(unused)
    return [tuple(unused)]  # wildcards are indistinguishable


def is_puzzle(puzzle: Puzzle, n: int = 3) -> bool:
    """True when the word list determines the board up to symmetry."""
    return solve(puzzle, n, orbit_cap=1).status == UNIQUE


def edge_list_is_puzzle(edges, n: int = 3) -> bool:
    """Puzzle test for a bare adjacency edge set (two-letter word list).

    A set of adjacencies pins a board exactly when it touches at least
    n^2 - 1 labels and embeds into the king's graph in exactly 8 ways (one
    per symmetry of the square).
    """
    edges = list(edges)
    if not edges:
        return False
    g = graph_from_edges(edges)
    if g.vertex_count < n * n - 1:
        return False
    monos = count_monomorphisms(g, build_king_graph(n), limit=9)
    return len(monos) == 8


def puzzle_edges(puzzle: Puzzle, n: int = 3) -> tuple:
    """The adjacency edges of a puzzle's word list."""
    return _validate(puzzle, n).edges


def is_minimal(puzzle: Puzzle, n: int = 3) -> bool:
    """True when deleting any single adjacency destroys uniqueness.

    Splitting a word at an interior position removes one adjacency, so
    minimality is tested edge by edge on the adjacency graph.
    """
    if not is_puzzle(puzzle, n):
        raise PuzzlePreconditionError("is_minimal requires a puzzle")
    edges = list(puzzle_edges(puzzle, n))
    for i in range(len(edges)):
        if edge_list_is_puzzle(edges[:i] + edges[i + 1 :], n):
            return False
    return True


def minimize(puzzle: Puzzle, n: int = 3) -> Puzzle:
    """Greedily split words until the puzzle is minimal.

    Scans adjacencies in sorted order and drops each one whose removal
    keeps the list a puzzle; an edge kept once stays necessary, so a single
    pass suffices. The result is a sub-puzzle of the input: every word is a
    contiguous fragment of an original word.
    """
    if not is_puzzle(puzzle, n):
        raise PuzzlePreconditionError("minimize requires a puzzle")
    kept = list(puzzle_edges(puzzle, n))
    i = 0
    while i < len(kept):
        trial = kept[:i] + kept[i + 1 :]
        if edge_list_is_puzzle(trial, n):
            kept = trial
        else:
            i += 1
    kept_set = set(kept)

    pieces: list[tuple] = []
    seen = set()
    for w in puzzle.words:
        piece = [w[0]]
        for a, b in zip(w, w[1:]):
            e = (a, b) if _edge_key(a) <= _edge_key(b) else (b, a)
            if e in kept_set:
                piece.append(b)
            else:
                if len(piece) >= 2 and tuple(piece) not in seen:
                    seen.add(tuple(piece))
                    pieces.append(tuple(piece))
                piece = [b]
        if len(piece) >= 2 and tuple(piece) not in seen:
            seen.add(tuple(piece))
            pieces.append(tuple(piece))
    return Puzzle(tuple(pieces), puzzle.mode)


def _edge_key(x):
    return (type(x).__name__, str(x))
