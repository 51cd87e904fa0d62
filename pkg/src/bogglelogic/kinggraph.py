"""King's-graph geometry: cells, adjacency, square symmetries, simple paths.

Cells of an n x n grid are numbered row-major from the top-left corner, so
the cell at (row, col) has id ``row * n + col``. Two cells are adjacent when
they touch horizontally, vertically, or diagonally; the resulting graph is
the n x n king's graph, with 2(n-1)(2n-1) edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidDimensionError

#: Names of the eight square symmetries, in the fixed order used everywhere.
DIHEDRAL_NAMES = (
    "id",
    "rot90",
    "rot180",
    "rot270",
    "flip_h",
    "flip_v",
    "flip_d",
    "flip_a",
)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise InvalidDimensionError(f"board side must be an integer >= 2, got {n!r}")


def build_king_graph(n: int) -> list[tuple[int, int]]:
    """All unordered king-adjacent cell pairs of the n x n grid, sorted."""
    _check_n(n)
    edges = set()
    for r in range(n):
        for c in range(n):
            for dr, dc in ((0, 1), (1, -1), (1, 0), (1, 1)):
                r2, c2 = r + dr, c + dc
                if 0 <= r2 < n and 0 <= c2 < n:
                    a, b = r * n + c, r2 * n + c2
                    edges.add((min(a, b), max(a, b)))
    return sorted(edges)


@lru_cache(maxsize=None)
def adjacency_sets(n: int) -> tuple[frozenset[int], ...]:
    """Per-cell neighbor sets of the n x n king's graph."""
    adj: list[set[int]] = [set() for _ in range(n * n)]
    for a, b in build_king_graph(n):
        adj[a].add(b)
        adj[b].add(a)
    return tuple(frozenset(s) for s in adj)


@lru_cache(maxsize=None)
def neighbor_masks(n: int) -> tuple[int, ...]:
    """Per-cell neighbor bitmasks (bit i set when cell i is adjacent)."""
    return tuple(sum(1 << b for b in s) for s in adjacency_sets(n))


@dataclass(frozen=True)
class PathCatalog:
    """All directed simple paths of the n x n king's graph, grouped by length.

    A path of length k is a tuple of k distinct cell ids whose consecutive
    cells are king-adjacent. The catalog of a given length contains every
    path in both directions and is listed in lexicographic order.
    """

    n: int
    paths_by_length: dict[int, tuple[tuple[int, ...], ...]]

    @property
    def max_length(self) -> int:
        return max(self.paths_by_length)

    def paths(self, k: int) -> tuple[tuple[int, ...], ...]:
        return self.paths_by_length[k]

    def count(self, k: int) -> int:
        return len(self.paths_by_length[k])


@lru_cache(maxsize=None)
def path_catalog(n: int, k_max: int | None = None) -> PathCatalog:
    """Enumerate all directed simple paths of length 2..k_max (default n*n).

    Built once per (n, k_max) and cached; the result is immutable and safe
    to share.
    """
    _check_n(n)
    cells = n * n
    if k_max is None:
        k_max = cells
    if not 2 <= k_max <= cells:
        raise InvalidDimensionError(f"k_max must be in [2, {cells}], got {k_max}")
    adj = [sorted(s) for s in adjacency_sets(n)]
    out: dict[int, list[tuple[int, ...]]] = {k: [] for k in range(2, k_max + 1)}
    path = [0] * k_max
    used = [False] * cells

    def extend(depth: int) -> None:
        if depth >= 2:
            out[depth].append(tuple(path[:depth]))
        if depth == k_max:
            return
        for nxt in adj[path[depth - 1]]:
            if not used[nxt]:
                path[depth] = nxt
                used[nxt] = True
                extend(depth + 1)
                used[nxt] = False

    for start in range(cells):
        path[0] = start
        used[start] = True
        extend(1)
        used[start] = False
    return PathCatalog(n, {k: tuple(v) for k, v in out.items()})


@dataclass(frozen=True)
class DihedralElement:
    """One symmetry of the square as a permutation of cell ids.

    ``cell_map[c]`` is the cell that c moves to under the symmetry.
    """

    name: str
    cell_map: tuple[int, ...]

    def __call__(self, cell: int) -> int:
        return self.cell_map[cell]


def _coord_maps(n: int):
    last = n - 1
    return {
        "id": lambda r, c: (r, c),
        "rot90": lambda r, c: (c, last - r),  # clockwise quarter turn
        "rot180": lambda r, c: (last - r, last - c),
        "rot270": lambda r, c: (last - c, r),
        "flip_h": lambda r, c: (last - r, c),  # mirror across the horizontal axis
        "flip_v": lambda r, c: (r, last - c),  # mirror across the vertical axis
        "flip_d": lambda r, c: (c, r),  # main diagonal
        "flip_a": lambda r, c: (last - c, last - r),  # anti-diagonal
    }


@lru_cache(maxsize=None)
def dihedral_group(n: int) -> tuple[DihedralElement, ...]:
    """The eight symmetries of the n x n grid, in the DIHEDRAL_NAMES order."""
    _check_n(n)
    maps = _coord_maps(n)
    out = []
    for name in DIHEDRAL_NAMES:
        f = maps[name]
        cm = [0] * (n * n)
        for cell in range(n * n):
            r, c = divmod(cell, n)
            r2, c2 = f(r, c)
            cm[cell] = r2 * n + c2
        out.append(DihedralElement(name, tuple(cm)))
    return tuple(out)


def compose(d1: DihedralElement, d2: DihedralElement) -> DihedralElement:
    """The symmetry 'apply d2 first, then d1', named by its cell map."""
    cm = tuple(d1.cell_map[c] for c in d2.cell_map)
    return DihedralElement(f"{d1.name}*{d2.name}", cm)


def inverse(d: DihedralElement) -> DihedralElement:
    inv = [0] * len(d.cell_map)
    for src, dst in enumerate(d.cell_map):
        inv[dst] = src
    return DihedralElement(f"{d.name}^-1", tuple(inv))
