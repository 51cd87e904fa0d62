"""Adjacency graphs of word lists and subgraph machinery.

The adjacency graph of a word list has one vertex per label used and an
edge for every consecutive pair in some word. Solving a puzzle amounts to
embedding that graph into a king's graph, so this module provides:

* monomorphism enumeration (injective, adjacency-preserving maps),
* automorphism groups of small graphs,
* the labeling-subgraph test: every monomorphic copy of H in the host
  differs from a reference copy by an automorphism of the host, and
* the weaker unique-subgraph test: all copies have the same image up to
  host automorphism.

A word list pins down a board exactly when its adjacency graph is a
labeling subgraph of the king's graph; unique subgraphs are not enough
because a copy can land on the same image through a vertex swap the host
cannot perform.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidWordError, ResourceLimitError

Edge = tuple  # unordered pair, stored with sorted endpoints


def _norm_edge(a, b) -> Edge:
    return (a, b) if _key(a) <= _key(b) else (b, a)


def _key(x):
    # labels inside one graph are homogeneous; str() gives a stable total order
    return (type(x).__name__, str(x))


@dataclass(frozen=True)
class AdjacencyGraph:
    """A loop-free undirected graph on hashable vertex labels."""

    vertices: tuple
    edges: tuple  # sorted tuple of normalized pairs

    def __post_init__(self):
        vs = set(self.vertices)
        for a, b in self.edges:
            if a == b:
                raise InvalidWordError(f"self-loop at {a!r}")
            if a not in vs or b not in vs:
                raise InvalidWordError(f"edge ({a!r}, {b!r}) leaves the vertex set")

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v) -> int:
        return sum(1 for a, b in self.edges if v in (a, b))

    def neighbors(self, v) -> set:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out


def graph_from_edges(edges: Iterable[tuple], vertices: Iterable | None = None) -> AdjacencyGraph:
    """Build an AdjacencyGraph from edge pairs (plus optional extra vertices)."""
    norm = {_norm_edge(a, b) for a, b in edges}
    vs = set(vertices) if vertices is not None else set()
    for a, b in norm:
        vs.add(a)
        vs.add(b)
    return AdjacencyGraph(tuple(sorted(vs, key=_key)), tuple(sorted(norm, key=lambda e: (_key(e[0]), _key(e[1])))))


def adjacency_graph(words: Sequence[tuple]) -> AdjacencyGraph:
    """The adjacency graph of a word list.

    Vertices are exactly the labels appearing in the words; edges join
    consecutive letters. Duplicate edges collapse and the result does not
    depend on word order. Words must not repeat a label.
    """
    edges = set()
    vs = set()
    for w in words:
        if len(w) < 2:
            raise InvalidWordError(f"word {w!r} shorter than 2 labels")
        if len(set(w)) != len(w):
            raise InvalidWordError(f"word {w!r} repeats a label")
        vs.update(w)
        for a, b in zip(w, w[1:]):
            edges.add(_norm_edge(a, b))
    return graph_from_edges(edges, vs)


def _host_arrays(host_edges: Sequence[tuple]):
    """Host vertex list, index map, adjacency bitmasks, degrees."""
    verts = sorted({v for e in host_edges for v in e}, key=_key)
    idx = {v: i for i, v in enumerate(verts)}
    masks = [0] * len(verts)
    for a, b in host_edges:
        ia, ib = idx[a], idx[b]
        if ia != ib:
            masks[ia] |= 1 << ib
            masks[ib] |= 1 << ia
    degs = [m.bit_count() for m in masks]
    return verts, idx, masks, degs


def _pattern_order(h: AdjacencyGraph) -> list:
    """Backtracking order: descending degree, ties by smallest label."""
    return sorted(h.vertices, key=lambda v: (-h.degree(v), _key(v)))


def count_monomorphisms(
    h: AdjacencyGraph,
    host_edges: Sequence[tuple],
    limit: int | None = None,
) -> list[dict]:
    """All injective adjacency-preserving maps from h into the host graph.

    Every edge of h must land on a host edge; non-edges are unconstrained.
    The search is deterministic (fixed vertex order, ascending host cells),
    and complete whenever fewer than ``limit`` maps exist.
    """
    verts, _, masks, degs = _host_arrays(host_edges)
    nh = len(verts)
    order = _pattern_order(h)
    m = len(order)
    if m > nh:
        return []
    pos = {v: i for i, v in enumerate(order)}
    back = [[pos[u] for u in h.neighbors(v) if pos[u] < i] for i, v in enumerate(order)]
    need = [h.degree(v) for v in order]
    full = (1 << nh) - 1
    out: list[dict] = []
    assign = [0] * m

    def rec(i: int, used: int) -> bool:
        if i == m:
            out.append({order[j]: verts[assign[j]] for j in range(m)})
            return limit is not None and len(out) >= limit
        cand = full & ~used
        for j in back[i]:
            cand &= masks[assign[j]]
        d = need[i]
        while cand:
            low = cand & -cand
            cand ^= low
            cell = low.bit_length() - 1
            if degs[cell] < d:
                continue
            assign[i] = cell
            if rec(i + 1, used | low):
                return True
        return False

    rec(0, 0)
    return out


def automorphisms(edges: Sequence[tuple], vertices: Iterable | None = None) -> list[dict]:
    """The full automorphism group of a small graph, as vertex maps.

    An automorphism here is an injective self-map sending edges to edges;
    on a finite vertex set that forces edge-set equality, so non-edges are
    preserved too.
    """
    g = graph_from_edges(edges, vertices)
    if g.vertex_count > 25:
        raise ResourceLimitError(f"{g.vertex_count} vertices is past the automorphism budget (25)")
    isolated = [v for v in g.vertices if g.degree(v) == 0]
    core = graph_from_edges(g.edges)  # host vertices come from edges only
    maps = count_monomorphisms(core, g.edges)
    if not isolated:
        return maps
    # isolated vertices permute freely among themselves
    from itertools import permutations

    out = []
    for base in maps:
        for perm in permutations(isolated):
            full = dict(base)
            full.update(zip(isolated, perm))
            out.append(full)
    return out


@dataclass(frozen=True)
class LabelingReport:
    """Outcome of the labeling-subgraph test with diagnostics."""

    is_labeling: bool
    embeddable: bool
    monomorphism_count: int  # capped at |Aut(host)| + 1
    host_automorphism_count: int


def labeling_report(h: AdjacencyGraph, host_edges: Sequence[tuple]) -> LabelingReport:
    """Check that host automorphisms act transitively on the copies of h.

    Equivalently: composing any monomorphism with the inverse of a fixed
    reference one extends to an automorphism of the host. More copies than
    host automorphisms fails immediately, so the search is cut off at
    |Aut(host)| + 1.
    """
    auts = automorphisms(host_edges)
    cutoff = len(auts) + 1
    monos = count_monomorphisms(h, host_edges, limit=cutoff)
    if not monos:
        return LabelingReport(False, False, 0, len(auts))
    if len(monos) >= cutoff:
        return LabelingReport(False, True, len(monos), len(auts))
    order = _pattern_order(h)
    m0 = monos[0]
    reachable = {tuple(a[m0[v]] for v in order) for a in auts}
    ok = all(tuple(mo[v] for v in order) in reachable for mo in monos)
    return LabelingReport(ok, True, len(monos), len(auts))


def is_labeling_subgraph(h: AdjacencyGraph, host_edges: Sequence[tuple]) -> bool:
    """True when every copy of h in the host comes from a host automorphism."""
    return labeling_report(h, host_edges).is_labeling


def is_unique_subgraph(h: AdjacencyGraph, host_edges: Sequence[tuple]) -> bool:
    """True when all copies of h share one image up to host automorphism.

    Strictly weaker than the labeling property: a self-symmetry of h that
    fixes the image but is not a host automorphism passes here and fails
    there.
    """
    monos = count_monomorphisms(h, host_edges)
    if not monos:
        return False
    images = {
        frozenset(_norm_edge(mo[a], mo[b]) for a, b in h.edges) for mo in monos
    }
    ref = next(iter(images))
    for a in automorphisms(host_edges):
        img = frozenset(_norm_edge(a[x], a[y]) for x, y in ref)
        images.discard(img)
        if not images:
            return True
    return not images


def canonical_form(edges: Sequence[tuple], vertices: Iterable | None = None) -> bytes:
    """An isomorphism-invariant certificate for a graph on <= 12 vertices.

    Color refinement plus branching on the first non-singleton class; the
    certificate is the minimal packed adjacency matrix over all orderings
    consistent with the refinement. Equal certificates iff isomorphic.
    """
    g = graph_from_edges(edges, vertices)
    m = g.vertex_count
    if m > 12:
        raise ResourceLimitError(f"{m} vertices is past the canonical-form budget (12)")
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj = [0] * m
    for a, b in g.edges:
        ia, ib = idx[a], idx[b]
        adj[ia] |= 1 << ib
        adj[ib] |= 1 << ia
    if m == 0:
        return b"G\x00"
    e = len(g.edges)
    if e == 0 or e == m * (m - 1) // 2:
        # empty and complete graphs look the same under every ordering
        return b"G" + bytes([m]) + _pack_bits(adj, list(range(m)), m)

    neigh = [[j for j in range(m) if adj[i] >> j & 1] for i in range(m)]

    def refine(colors: tuple[int, ...]) -> tuple[int, ...]:
        while True:
            sigs = [
                (colors[i], tuple(sorted(colors[j] for j in neigh[i])))
                for i in range(m)
            ]
            rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
            new = tuple(rank[s] for s in sigs)
            if new == colors:
                return colors
            colors = new

    best: bytes | None = None

    def search(colors: tuple[int, ...]) -> None:
        nonlocal best
        classes: dict[int, list[int]] = {}
        for i, c in enumerate(colors):
            classes.setdefault(c, []).append(i)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = classes[c]
                break
        if target is None:
            order = sorted(range(m), key=lambda i: colors[i])
            cert = _pack_bits(adj, order, m)
            if best is None or cert < best:
                best = cert
            return
        for v in target:
            split = tuple(c * 2 - (1 if i == v else 0) for i, c in enumerate(colors))
            search(refine(split))

    search(refine(tuple(len(neigh[i]) for i in range(m))))
    assert best is not None
    return b"G" + bytes([m]) + best


def _pack_bits(adj: list[int], order: list[int], m: int) -> bytes:
    bits = []
    for i in range(m):
        for j in range(i + 1, m):
            bits.append(adj[order[i]] >> order[j] & 1)
    out = bytearray()
    for i in range(0, len(bits), 8):
        byte = 0
        for b in bits[i : i + 8]:
            byte = byte << 1 | b
        out.append(byte)
    return bytes(out)
