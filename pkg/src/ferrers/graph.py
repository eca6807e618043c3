"""Bipartite graphs, Ferrers recognition and the complement-chordality test.

Vertices of a ``BipartiteGraph`` are x_1..x_nx and y_1..y_ny; edges are 1-based
pairs ``(i, j)`` meaning x_i -- y_j.  A ``SimpleGraph`` uses 0-based vertex ids;
``complement`` puts x_i at id i-1 and y_j at id nx+j-1.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from . import _kernels
from .combinatorics import Partition

log = logging.getLogger(__name__)


class GraphError(ValueError):
    pass


class IsolatedVertexError(GraphError):
    def __init__(self, vertex: str):
        super().__init__(f"vertex {vertex} is isolated")
        self.vertex = vertex


@dataclass(frozen=True)
class BipartiteGraph:
    nx: int
    ny: int
    edges: frozenset

    def __post_init__(self):
        if self.nx < 0 or self.ny < 0:
            raise GraphError("vertex counts must be non-negative")
        edges = frozenset((int(i), int(j)) for i, j in self.edges)
        for i, j in edges:
            if not (1 <= i <= self.nx and 1 <= j <= self.ny):
                raise GraphError(f"edge ({i},{j}) out of range for {self.nx}+{self.ny} vertices")
        object.__setattr__(self, "edges", edges)

    def row_neighbors(self, i: int) -> frozenset:
        return frozenset(j for a, j in self.edges if a == i)

    def col_neighbors(self, j: int) -> frozenset:
        return frozenset(i for i, b in self.edges if b == j)

    def isolated(self) -> list[str]:
        rows = {i for i, _ in self.edges}
        cols = {j for _, j in self.edges}
        return ([f"x{i}" for i in range(1, self.nx + 1) if i not in rows]
                + [f"y{j}" for j in range(1, self.ny + 1) if j not in cols])

    def bitmask(self) -> int:
        """Edge (i, j) is bit (i-1)*ny + (j-1)."""
        return sum(1 << ((i - 1) * self.ny + (j - 1)) for i, j in self.edges)


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u},{v}) out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    def adjacency(self) -> np.ndarray:
        adj = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            adj[u, v] = adj[v, u] = 1
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


@dataclass(frozen=True)
class ChordalityResult:
    chordal: bool
    order: tuple | None = None   # perfect elimination ordering when chordal
    cycle: tuple | None = None   # chordless cycle (length >= 4) otherwise

    def __bool__(self):
        return self.chordal


@dataclass(frozen=True)
class RecognitionResult:
    ferrers: bool
    partition: Partition | None = None
    row_permutation: tuple | None = None   # new row r+1 is original row row_permutation[r]
    col_permutation: tuple | None = None
    obstruction: tuple | None = None       # (i, i2, j, k): x_i y_k, x_i2 y_j edges; x_i y_j, x_i2 y_k not

    def to_json(self) -> dict:
        if self.ferrers:
            return {"verdict": "ferrers", "partition": list(self.partition.parts),
                    "row_permutation": list(self.row_permutation),
                    "col_permutation": list(self.col_permutation)}
        return {"verdict": "not-ferrers", "obstruction": list(self.obstruction)}


def ferrers_graph(p: Partition) -> BipartiteGraph:
    return BipartiteGraph(p.n, p.m, frozenset(
        (i, j) for i in range(1, p.n + 1) for j in range(1, p.part(i) + 1)))


def is_ferrers_labeled(g: BipartiteGraph) -> bool:
    if g.nx == 0 or g.ny == 0:
        return False
    prev = g.ny
    for i in range(1, g.nx + 1):
        row = g.row_neighbors(i)
        d = len(row)
        if d == 0 or d > prev or row != frozenset(range(1, d + 1)):
            return False
        prev = d
    return (1, g.ny) in g.edges and (g.nx, 1) in g.edges


def relabel(g: BipartiteGraph, rows, cols) -> BipartiteGraph:
    """Renumber vertices: new x_{r+1} is old x_{rows[r]}, likewise for y."""
    new_row = {old: new for new, old in enumerate(rows, start=1)}
    new_col = {old: new for new, old in enumerate(cols, start=1)}
    return BipartiteGraph(g.nx, g.ny, frozenset((new_row[i], new_col[j]) for i, j in g.edges))


def strip_isolated(g: BipartiteGraph, warn: bool = False) -> BipartiteGraph:
    """Drop isolated vertices and renumber the rest in their original order."""
    rows = sorted({i for i, _ in g.edges})
    cols = sorted({j for _, j in g.edges})
    if len(rows) == g.nx and len(cols) == g.ny:
        return g
    if warn:
        for v in g.isolated():
            log.warning("dropping isolated vertex %s", v)
    rmap = {old: new for new, old in enumerate(rows, start=1)}
    cmap = {old: new for new, old in enumerate(cols, start=1)}
    return BipartiteGraph(len(rows), len(cols), frozenset((rmap[i], cmap[j]) for i, j in g.edges))


def recognize_ferrers(g: BipartiteGraph) -> RecognitionResult:
    """Decide whether ``g`` is a Ferrers graph up to relabeling.

    The X-neighbourhoods must form a chain under inclusion. On success the returned
    permutations sort X by degree (ties: lexicographic neighbourhood, then index) and
    Y by degree (ties: index), both descending in degree. Otherwise a 2x2 switch
    between two rows with incomparable neighbourhoods is returned.
    """
    iso = g.isolated()
    if iso:
        raise IsolatedVertexError(iso[0])
    nbr = {i: g.row_neighbors(i) for i in range(1, g.nx + 1)}
    rows = sorted(nbr, key=lambda i: (-len(nbr[i]), sorted(nbr[i]), i))
    for a, b in zip(rows, rows[1:]):
        if not nbr[b] <= nbr[a]:
            i, i2 = min(a, b), max(a, b)
            j = min(nbr[i2] - nbr[i])
            k = min(nbr[i] - nbr[i2])
            return RecognitionResult(False, obstruction=(i, i2, j, k))
    coldeg = {j: len(g.col_neighbors(j)) for j in range(1, g.ny + 1)}
    cols = sorted(coldeg, key=lambda j: (-coldeg[j], j))
    parts = tuple(len(nbr[i]) for i in rows)
    return RecognitionResult(True, Partition(parts), tuple(rows), tuple(cols))


def complement(g: BipartiteGraph) -> SimpleGraph:
    nv = g.nx + g.ny
    edges = set()
    for u, v in combinations(range(nv), 2):
        if u < g.nx <= v and (u + 1, v - g.nx + 1) in g.edges:
            continue
        edges.add((u, v))
    return SimpleGraph(nv, frozenset(edges))


def _chordless_cycle(h: SimpleGraph, hint=None):
    """Find an induced cycle of length >= 4, trying ``hint`` = (v, a, b) first."""
    adj = [set() for _ in range(h.n)]
    for u, v in h.edges:
        adj[u].add(v)
        adj[v].add(u)

    def attempt(v, a, b):
        blocked = (adj[v] | {v}) - {a, b}
        prev = {a: None}
        queue = deque([a])
        while queue:
            u = queue.popleft()
            if u == b:
                path = []
                while u is not None:
                    path.append(u)
                    u = prev[u]
                return (v,) + tuple(reversed(path))
            for w in sorted(adj[u]):
                if w not in prev and w not in blocked:
                    prev[w] = u
                    queue.append(w)
        return None

    if hint is not None:
        found = attempt(*hint)
        if found:
            return found
    for v in range(h.n):
        for a, b in combinations(sorted(adj[v]), 2):
            if b not in adj[a]:
                found = attempt(v, a, b)
                if found:
                    return found
    return None


def is_chordal(h: SimpleGraph) -> ChordalityResult:
    """Maximum cardinality search followed by a perfect-elimination check."""
    adj = h.adjacency()
    order, bad = _kernels.elimination_order(adj)
    order = tuple(int(v) for v in order)
    if bad < 0:
        return ChordalityResult(True, order=order)
    v = order[bad]
    pos = {u: k for k, u in enumerate(order)}
    later = sorted((u for u in range(h.n) if adj[v, u] and pos[u] > bad), key=pos.get)
    parent = later[0]
    other = next(u for u in later[1:] if not adj[parent, u])
    return ChordalityResult(False, cycle=_chordless_cycle(h, (v, parent, other)))


def has_two_linear_resolution(g: BipartiteGraph) -> bool:
    return is_chordal(complement(g)).chordal


def valid_elimination_order(h: SimpleGraph, order) -> bool:
    if sorted(order) != list(range(h.n)):
        return False
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [u for u in range(h.n) if h.has_edge(v, u) and pos[u] > pos[v]]
        if any(not h.has_edge(a, b) for a, b in combinations(later, 2)):
            return False
    return True


def valid_chordless_cycle(h: SimpleGraph, cycle) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for a, b in combinations(range(k), 2):
        adjacent = (b - a) in (1, k - 1)
        if h.has_edge(cycle[a], cycle[b]) != adjacent:
            return False
    return True


def valid_obstruction(g: BipartiteGraph, obs) -> bool:
    i, i2, j, k = obs
    return ((i, k) in g.edges and (i2, j) in g.edges
            and (i, j) not in g.edges and (i2, k) not in g.edges)


def parse_edge_list(lines: Iterable[str]) -> BipartiteGraph:
    """Read ``nx ny`` then ``i j`` lines; '#' comments and blank lines are skipped."""
    header = None
    edges = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}") from None
        if header is None:
            header = (a, b)
        else:
            if (a, b) in edges:
                raise GraphError(f"line {lineno}: duplicate edge ({a},{b})")
            edges.add((a, b))
    if header is None:
        raise GraphError("edge list has no header line")
    return BipartiteGraph(header[0], header[1], frozenset(edges))


def read_edge_list(path) -> BipartiteGraph:
    with open(path) as fh:
        return parse_edge_list(fh)


def format_edge_list(g: BipartiteGraph) -> str:
    lines = [f"{g.nx} {g.ny}"] + [f"{i} {j}" for i, j in sorted(g.edges)]
    return "\n".join(lines) + "\n"
