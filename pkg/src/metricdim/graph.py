"""Simple undirected graphs, BFS distances and the plain-text edge-list format."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

MAX_VERTICES = 4096

# Sentinel for disconnected pairs. Never used in arithmetic: accessors raise on it.
UNREACHABLE = -1


class GraphFormatError(ValueError):
    """Malformed edge-list text; ``line`` is 1-based, or None for end-of-input errors."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class DisconnectedGraphError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` is the canonical edge list: pairs ``(u, v)`` with ``u < v`` in
    lexicographic order. An edge is referred to by its position in that list.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    _edge_index: dict = field(init=False, repr=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [0, {MAX_VERTICES}], got {self.n}")
        canon = sorted(_canonical_pair(u, v, self.n) for u, v in self.edges)
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_edge_index", {e: i for i, e in enumerate(canon)})
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("one label per vertex required")
            object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> "Graph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges), labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge ``uv`` in the canonical edge list."""
        try:
            return self._edge_index[(min(u, v), max(u, v))]
        except KeyError:
            raise KeyError(f"({u}, {v}) is not an edge") from None

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the new->old id map."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        sub_edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph.from_edges(len(keep), sub_edges), keep

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _canonical_pair(u: int, v: int, n: int) -> tuple[int, int]:
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class DistanceMatrix:
    """All-pairs hop distances of a graph, computed once by BFS from every vertex."""

    def __init__(self, g: Graph):
        self.graph = g
        n = g.n
        dist = np.full((n, n), UNREACHABLE, dtype=np.int16)
        for s in range(n):
            row = dist[s]
            row[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                du = row[u] + 1
                for w in g.adjacency[u]:
                    if row[w] == UNREACHABLE:
                        row[w] = du
                        queue.append(w)
        dist.setflags(write=False)
        self.array = dist

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def connected(self) -> bool:
        return not bool((self.array == UNREACHABLE).any())

    def __call__(self, u: int, v: int) -> int:
        d = int(self.array[u, v])
        if d == UNREACHABLE:
            raise DisconnectedGraphError(f"vertices {u} and {v} are not connected")
        return d

    def edge_columns(self) -> np.ndarray:
        """``(m, n)`` array: entry ``[e, v]`` is the distance from edge ``e`` to vertex ``v``."""
        g = self.graph
        if g.m == 0:
            return np.zeros((0, g.n), dtype=np.int16)
        ends = np.asarray(g.edges, dtype=np.intp)
        return np.minimum(self.array[ends[:, 0]], self.array[ends[:, 1]])


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g)


def edge_vertex_distance(d: DistanceMatrix, e: int, v: int) -> int:
    """Distance between the edge at canonical index ``e`` and vertex ``v``."""
    x, y = d.graph.edges[e]
    return min(d(x, v), d(y, v))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def articulation_points(g: Graph) -> set[int]:
    """Cut vertices of a connected graph (iterative Hopcroft-Tarjan low-link)."""
    if not is_connected(g):
        raise DisconnectedGraphError("articulation points requested for a disconnected graph")
    n = g.n
    if n < 3:
        return set()
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    root_children = 0
    # Stack entries: (vertex, parent, next neighbour position)
    stack = [(root, -1, 0)]
    while stack:
        u, parent, i = stack[-1]
        nbrs = g.adjacency[u]
        if i < len(nbrs):
            stack[-1] = (u, parent, i + 1)
            w = nbrs[i]
            if disc[w] == -1:
                timer += 1
                disc[w] = low[w] = timer
                stack.append((w, u, 0))
                if u == root:
                    root_children += 1
            elif w != parent:
                low[u] = min(low[u], disc[w])
        else:
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if parent != root and low[u] >= disc[parent]:
                    cuts.add(parent)
    if root_children > 1:
        cuts.add(root)
    return cuts


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format. Lines starting with '#' are skipped."""
    header = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphFormatError("header must be 'n m'", lineno)
            n, m = _ints(fields, lineno)
            if n < 0 or m < 0:
                raise GraphFormatError("negative count in header", lineno)
            if n > MAX_VERTICES:
                raise GraphFormatError(f"more than {MAX_VERTICES} vertices", lineno)
            header = (n, m)
            continue
        if len(edges) == m:
            raise GraphFormatError(f"more than the declared {m} edges", lineno)
        if len(fields) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        u, v = _ints(fields, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint out of range [0, {n})", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}, first on line {seen[key]}", lineno)
        seen[key] = lineno
        edges.append(key)
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != m:
        raise GraphFormatError(f"expected {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def _ints(fields: list[str], lineno: int) -> tuple[int, int]:
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise GraphFormatError(f"non-integer token in {' '.join(fields)!r}", lineno) from None


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
