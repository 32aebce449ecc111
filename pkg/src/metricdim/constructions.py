"""Graph families: complete graphs minus a matching, stars, cycles, tori,
full subdivisions, and the two-connector chain of subdivided cliques.

Base-graph vertices are 0-based here. Where the generator builders talk about
"position 1, 2, ..." they mean the order produced by :func:`packing_order`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph
from .resolver import Kind, is_generator, all_pairs_distances, _greedy, PairSystem


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_minus_matching(n: int, k: int) -> Graph:
    """K_n without the matching (0,1), (2,3), ..., (2k-2, 2k-1)."""
    if k < 0 or 2 * k > n:
        raise ValueError(f"cmm(n, k) needs 0 <= 2k <= n, got n={n}, k={k}")
    if n < 1:
        raise ValueError("cmm(n, k) needs n >= 1")
    removed = {(2 * i, 2 * i + 1) for i in range(k)}
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)
                                if (u, v) not in removed))


def star(n: int) -> Graph:
    """K_{n-1,1}: centre 0 joined to leaves 1..n-1."""
    if n < 2:
        raise ValueError("star(n) needs n >= 2")
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle(n) needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path(n) needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def torus(a: int, b: int) -> Graph:
    """Cartesian product C_a x C_b; vertex (i, j) gets id i*b + j."""
    if a < 3 or b < 3:
        raise ValueError(f"torus(a, b) needs a, b >= 3, got a={a}, b={b}")
    edges = []
    for i in range(a):
        for j in range(b):
            v = i * b + j
            edges.append((v, i * b + (j + 1) % b))
            edges.append((v, ((i + 1) % a) * b + j))
    return Graph.from_edges(a * b, edges)


@dataclass(frozen=True)
class Original:
    vertex: int


@dataclass(frozen=True)
class Midpoint:
    u: int
    v: int


@dataclass(frozen=True)
class SubdivisionLabeling:
    """Roles of the vertices of S(G).

    Original vertices keep their ids ``0..n-1``; the midpoint of the base edge
    with canonical index ``e`` gets id ``n + e``.
    """

    base: Graph
    roles: tuple

    @property
    def n_vertices(self) -> int:
        return len(self.roles)

    def original(self, i: int) -> int:
        if not 0 <= i < self.base.n:
            raise KeyError(f"no original vertex {i}")
        return i

    def midpoint(self, i: int, j: int) -> int:
        return self.base.n + self.base.edge_index(i, j)


def subdivide(g: Graph) -> tuple[Graph, SubdivisionLabeling]:
    n = g.n
    edges = []
    for e, (u, v) in enumerate(g.edges):
        edges.append((u, n + e))
        edges.append((v, n + e))
    roles = tuple([Original(i) for i in range(n)] + [Midpoint(u, v) for u, v in g.edges])
    return Graph.from_edges(n + g.m, edges), SubdivisionLabeling(g, roles)


P3Packing = tuple  # tuple of (a, b, c) triples; a-b and b-c are base edges


def find_p3_packing(g: Graph, count: int) -> P3Packing | None:
    """Backtracking search for ``count`` vertex-disjoint paths a-b-c.

    Middle vertices are tried by decreasing degree (ties by id), ends by id.
    Returns None only after the search space is exhausted.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    if 3 * count > g.n:
        return None
    middles = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    used = [False] * g.n
    chosen: list[tuple[int, int, int]] = []

    def extend(start: int) -> bool:
        if len(chosen) == count:
            return True
        # Middles are taken in a fixed order so each packing is generated once.
        for idx in range(start, len(middles)):
            b = middles[idx]
            if used[b]:
                continue
            free = [w for w in g.adjacency[b] if not used[w]]
            if len(free) < 2:
                continue
            used[b] = True
            for ia in range(len(free)):
                a = free[ia]
                used[a] = True
                for c in free[ia + 1:]:
                    if used[c]:
                        continue
                    used[c] = True
                    chosen.append((a, b, c))
                    if extend(idx + 1):
                        return True
                    chosen.pop()
                    used[c] = False
                used[a] = False
            used[b] = False
        return False

    return tuple(chosen) if extend(0) else None


def packing_order(n: int, packing: Sequence[Sequence[int]], triples: int) -> list[int]:
    """Base vertices in builder position order: packed triples first, then the rest by id."""
    if len(packing) < triples:
        raise ValueError(f"packing has {len(packing)} paths, {triples} required")
    order: list[int] = []
    for a, b, c in packing[:triples]:
        order.extend((a, b, c))
    if len(set(order)) != len(order):
        raise ValueError("packing paths are not vertex-disjoint")
    placed = set(order)
    order.extend(v for v in range(n) if v not in placed)
    return order


def _check_packing(base: Graph, packing: Sequence[Sequence[int]], triples: int) -> None:
    for a, b, c in packing[:triples]:
        if not (base.has_edge(a, b) and base.has_edge(b, c)):
            raise ValueError(f"({a}, {b}, {c}) is not a path of length 2 in the base graph")


def _paired_midpoints(labeling: SubdivisionLabeling, order: list[int], alpha: int) -> list[int]:
    out = []
    for t in range(0, alpha, 3):
        a, b, c = order[t:t + 3]
        out.append(labeling.midpoint(a, b))
        out.append(labeling.midpoint(b, c))
    return out


def theorem2_generator(labeling: SubdivisionLabeling, packing: P3Packing) -> tuple[int, ...]:
    """Metric generator of S(G) of size ceil(2n/3) from floor(n/3) disjoint P3s.

    Two midpoints per packed path, plus the last original vertex when n = 1 mod 3,
    or the last two when n = 2 mod 3.
    """
    base = labeling.base
    n = base.n
    triples = n // 3
    _check_packing(base, packing, triples)
    order = packing_order(n, packing, triples)
    chosen = _paired_midpoints(labeling, order, 3 * triples)
    tail = {0: 0, 1: 1, 2: 2}[n % 3]
    chosen.extend(labeling.original(v) for v in order[n - tail:])
    return tuple(sorted(chosen))


def theorem3_generator(labeling: SubdivisionLabeling, packing: P3Packing) -> tuple[int, ...]:
    """Edge metric generator of S(G) of size ceil((2n-2)/3) from floor((n-1)/3) disjoint P3s.

    The last vertex in position order is left out and has no chosen neighbour.
    """
    base = labeling.base
    n = base.n
    triples = (n - 1) // 3
    _check_packing(base, packing, triples)
    order = packing_order(n, packing, triples)
    chosen = _paired_midpoints(labeling, order, 3 * triples)
    tail = {1: 0, 2: 1, 0: 2}[n % 3]
    chosen.extend(labeling.original(v) for v in order[n - 1 - tail:n - 1])
    return tuple(sorted(chosen))


def lemma1_q(c1: int) -> int:
    """Smallest q with edim(S(K_q)) = c1 and dim(S(K_q)) = c1 + 1."""
    if c1 in (0, 1, 3) or c1 < 0:
        raise ValueError(f"c1 must be >= 2 and != 3 (no clique subdivision realises edim {c1} "
                         "with dim one larger)")
    t, odd = divmod(c1, 2)
    return 3 * t + 2 if odd else 3 * t + 1


@dataclass(frozen=True)
class ChainLayout:
    """G_{c1,c2}: k = c2 - c1 subdivided cliques joined two connector edges at a time.

    Copy ``i`` (1-based) occupies ids ``offsets[i-1] .. offsets[i-1] + size - 1``
    with the numbering of :func:`subdivide`. Copies 1..k-1 are S(K_7), copy k is S(K_q).
    """

    graph: Graph
    labelings: tuple[SubdivisionLabeling, ...]
    offsets: tuple[int, ...]
    connectors: tuple[tuple[int, int], ...]
    c1: int
    c2: int
    k: int
    q: int

    def vertex(self, copy: int, i: int) -> int:
        """Global id of v^copy_i (1-based position i)."""
        return self.offsets[copy - 1] + self.labelings[copy - 1].original(i - 1)

    def midpoint(self, copy: int, i: int, j: int) -> int:
        """Global id of x^copy_{i,j} (1-based positions)."""
        return self.offsets[copy - 1] + self.labelings[copy - 1].midpoint(i - 1, j - 1)

    def copy_vertices(self, copy: int) -> range:
        start = self.offsets[copy - 1]
        return range(start, start + self.labelings[copy - 1].n_vertices)


def chain(c1: int, c2: int) -> ChainLayout:
    if c1 < 4 or c2 < c1 + 2:
        raise ValueError(f"chain(c1, c2) needs 4 <= c1 and c2 >= c1 + 2 (edim b and dim a with "
                         f"4 <= b < a, a - b >= 2), got c1={c1}, c2={c2}")
    k = c2 - c1
    q = lemma1_q(c1)
    labelings = []
    offsets = []
    edges: list[tuple[int, int]] = []
    offset = 0
    for i in range(1, k + 1):
        sub, lab = subdivide(complete(7 if i < k else q))
        labelings.append(lab)
        offsets.append(offset)
        edges.extend((u + offset, v + offset) for u, v in sub.edges)
        offset += sub.n
    layout_stub = ChainLayout(Graph.from_edges(0, ()), tuple(labelings), tuple(offsets), (),
                              c1, c2, k, q)
    connectors = []
    for i in range(1, k):
        connectors.append((layout_stub.midpoint(i, 1, 2), layout_stub.midpoint(i + 1, 2, 3)))
        connectors.append((layout_stub.midpoint(i, 4, 5), layout_stub.midpoint(i + 1, 5, 6)))
    edges.extend(connectors)
    return ChainLayout(Graph.from_edges(offset, edges), tuple(labelings), tuple(offsets),
                       tuple(connectors), c1, c2, k, q)


def _identity_packing(r: int, triples: int) -> P3Packing:
    return tuple((3 * t, 3 * t + 1, 3 * t + 2) for t in range(triples))


@dataclass(frozen=True)
class ChainCandidate:
    landmarks: tuple[int, ...]
    composed: tuple[int, ...]
    fallback: bool


def _validated(layout: ChainLayout, composed: list[int], kind: Kind, size: int) -> ChainCandidate:
    g = layout.graph
    d = all_pairs_distances(g)
    composed_t = tuple(sorted(set(composed)))
    if is_generator(g, d, composed_t, kind):
        return ChainCandidate(composed_t, composed_t, False)
    completed = _greedy(PairSystem(d, kind), composed_t)
    if len(completed) != size or not is_generator(g, d, completed, kind):
        raise RuntimeError(f"chain({layout.c1}, {layout.c2}) {kind.value} candidate failed "
                           "validation and greedy completion")
    return ChainCandidate(completed, composed_t, True)


def chain_edge_basis_candidate(layout: ChainLayout) -> ChainCandidate:
    """Edge generator of size c1: the copy-k edge builder set with x^k_{2,3}, x^k_{5,6}
    swapped for x^1_{2,3}, x^1_{5,6}."""
    k, q = layout.k, layout.q
    lab = layout.labelings[k - 1]
    local = theorem3_generator(lab, _identity_packing(q, (q - 1) // 3))
    drop = {lab.midpoint(1, 2), lab.midpoint(4, 5)}
    chosen = [layout.offsets[k - 1] + v for v in local if v not in drop]
    chosen += [layout.midpoint(1, 2, 3), layout.midpoint(1, 5, 6)]
    return _validated(layout, chosen, Kind.EDGE, layout.c1)


def chain_metric_basis_candidate(layout: ChainLayout) -> ChainCandidate:
    """Metric generator of size c2.

    Copy k keeps its vertex builder set minus x^k_{2,3}, x^k_{5,6} (c1 - 1 vertices).
    Copy 1 gets x^1_{2,3}, x^1_{5,6}, v^1_7 and every middle copy gets v^i_7.
    """
    k, q = layout.k, layout.q
    lab = layout.labelings[k - 1]
    local = theorem2_generator(lab, _identity_packing(q, q // 3))
    drop = {lab.midpoint(1, 2), lab.midpoint(4, 5)}
    chosen = [layout.offsets[k - 1] + v for v in local if v not in drop]
    chosen += [layout.midpoint(1, 2, 3), layout.midpoint(1, 5, 6), layout.vertex(1, 7)]
    chosen += [layout.vertex(i, 7) for i in range(2, k)]
    return _validated(layout, chosen, Kind.VERTEX, layout.c2)


def chain_pieces_vertices(layout: ChainLayout) -> list[range]:
    return [layout.copy_vertices(i) for i in range(1, layout.k + 1)]
