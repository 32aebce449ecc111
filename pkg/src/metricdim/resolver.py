"""Resolving-set checks, bounds and exact (edge) metric dimension.

Every object pair (two vertices, or two edges) must be told apart by some
landmark. For each pair we precompute the set of vertices that distinguish
it, which turns the dimension into a minimum hitting set over pairs. Pairs
are sorted by how few vertices distinguish them and stored as bit positions,
so ``unhit & -unhit`` always yields the hardest unresolved pair.
"""

from __future__ import annotations

import enum
import itertools
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .graph import DisconnectedGraphError, DistanceMatrix, Graph, all_pairs_distances


class Kind(enum.Enum):
    VERTEX = "vertex"
    EDGE = "edge"

    @classmethod
    def coerce(cls, value) -> "Kind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"kind must be 'vertex' or 'edge', got {value!r}") from None


class Certificate(enum.Enum):
    CERTIFIED = "certified"
    UPPER_BOUND_ONLY = "upper_bound_only"


class BudgetExhausted(RuntimeError):
    pass


class CheckResult(NamedTuple):
    ok: bool
    pair: tuple[int, int] | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class SolveResult:
    kind: Kind
    dimension: int
    witness: tuple[int, ...]
    certificate: Certificate
    nodes: int = 0
    sets_checked: int = 0
    millis: float = 0.0
    lower_bound: int = 0

    @property
    def certified(self) -> bool:
        return self.certificate is Certificate.CERTIFIED

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "dimension": self.dimension,
            "witness": list(self.witness),
            "certificate": self.certificate.value,
            "nodes": self.nodes,
            "sets_checked": self.sets_checked,
            "millis": round(self.millis, 3),
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


@dataclass(frozen=True)
class Refutation:
    """Outcome of an exhaustive scan over all landmark sets of one size."""

    kind: Kind
    size: int
    refuted: bool
    sets_checked: int
    counterexample: tuple[int, ...] | None = None


@dataclass(frozen=True)
class BoundaryPiece:
    """A vertex set of the host graph together with its boundary and certified dimension."""

    vertices: frozenset[int]
    boundary: tuple[int, ...]
    dimension: int
    kind: Kind
    certified: bool = True


def _require_connected(d: DistanceMatrix) -> None:
    if not d.connected:
        raise DisconnectedGraphError("(edge) metric dimension is only defined for connected graphs")


def _object_rows(d: DistanceMatrix, kind: Kind) -> np.ndarray:
    """Rows are the objects to distinguish, columns the candidate landmarks."""
    return d.array if kind is Kind.VERTEX else d.edge_columns()


def _mask_to_ids(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _pack_rows(bits: np.ndarray) -> list[int]:
    """Each row of a boolean matrix as a little-endian Python int."""
    if bits.shape[1] == 0:
        return [0] * bits.shape[0]
    packed = np.packbits(bits, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


class PairSystem:
    """Hitting-set view of the resolving problem for one graph and kind."""

    def __init__(self, d: DistanceMatrix, kind: Kind):
        _require_connected(d)
        self.kind = kind
        self.n = d.n
        rows = _object_rows(d, kind)
        self.n_objects = rows.shape[0]
        ia, ib = np.triu_indices(self.n_objects, 1)
        diff = rows[ia] != rows[ib]
        counts = diff.sum(axis=1)
        if counts.size and counts.min() == 0:
            i = int(np.argmin(counts))
            raise ValueError(f"objects {ia[i]} and {ib[i]} cannot be distinguished by any vertex")
        order = np.argsort(counts, kind="stable")
        diff = diff[order]
        self.pairs = list(zip(ia[order].tolist(), ib[order].tolist()))
        self.pair_counts = counts[order]
        self.n_pairs = len(self.pairs)
        self.full = (1 << self.n_pairs) - 1
        self.pair_mask = _pack_rows(diff)
        self.cover = _pack_rows(np.ascontiguousarray(diff.T))

    def unhit_after(self, landmarks: Iterable[int]) -> int:
        unhit = self.full
        for v in landmarks:
            unhit &= ~self.cover[v]
        return unhit


def signature_of(d: DistanceMatrix, s: Sequence[int], target: int, kind) -> tuple[int, ...]:
    """Distances from each landmark to ``target`` (a vertex id, or an edge index for edges)."""
    kind = Kind.coerce(kind)
    if kind is Kind.VERTEX:
        return tuple(d(v, target) for v in s)
    x, y = d.graph.edges[target]
    return tuple(min(d(x, v), d(y, v)) for v in s)


def is_generator(g: Graph, d: DistanceMatrix | None, s: Sequence[int], kind) -> CheckResult:
    """Check whether ``s`` resolves all vertices (or edges); on failure report one colliding pair."""
    kind = Kind.coerce(kind)
    d = d if d is not None else all_pairs_distances(g)
    _require_connected(d)
    s = list(s)
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"landmark {v} is not a vertex")
    rows = _object_rows(d, kind)[:, s]
    # Sorting instead of hashing keeps the reported pair platform independent.
    keyed = sorted((tuple(int(x) for x in rows[i]), i) for i in range(rows.shape[0]))
    for (sa, a), (sb, b) in zip(keyed, keyed[1:]):
        if sa == sb:
            return CheckResult(False, (a, b))
    return CheckResult(True, None)


def greedy_generator(g: Graph, kind, d: DistanceMatrix | None = None) -> tuple[int, ...]:
    """Add the vertex resolving the most open pairs until everything is resolved."""
    kind = Kind.coerce(kind)
    d = d if d is not None else all_pairs_distances(g)
    return _greedy(PairSystem(d, kind))


def _greedy(system: PairSystem, start: Sequence[int] = ()) -> tuple[int, ...]:
    return tuple(sorted(set(greedy_order(system, start))))


def greedy_order(system: PairSystem, start: Sequence[int] = ()) -> list[int]:
    """Greedy landmarks in insertion order; ties go to the lowest vertex id."""
    chosen = list(start)
    unhit = system.unhit_after(chosen)
    while unhit:
        best, best_gain = -1, 0
        for v in range(system.n):
            gain = (system.cover[v] & unhit).bit_count()
            if gain > best_gain:
                best, best_gain = v, gain
        chosen.append(best)
        unhit &= ~system.cover[best]
    return chosen


def twin_lower_bound(g: Graph, d: DistanceMatrix | None, kind) -> int:
    """Lower bound from pairs that only one or two vertices can tell apart.

    A pair distinguished by a single vertex forces that vertex. Pairs distinguished
    by exactly ``{u, v}`` link ``u`` and ``v``; any generator is a vertex cover of
    these links. For vertex twins the links form cliques (a clique on ``s`` vertices
    needs ``s - 1``); other components contribute a greedy matching.
    """
    kind = Kind.coerce(kind)
    d = d if d is not None else all_pairs_distances(g)
    system = PairSystem(d, kind)
    return _twin_bound(system)


def _twin_bound(system: PairSystem) -> int:
    if system.n_pairs == 0:
        return 0
    forced: set[int] = set()
    links: set[tuple[int, int]] = set()
    for p, c in enumerate(system.pair_counts):
        if c > 2:
            break
        ids = _mask_to_ids(system.pair_mask[p])
        if c == 1:
            forced.add(ids[0])
        else:
            links.add((ids[0], ids[1]))
    links = {(u, v) for u, v in links if u not in forced and v not in forced}
    adj: dict[int, set[int]] = {}
    for u, v in links:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    bound = len(forced)
    seen: set[int] = set()
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        size = len(comp)
        if all(len(adj[u]) == size - 1 for u in comp):
            bound += size - 1
        else:
            matched: set[int] = set()
            for u in sorted(comp):
                if u in matched:
                    continue
                for w in sorted(adj[u]):
                    if w not in matched:
                        matched |= {u, w}
                        bound += 1
                        break
    return max(bound, 1)


def piece_boundary(g: Graph, vertices: Iterable[int]) -> tuple[int, ...]:
    """Vertices of the set that have a neighbour outside it, ascending."""
    inside = set(vertices)
    return tuple(v for v in sorted(inside) if any(w not in inside for w in g.adjacency[v]))


def is_isometric(g: Graph, d: DistanceMatrix, vertices: Iterable[int]) -> bool:
    """True iff distances inside the induced subgraph equal the host distances."""
    sub, keep = g.induced_subgraph(vertices)
    sub_d = all_pairs_distances(sub)
    return bool(np.array_equal(sub_d.array, d.array[np.ix_(keep, keep)]))


def make_piece(g: Graph, vertices: Iterable[int], kind, d: DistanceMatrix | None = None,
               **solve_options) -> BoundaryPiece:
    """Build a piece: boundary from ``g`` and dimension from a solve of the induced subgraph."""
    kind = Kind.coerce(kind)
    vertices = frozenset(vertices)
    sub, _ = g.induced_subgraph(vertices)
    result = exact_dimension(sub, kind, **solve_options)
    return BoundaryPiece(vertices, piece_boundary(g, vertices), result.dimension, kind,
                         result.certified)


def piece_lower_bound(g: Graph, pieces: Sequence[BoundaryPiece], d: DistanceMatrix | None = None,
                      kind=None) -> int:
    """Sum over disjoint pieces of ``max(0, c - t)``.

    Outside vertices only see a piece through its boundary, so a generator of the
    host must contain ``c - t`` vertices of each piece's interior. This needs the
    piece to be isometric; non-isometric pieces are refused.
    """
    d = d if d is not None else all_pairs_distances(g)
    kinds = {p.kind for p in pieces}
    if kind is not None:
        kinds.add(Kind.coerce(kind))
    if len(kinds) > 1:
        raise ValueError("pieces mix vertex and edge dimensions")
    used: set[int] = set()
    total = 0
    for i, piece in enumerate(pieces):
        if used & piece.vertices:
            raise ValueError(f"piece {i} overlaps an earlier piece")
        used |= piece.vertices
        if not piece.certified:
            raise ValueError(f"piece {i} has an uncertified dimension")
        if piece.boundary != piece_boundary(g, piece.vertices):
            raise ValueError(f"piece {i} boundary does not match the graph")
        if not is_isometric(g, d, piece.vertices):
            raise ValueError(f"piece {i} is not isometric in the host graph")
        total += max(0, piece.dimension - len(piece.boundary))
    return total


class _Search:
    """Depth-first search for a hitting set of a fixed size."""

    def __init__(self, system: PairSystem, budget: int | None = None):
        self.system = system
        self.budget = budget
        self.nodes = 0
        self.sets_checked = 0

    def find(self, size: int, include: Sequence[int] = (), exclude: int = 0):
        unhit = self.system.unhit_after(include)
        found = self._dfs(unhit, list(include), exclude, size - len(include))
        return None if found is None else tuple(sorted(found))

    def _dfs(self, unhit: int, chosen: list[int], excluded: int, remaining: int):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted(f"node budget {self.budget} exhausted")
        if not unhit:
            self.sets_checked += 1
            return chosen
        if remaining <= 0:
            self.sets_checked += 1
            return None
        system = self.system
        cover = system.cover
        p = (unhit & -unhit).bit_length() - 1
        candidates = system.pair_mask[p] & ~excluded
        if not candidates:
            return None
        if remaining == 1:
            for v in _mask_to_ids(candidates):
                self.sets_checked += 1
                if not unhit & ~cover[v]:
                    return chosen + [v]
            return None
        # Prune when the best `remaining` vertices together cannot cover what is left.
        need = unhit.bit_count()
        allowed = ~excluded
        gains = sorted(((cover[v] & unhit).bit_count() for v in range(system.n) if allowed >> v & 1),
                       reverse=True)
        if sum(gains[:remaining]) < need:
            return None
        for v in _mask_to_ids(candidates):
            found = self._dfs(unhit & ~cover[v], chosen + [v], excluded, remaining - 1)
            if found is not None:
                return found
            excluded |= 1 << v
        return None


def _root_branches(system: PairSystem):
    """(include, exclude) pairs splitting the search at the first branching level."""
    p = 0
    candidates = _mask_to_ids(system.pair_mask[p])
    branches = []
    excluded = 0
    for v in candidates:
        branches.append(((v,), excluded))
        excluded |= 1 << v
    return branches


def _solve_branch(args):
    system, size, include, exclude, budget = args
    search = _Search(system, budget)
    try:
        found = search.find(size, include, exclude)
    except BudgetExhausted:
        return None, search.nodes, search.sets_checked, True
    return found, search.nodes, search.sets_checked, False


class _Driver:
    def __init__(self, system: PairSystem, budget: int | None, threads: int):
        self.system = system
        self.budget = budget
        self.threads = max(1, threads)
        self.nodes = 0
        self.sets_checked = 0

    def _left(self):
        return None if self.budget is None else max(0, self.budget - self.nodes)

    def find(self, size: int):
        if size <= 0 or self.threads == 1 or self.system.n_pairs == 0:
            search = _Search(self.system, self._left())
            try:
                return search.find(size)
            finally:
                self.nodes += search.nodes
                self.sets_checked += search.sets_checked
        branches = _root_branches(self.system)
        jobs = [(self.system, size, inc, exc, self._left()) for inc, exc in branches]
        with ProcessPoolExecutor(max_workers=self.threads) as pool:
            outcomes = list(pool.map(_solve_branch, jobs))
        exhausted = False
        best = None
        for found, nodes, checked, hit_budget in outcomes:
            self.nodes += nodes
            self.sets_checked += checked
            exhausted |= hit_budget
            if found is not None and best is None:
                best = found
        if best is None and exhausted:
            raise BudgetExhausted(f"node budget {self.budget} exhausted")
        return best


def exact_dimension(g: Graph, kind, *, use_bounds: bool = True,
                    pieces: Sequence[BoundaryPiece] | None = None, threads: int = 1,
                    deterministic: bool = True, budget: int | None = None,
                    d: DistanceMatrix | None = None) -> SolveResult:
    """Minimum (edge) metric generator by iterative deepening branch and bound.

    Sizes are tried upward from the best structural lower bound. The first size
    with a generator is optimal because the size below it was either refuted by
    the complete search or ruled out by the bound. With ``deterministic`` the search
    is single threaded and the witness is the first optimal set in branching order
    (hardest open pair first, its distinguishing vertices by ascending id).
    """
    kind = Kind.coerce(kind)
    t0 = time.perf_counter()
    d = d if d is not None else all_pairs_distances(g)
    system = PairSystem(d, kind)
    threads = 1 if deterministic else threads

    def done(dimension, witness, certificate, driver=None, lower=0):
        return SolveResult(kind, dimension, tuple(witness), certificate,
                           driver.nodes if driver else 0, driver.sets_checked if driver else 0,
                           (time.perf_counter() - t0) * 1000.0, lower)

    if system.n_pairs == 0:
        return done(0, (), Certificate.CERTIFIED)
    greedy = _greedy(system)
    upper = len(greedy)
    lower = 1
    if use_bounds:
        lower = max(lower, _twin_bound(system))
    if pieces:
        lower = max(lower, piece_lower_bound(g, pieces, d, kind))
    if lower > upper:
        raise AssertionError(f"lower bound {lower} exceeds greedy upper bound {upper}")

    driver = _Driver(system, budget, threads)
    try:
        for size in range(lower, upper):
            found = driver.find(size)
            if found is not None:
                return done(size, found, Certificate.CERTIFIED, driver, lower)
        witness = greedy
        if deterministic:
            witness = driver.find(upper) or greedy
        return done(upper, witness, Certificate.CERTIFIED, driver, lower)
    except BudgetExhausted:
        return done(upper, greedy, Certificate.UPPER_BOUND_ONLY, driver, lower)


def certify_no_generator_of_size(g: Graph, kind, size: int, budget: int | None = None,
                                 d: DistanceMatrix | None = None) -> Refutation:
    """Scan every landmark set of ``size`` vertices; stop at the first generator.

    ``sets_checked`` equals ``C(n, size)`` when the size is refuted. ``budget`` caps the
    number of sets and raises :class:`BudgetExhausted` when it would be exceeded.
    """
    kind = Kind.coerce(kind)
    if size < 0:
        raise ValueError("size must be non-negative")
    d = d if d is not None else all_pairs_distances(g)
    system = PairSystem(d, kind)
    n, cover, full = system.n, system.cover, system.full
    total = math.comb(n, size)
    if budget is not None and total > budget:
        raise BudgetExhausted(f"{total} candidate sets exceed the budget of {budget}")
    if size == 0 or size > n:
        ok = size == 0 and full == 0
        return Refutation(kind, size, not ok, 1 if size == 0 else 0, () if ok else None)

    checked = 0
    prefix: list[int] = []

    def scan(start: int, depth: int, acc: int):
        nonlocal checked
        if depth == size - 1:
            for v in range(start, n):
                if acc | cover[v] == full:
                    checked += v - start + 1
                    return prefix + [v]
            checked += n - start
            return None
        for v in range(start, n - (size - depth) + 1):
            prefix.append(v)
            found = scan(v + 1, depth + 1, acc | cover[v])
            prefix.pop()
            if found is not None:
                return found
        return None

    found = scan(0, 0, 0)
    if found is not None:
        return Refutation(kind, size, False, checked, tuple(found))
    return Refutation(kind, size, True, checked)


NAIVE_MAX_VERTICES = 20


def naive_oracle(g: Graph, kind) -> SolveResult:
    """Brute force: smallest subset, in size then lexicographic order, with distinct signatures.

    Shares nothing with the pair machinery above except the BFS distances.
    """
    kind = Kind.coerce(kind)
    if g.n > NAIVE_MAX_VERTICES:
        raise ValueError(f"naive oracle is capped at {NAIVE_MAX_VERTICES} vertices")
    t0 = time.perf_counter()
    d = all_pairs_distances(g)
    _require_connected(d)
    dist = d.array.tolist()
    if kind is Kind.VERTEX:
        objects = [[dist[o][v] for v in range(g.n)] for o in range(g.n)]
    else:
        objects = [[min(dist[x][v], dist[y][v]) for v in range(g.n)] for x, y in g.edges]
    checked = 0
    for size in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            checked += 1
            sigs = {tuple(row[v] for v in subset) for row in objects}
            if len(sigs) == len(objects):
                return SolveResult(kind, size, subset, Certificate.CERTIFIED, 0, checked,
                                   (time.perf_counter() - t0) * 1000.0, size)
    raise AssertionError("the full vertex set always resolves a connected graph")
