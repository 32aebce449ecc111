"""Verification suites for dimensions of subdivided cliques, stars, tori and chains.

Expected values are evaluated from closed forms at run time. A row only passes
on a certified result (or a checker pass backed by an exhaustive refutation).
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from . import constructions as C
from .graph import Graph, all_pairs_distances, articulation_points, is_connected
from .resolver import (Kind, SolveResult, certify_no_generator_of_size, exact_dimension,
                       is_generator, make_piece, piece_lower_bound)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def dim_formula(n: int) -> int:
    return ceil_div(2 * n, 3)


def edim_formula(n: int) -> int:
    return ceil_div(2 * n - 2, 3)


@dataclass
class Row:
    instance: str
    quantity: str
    expected: Any
    source: str
    computed: Any = None
    certificate: str = "-"
    millis: float = 0.0
    passed: bool = False
    note: str = ""

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "instance": self.instance,
            "quantity": self.quantity,
            "expected": self.expected,
            "source": self.source,
            "computed": self.computed,
            "certificate": self.certificate,
            "pass": self.passed,
            "note": self.note,
        }
        if timing:
            out["millis"] = round(self.millis, 3)
        return out


@dataclass
class VerificationReport:
    suite: str
    rows: list[Row] = field(default_factory=list)
    seed: int = 0
    extended: bool = False

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "suite": self.suite,
            "rows": [r.to_dict(timing) for r in self.rows],
            "pass": self.passed,
            "seed": self.seed,
            "extended": self.extended,
        }

    def to_json(self, timing: bool = False, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(timing), indent=indent)

    def table(self) -> str:
        head = ("instance", "quantity", "expected", "computed", "cert", "ms", "ok")
        body = [(r.instance, r.quantity, str(r.expected), str(r.computed), r.certificate,
                 f"{r.millis:.0f}", "PASS" if r.passed else "FAIL") for r in self.rows]
        widths = [max(len(x) for x in col) for col in zip(head, *body)]
        fmt = "  ".join(f"{{:<{w}}}" for w in widths)
        lines = [f"== {self.suite} ==", fmt.format(*head)]
        lines += [fmt.format(*b) for b in body]
        for r in self.rows:
            if r.note:
                lines.append(f"  note [{r.instance} {r.quantity}]: {r.note}")
        lines.append(f"{self.suite}: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _solve_row(report: VerificationReport, instance: str, g: Graph, kind: Kind, expected: int,
               source: str, **options) -> SolveResult | None:
    row = Row(instance, "dim" if kind is Kind.VERTEX else "edim", expected, source)
    t0 = time.perf_counter()
    try:
        result = exact_dimension(g, kind, **options)
    except Exception as exc:  # surfaced as a failed row
        row.note = f"solver error: {exc}"
        row.millis = (time.perf_counter() - t0) * 1000.0
        report.rows.append(row)
        return None
    row.millis = (time.perf_counter() - t0) * 1000.0
    row.computed = result.dimension
    row.certificate = result.certificate.value
    row.passed = result.certified and result.dimension == expected
    if not result.certified:
        row.note = "node budget exhausted; upper bound only"
    report.rows.append(row)
    return result


def _fact_row(report: VerificationReport, instance: str, quantity: str, expected, computed,
              source: str, note: str = "", millis: float = 0.0, certificate: str = "-") -> Row:
    row = Row(instance, quantity, expected, source, computed, certificate, millis,
              expected == computed, note)
    report.rows.append(row)
    return row


def verify_prop1(n_range: Iterable[int] = range(4, 9), budget: int | None = None,
                 extended: bool = False) -> VerificationReport:
    """dim(S(K_n)) = ceil(2n/3) except n = 5 (value 3); edim(S(K_n)) = ceil((2n-2)/3)."""
    report = VerificationReport("prop1", extended=extended)
    for n in n_range:
        if n < 4:
            raise ValueError("prop1 needs n >= 4")
        g, _ = C.subdivide(C.complete(n))
        name = f"subdiv(complete({n}))"
        expected_dim = 3 if n == 5 else dim_formula(n)
        src = "exception value 3" if n == 5 else "ceil(2n/3)"
        _solve_row(report, name, g, Kind.VERTEX, expected_dim, src, budget=budget)
        _solve_row(report, name, g, Kind.EDGE, edim_formula(n), "ceil((2n-2)/3)", budget=budget)
    return report


def thm4_precondition(n: int, k: int) -> bool:
    return k >= 0 and 2 * k <= n and n >= max(4, 3 * k + 4 * (n % 3) - 2)


def verify_thm4(pairs: Iterable[tuple[int, int]] = ((7, 1), (9, 1), (7, 0)),
                budget: int | None = None, extended: bool = False) -> VerificationReport:
    """Certified dim/edim of S(K_n^k) against the closed forms, plus the equal-vs-one-apart pattern."""
    report = VerificationReport("thm4", extended=extended)
    for n, k in pairs:
        name = f"subdiv(cmm({n},{k}))"
        if not thm4_precondition(n, k):
            report.rows.append(Row(name, "precondition", True, "n >= max(4, 3k + 4(n mod 3) - 2)",
                                   False, passed=True, note="skipped: precondition violated"))
            continue
        g, _ = C.subdivide(C.complete_minus_matching(n, k))
        dim = _solve_row(report, name, g, Kind.VERTEX, dim_formula(n), "ceil(2n/3)", budget=budget)
        edim = _solve_row(report, name, g, Kind.EDGE, edim_formula(n), "ceil((2n-2)/3)",
                          budget=budget)
        expected_gap = 0 if n % 3 == 0 else 1
        note = "" if k >= 1 and n >= 3 * k + 6 else "outside n >= 3k+6; pattern follows from the formulas"
        gap = None
        if dim is not None and edim is not None and dim.certified and edim.certified:
            gap = dim.dimension - edim.dimension
        _fact_row(report, name, "dim - edim", expected_gap, gap,
                  "0 if n = 0 mod 3 else 1", note,
                  certificate="certified" if gap is not None else "-")
    return report


def _timed(fn: Callable, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, (time.perf_counter() - t0) * 1000.0


def verify_lemma3(pairs: Iterable[tuple[int, int]] = ((4, 6),), budget: int | None = None,
                  extended: bool = False) -> VerificationReport:
    """Chain graphs: 2-connectivity, edim = c1 by witness + exhaustive refutation, and
    dim = c2 by witness + the boundary-piece lower bound."""
    report = VerificationReport("lemma3", extended=extended)
    for c1, c2 in pairs:
        layout = C.chain(c1, c2)
        g = layout.graph
        name = f"chain({c1},{c2})"
        k = layout.k
        d = all_pairs_distances(g)

        cuts, ms = _timed(articulation_points, g)
        _fact_row(report, name, "articulation points", 0, len(cuts), "2-connected", millis=ms)

        a = 3 * (k - 1)
        _fact_row(report, name, "d(x^k_12, x^1_12)", a, d(layout.midpoint(k, 1, 2),
                                                          layout.midpoint(1, 1, 2)), "3(k-1)")
        _fact_row(report, name, "d(x^k_12, x^1_45)", a + 2, d(layout.midpoint(k, 1, 2),
                                                              layout.midpoint(1, 4, 5)), "3(k-1)+2")

        # edge metric dimension: witness of size c1 and no generator of size c1 - 1
        cand, ms = _timed(C.chain_edge_basis_candidate, layout)
        ok = bool(is_generator(g, d, cand.landmarks, Kind.EDGE))
        _fact_row(report, name, "edge witness size", c1, len(cand.landmarks) if ok else None,
                  "c1", "greedy completion used" if cand.fallback else "", ms)
        ref, ms = _timed(certify_no_generator_of_size, g, Kind.EDGE, c1 - 1, budget, d)
        _fact_row(report, name, f"edge sets of size {c1 - 1} refuted", math.comb(g.n, c1 - 1),
                  ref.sets_checked if ref.refuted else None, f"C({g.n},{c1 - 1})", millis=ms,
                  certificate="exhaustive")
        edim = c1 if ok and ref.refuted else None
        _fact_row(report, name, "edim", c1, edim, "c1",
                  certificate="certified" if edim is not None else "-")

        # metric dimension: witness of size c2 and piece bound c2
        cand, ms = _timed(C.chain_metric_basis_candidate, layout)
        ok = bool(is_generator(g, d, cand.landmarks, Kind.VERTEX))
        _fact_row(report, name, "vertex witness size", c2, len(cand.landmarks) if ok else None,
                  "c2", "greedy completion used" if cand.fallback else "", ms)
        t0 = time.perf_counter()
        pieces = [make_piece(g, layout.copy_vertices(i), Kind.VERTEX, budget=budget)
                  for i in range(1, k + 1)]
        bound = piece_lower_bound(g, pieces, d, Kind.VERTEX)
        _fact_row(report, name, "piece lower bound", c2, bound, "3 + (k-2) + (c1-1)",
                  millis=(time.perf_counter() - t0) * 1000.0)
        for r in sorted({7, layout.q}):
            piece_graph, _ = C.subdivide(C.complete(r))
            c = dim_formula(r)
            ref, ms = _timed(certify_no_generator_of_size, piece_graph, Kind.VERTEX, c - 1, budget)
            _fact_row(report, name, f"piece subdiv(complete({r})) vertex sets of size {c - 1} refuted",
                      math.comb(piece_graph.n, c - 1), ref.sets_checked if ref.refuted else None,
                      f"C({piece_graph.n},{c - 1})", millis=ms, certificate="exhaustive")
        dim = c2 if ok and bound >= c2 else None
        _fact_row(report, name, "dim", c2, dim, "c2",
                  certificate="certified" if dim is not None else "-")
    return report


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


def _builder_rows(report: VerificationReport, name: str, base: Graph) -> None:
    n = base.n
    s, labeling = C.subdivide(base)
    d = all_pairs_distances(s)
    legs = (
        ("dim builder", n // 3, C.theorem2_generator, Kind.VERTEX, dim_formula(n), "ceil(2n/3)"),
        ("edim builder", (n - 1) // 3, C.theorem3_generator, Kind.EDGE, edim_formula(n),
         "ceil((2n-2)/3)"),
    )
    for quantity, triples, builder, kind, size, src in legs:
        t0 = time.perf_counter()
        packing = C.find_p3_packing(base, triples)
        if packing is None:
            report.rows.append(Row(name, quantity, "vacuous", src, "vacuous", "-",
                                   (time.perf_counter() - t0) * 1000.0, True,
                                   f"no {triples} disjoint P3s"))
            continue
        landmarks = builder(labeling, packing)
        ok = bool(is_generator(s, d, landmarks, kind))
        report.rows.append(Row(name, quantity, size, src, len(landmarks) if ok else None,
                               "checker", (time.perf_counter() - t0) * 1000.0,
                               ok and len(landmarks) == size,
                               "" if ok else "builder output is not a generator"))


def verify_bounds(trials: int = 200, n_max: int = 12, edge_prob: float = 0.5, seed: int = 0,
                  extended: bool = False) -> VerificationReport:
    """Generator builders on K_6, star(6) and ``trials`` seeded random connected graphs."""
    report = VerificationReport("bounds", seed=seed, extended=extended)
    _builder_rows(report, "complete(6)", C.complete(6))
    _builder_rows(report, "star(6)", C.star(6))
    rng = random.Random(seed)
    for t in range(trials):
        n = rng.randint(3, n_max)
        g = random_connected_graph(rng, n, edge_prob)
        _builder_rows(report, f"random#{t}(n={n},m={g.m})", g)
    return report


def verify_star(n_list: Iterable[int] = (9,), budget: int | None = None,
                extended: bool = False) -> VerificationReport:
    """dim = edim = n - 2 for the subdivided star on n vertices, exceeding ceil(2n/3) for n >= 9."""
    report = VerificationReport("star", extended=extended)
    for n in n_list:
        g, _ = C.subdivide(C.star(n))
        name = f"subdiv(star({n}))"
        if n >= 9:
            dim = _solve_row(report, name, g, Kind.VERTEX, n - 2, "n-2", budget=budget)
            _solve_row(report, name, g, Kind.EDGE, n - 2, "n-2", budget=budget)
            computed = None if dim is None or not dim.certified else dim.dimension > dim_formula(n)
            _fact_row(report, name, f"dim > ceil(2n/3) = {dim_formula(n)}", True, computed,
                      "n >= 9")
        else:
            for kind in Kind:
                result = exact_dimension(g, kind, budget=budget)
                report.rows.append(Row(name, "dim" if kind is Kind.VERTEX else "edim", None,
                                       "no claim", result.dimension, result.certificate.value,
                                       result.millis, result.certified, "recorded only"))
    return report


def verify_torus(budget: int | None = None, extended: bool = False) -> VerificationReport:
    report = VerificationReport("torus", extended=extended)
    g = C.torus(4, 4)
    _fact_row(report, "torus(4,4)", "vertices", 16, g.n, "4 x 4")
    _solve_row(report, "torus(4,4)", g, Kind.VERTEX, 4, "cited value", budget=budget)
    _solve_row(report, "torus(4,4)", g, Kind.EDGE, 3, "cited value", budget=budget)
    return report


def run_suite(name: str, extended: bool = False, seed: int = 0,
              budget: int | None = None) -> list[VerificationReport]:
    """Default sizes finish in seconds; ``extended`` adds the larger instances."""
    suites = {
        "prop1": lambda: verify_prop1(range(4, 11 if extended else 9), budget, extended),
        "thm4": lambda: verify_thm4([(7, 1), (9, 1), (7, 0)]
                                    + ([(10, 1), (10, 2)] if extended else []), budget, extended),
        "lemma3": lambda: verify_lemma3([(4, 6)] + ([(4, 7), (5, 7)] if extended else []),
                                        budget, extended),
        "bounds": lambda: verify_bounds(200, 12, 0.5, seed, extended),
        "star": lambda: verify_star((9, 10) if extended else (9,), budget, extended),
        "torus": lambda: verify_torus(budget, extended),
    }
    if name == "all":
        return [suites[s]() for s in suites]
    if name not in suites:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join([*suites, 'all'])}")
    return [suites[name]()]


SUITES = ("prop1", "thm4", "lemma3", "bounds", "star", "torus", "all")
