"""Tiny construction language.

    spec := name "(" int { "," int } ")" | "subdiv" "(" spec ")"
    int  := decimal >= 0

Keywords are lowercase; whitespace is ignored. Errors carry the byte offset
of the offending token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import constructions as C
from .graph import Graph

MAX_DEPTH = 8


class SpecError(ValueError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"offset {offset}: {message}")


def _min(lo):
    return lambda v: v >= lo


# name -> (arity, [(check, description)] per argument, optional cross-argument check)
_CONSTRUCTORS = {
    "complete": (1, [(_min(1), "n >= 1")], None),
    "cmm": (2, [(_min(1), "n >= 1"), (_min(0), "k >= 0")],
            (lambda n, k: 2 * k <= n, "2k <= n")),
    "star": (1, [(_min(2), "n >= 2")], None),
    "cycle": (1, [(_min(3), "n >= 3")], None),
    "path": (1, [(_min(1), "n >= 1")], None),
    "torus": (2, [(_min(3), "a >= 3"), (_min(3), "b >= 3")], None),
    "chain": (2, [(_min(4), "c1 >= 4 (needs 4 <= edim < dim)"), (_min(0), "c2 >= 0")],
              (lambda c1, c2: c2 >= c1 + 2, "c2 >= c1 + 2 (needs 4 <= edim < dim, gap >= 2)")),
}


@dataclass(frozen=True)
class Leaf:
    name: str
    args: tuple[int, ...]

    def __str__(self):
        return f"{self.name}({','.join(map(str, self.args))})"


@dataclass(frozen=True)
class Subdiv:
    inner: "Leaf | Subdiv"

    def __str__(self):
        return f"subdiv({self.inner})"


ConstructionSpec = Leaf | Subdiv

_TOKEN = re.compile(r"\s*(?:(?P<name>[a-z]+)|(?P<int>[0-9]+)|(?P<punct>[(),]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    raw = text.encode()
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            while text[pos].isspace():
                pos += 1
            raise SpecError(f"unexpected character {text[pos]!r}", len(text[:pos].encode()))
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), len(text[:start].encode())))
        pos = m.end()
    tokens.append(("end", "", len(raw)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind, value=None):
        tok = self.tokens[self.i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = repr(value) if value else kind
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise SpecError(f"expected {want}, got {got}", tok[2])
        self.i += 1
        return tok

    def spec(self, depth: int):
        _, name, offset = self.take("name")
        if depth > MAX_DEPTH:
            raise SpecError(f"nesting deeper than {MAX_DEPTH}", offset)
        self.take("punct", "(")
        if name == "subdiv":
            inner = self.spec(depth + 1)
            self.take("punct", ")")
            return Subdiv(inner)
        if name not in _CONSTRUCTORS:
            raise SpecError(f"unknown constructor {name!r}", offset)
        args, offsets = [], []
        while True:
            _, value, off = self.take("int")
            args.append(int(value))
            offsets.append(off)
            if self.peek()[1] == ",":
                self.take("punct", ",")
                continue
            self.take("punct", ")")
            break
        arity, checks, joint = _CONSTRUCTORS[name]
        if len(args) != arity:
            raise SpecError(f"{name} takes {arity} argument(s), got {len(args)}", offset)
        for value, off, (check, desc) in zip(args, offsets, checks):
            if not check(value):
                raise SpecError(f"{name}: argument {value} out of range, need {desc}", off)
        if joint is not None and not joint[0](*args):
            raise SpecError(f"{name}{tuple(args)}: need {joint[1]}", offset)
        return Leaf(name, tuple(args))


def parse_spec(text: str) -> ConstructionSpec:
    parser = _Parser(text)
    tree = parser.spec(1)
    tok = parser.peek()
    if tok[0] != "end":
        raise SpecError(f"trailing input {tok[1]!r}", tok[2])
    return tree


@dataclass(frozen=True)
class Construction:
    graph: Graph
    labeling: C.SubdivisionLabeling | None = None
    layout: C.ChainLayout | None = None


def eval_spec(spec: ConstructionSpec | str) -> Construction:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if isinstance(spec, Subdiv):
        g, labeling = C.subdivide(eval_spec(spec.inner).graph)
        return Construction(g, labeling=labeling)
    a = spec.args
    if spec.name == "chain":
        layout = C.chain(*a)
        return Construction(layout.graph, layout=layout)
    builders = {
        "complete": C.complete,
        "cmm": C.complete_minus_matching,
        "star": C.star,
        "cycle": C.cycle,
        "path": C.path,
        "torus": C.torus,
    }
    return Construction(builders[spec.name](*a))
