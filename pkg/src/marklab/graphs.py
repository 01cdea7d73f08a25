"""Simple graphs on dense integer vertices: the standard families, join and
deletion operations, and parsers for the two graph input formats."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

__all__ = [
    "Graph",
    "ParseError",
    "all_pairs",
    "make_complete",
    "make_empty",
    "make_cycle",
    "make_path",
    "join",
    "delete_vertex",
    "delete_edge",
    "induced_subgraph",
    "augment_isolated",
    "relabel",
    "isomorphic",
    "parse_edge_list",
    "render_edge_list",
    "load_graph_text",
    "parse_family",
    "parse_family_expr",
    "FamilyExpr",
    "Family",
    "FamilyJoin",
    "FamilyDelete",
    "FamilyMinusEdge",
]


class ParseError(ValueError):
    """Rejected input text, with the 1-based line and column of the offence."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is one bitmask int per vertex, the form the solver consumes
    directly; treat instances as frozen after construction.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u},{v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        mask = self.adj[v]
        return tuple(u for u in range(self.n) if mask >> u & 1)

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.adj[u] >> v & 1
        ]

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def _check(self, v) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.n:
            raise ValueError(f"vertex {v!r} out of range for {self.n} vertices")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()!r})"


def all_pairs(n: int) -> list[tuple[int, int]]:
    """Every u < v pair, in lexicographic order."""
    return list(itertools.combinations(range(n), 2))


def make_complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def make_empty(n: int) -> Graph:
    return Graph(n)


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides; h is relabeled
    to g.n..g.n+h.n-1."""
    offset = g.n
    edges = g.edges()
    edges += [(u + offset, v + offset) for u, v in h.edges()]
    edges += [(u, v + offset) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n + h.n, edges)


def delete_vertex(g: Graph, x: int) -> Graph:
    """Remove x and its edges; higher-numbered vertices shift down by one."""
    g._check(x)

    def shift(v):
        return v if v < x else v - 1

    return Graph(
        g.n - 1, [(shift(u), shift(v)) for u, v in g.edges() if x not in (u, v)]
    )


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"no edge ({u},{v}) to delete")
    drop = {(u, v), (v, u)}
    return Graph(g.n, [e for e in g.edges() if e not in drop])


def induced_subgraph(g: Graph, keep) -> tuple[Graph, dict[int, int]]:
    """Subgraph on the given vertex set plus the old->new label map
    (kept vertices are renumbered in increasing order)."""
    kept = sorted(set(keep))
    for v in kept:
        g._check(v)
    remap = {old: new for new, old in enumerate(kept)}
    edges = [
        (remap[u], remap[v]) for u, v in g.edges() if u in remap and v in remap
    ]
    return Graph(len(kept), edges), remap


def augment_isolated(g: Graph) -> Graph:
    """Add one isolated vertex with the next label."""
    return Graph(g.n + 1, g.edges())


def relabel(g: Graph, perm) -> Graph:
    """Apply a permutation (perm[old] = new) to the vertex labels."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("relabeling must be a permutation of the vertices")
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def isomorphic(g: Graph, h: Graph) -> bool:
    """Label-permutation equality test; intended for small graphs only."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.adj[v].bit_count() for v in range(g.n)) != sorted(
        h.adj[v].bit_count() for v in range(h.n)
    ):
        return False
    if g.n > 8:
        raise ValueError("permutation test limited to 8 vertices")
    for perm in itertools.permutations(range(g.n)):
        if all(h.adj[perm[u]] >> perm[v] & 1 for u, v in g.edges()):
            return True
    return False


# -- edge-list format --------------------------------------------------------
#
# First significant line is the vertex count, each following line one edge
# "u v" with u < v.  Lines whose first character is '#' are comments.  ';'
# doubles as a line separator so a whole graph fits on one report line.


def _segments(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        col = 1
        for seg in raw.split(";"):
            yield lineno, col, seg
            col += len(seg) + 1


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    seen = set()
    for lineno, base, seg in _segments(text):
        stripped = seg.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [(m.group(), base + m.start()) for m in re.finditer(r"\S+", seg)]
        values = []
        for tok, col in tokens:
            if not re.fullmatch(r"-?\d+", tok):
                raise ParseError(f"expected an integer, got {tok!r}", lineno, col)
            values.append((int(tok), col))
        if n is None:
            if len(values) != 1:
                col = values[1][1] if len(values) > 1 else base
                raise ParseError(
                    "header line must contain exactly the vertex count", lineno, col
                )
            n, col0 = values[0]
            if n < 0:
                raise ParseError("vertex count must be nonnegative", lineno, col0)
            continue
        if len(values) != 2:
            raise ParseError(
                "edge line must contain exactly two endpoints", lineno, base
            )
        (u, cu), (v, cv) = values
        if not 0 <= u < n:
            raise ParseError(f"vertex {u} out of range for {n} vertices", lineno, cu)
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range for {n} vertices", lineno, cv)
        if u >= v:
            raise ParseError("edge endpoints must satisfy u < v", lineno, cu)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno, cu)
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise ParseError("missing header: vertex count expected", 1, 1)
    return Graph(n, edges)


def render_edge_list(g: Graph, inline: bool = False) -> str:
    parts = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    if inline:
        return ";".join(parts)
    return "\n".join(parts) + "\n"


# -- family expressions ------------------------------------------------------
#
# expr := K<int> | E<int> | C<int> | P<int>
#       | join(expr, expr) | delete(expr, <int>) | minus_edge(expr, <int>, <int>)
#
# Whitespace (including newlines) is insignificant between tokens.


class FamilyExpr:
    """Node of a parsed family expression."""

    def build(self) -> Graph:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Family(FamilyExpr):
    kind: str  # K, E, C or P
    size: int

    def build(self) -> Graph:
        maker = {
            "K": make_complete,
            "E": make_empty,
            "C": make_cycle,
            "P": make_path,
        }[self.kind]
        return maker(self.size)

    def render(self) -> str:
        return f"{self.kind}{self.size}"


@dataclass(frozen=True)
class FamilyJoin(FamilyExpr):
    left: FamilyExpr
    right: FamilyExpr

    def build(self) -> Graph:
        return join(self.left.build(), self.right.build())

    def render(self) -> str:
        return f"join({self.left.render()},{self.right.render()})"


@dataclass(frozen=True)
class FamilyDelete(FamilyExpr):
    inner: FamilyExpr
    vertex: int

    def build(self) -> Graph:
        g = self.inner.build()
        if not 0 <= self.vertex < g.n:
            raise ValueError(
                f"cannot delete vertex {self.vertex} from {self.inner.render()}"
            )
        return delete_vertex(g, self.vertex)

    def render(self) -> str:
        return f"delete({self.inner.render()},{self.vertex})"


@dataclass(frozen=True)
class FamilyMinusEdge(FamilyExpr):
    inner: FamilyExpr
    u: int
    v: int

    def build(self) -> Graph:
        g = self.inner.build()
        if not (0 <= self.u < g.n and 0 <= self.v < g.n) or not g.has_edge(
            self.u, self.v
        ):
            raise ValueError(
                f"no edge ({self.u},{self.v}) in {self.inner.render()}"
            )
        return delete_edge(g, self.u, self.v)

    def render(self) -> str:
        return f"minus_edge({self.inner.render()},{self.u},{self.v})"


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident", "int", "(", ")", ",", "end"
    text: str
    line: int
    col: int


def _tokenize_family(text: str) -> list[_Token]:
    out = []
    line, col, i = 1, 1, 0
    while i < len(text):
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c.isspace():
            col += 1
            i += 1
            continue
        if c in "(),":
            out.append(_Token(c, c, line, col))
            col += 1
            i += 1
            continue
        m = re.match(r"[A-Za-z_][A-Za-z0-9_]*|\d+", text[i:])
        if m is None:
            raise ParseError(f"unexpected character {c!r}", line, col)
        kind = "int" if m.group()[0].isdigit() else "ident"
        out.append(_Token(kind, m.group(), line, col))
        col += len(m.group())
        i += len(m.group())
    out.append(_Token("end", "", line, col))
    return out


class _FamilyParser:
    _ATOM = re.compile(r"([KECP])([0-9]+)$")

    def __init__(self, tokens: list[_Token]):
        self._toks = tokens
        self._i = 0

    def _peek(self) -> _Token:
        return self._toks[self._i]

    def _next(self) -> _Token:
        t = self._toks[self._i]
        self._i += 1
        return t

    def _expect(self, kind: str) -> _Token:
        t = self._next()
        if t.kind != kind:
            shown = t.text or "end of input"
            raise ParseError(f"expected {kind!r}, got {shown!r}", t.line, t.col)
        return t

    def parse(self) -> FamilyExpr:
        e = self._expr()
        t = self._peek()
        if t.kind != "end":
            raise ParseError(f"unexpected trailing input {t.text!r}", t.line, t.col)
        return e

    def _expr(self) -> FamilyExpr:
        t = self._next()
        if t.kind != "ident":
            shown = t.text or "end of input"
            raise ParseError(f"expected a family expression, got {shown!r}", t.line, t.col)
        m = self._ATOM.match(t.text)
        if m:
            return Family(m.group(1), int(m.group(2)))
        if t.text == "join":
            self._expect("(")
            left = self._expr()
            self._expect(",")
            right = self._expr()
            self._expect(")")
            return FamilyJoin(left, right)
        if t.text == "delete":
            self._expect("(")
            inner = self._expr()
            self._expect(",")
            vertex = self._int()
            self._expect(")")
            return FamilyDelete(inner, vertex)
        if t.text == "minus_edge":
            self._expect("(")
            inner = self._expr()
            self._expect(",")
            u = self._int()
            self._expect(",")
            v = self._int()
            self._expect(")")
            return FamilyMinusEdge(inner, u, v)
        raise ParseError(f"unknown family name {t.text!r}", t.line, t.col)

    def _int(self) -> int:
        return int(self._expect("int").text)


def parse_family(text: str) -> FamilyExpr:
    return _FamilyParser(_tokenize_family(text)).parse()


def parse_family_expr(text: str) -> Graph:
    return parse_family(text).build()


def load_graph_text(text: str, format: str = "auto") -> Graph:
    """Parse a graph from either format; auto sniffs by the first token
    (a leading integer means edge list)."""
    if format == "family":
        return parse_family_expr(text)
    if format == "edgelist":
        return parse_edge_list(text)
    if format != "auto":
        raise ValueError(f"unknown graph format {format!r}")
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty graph description", 1, 1)
    if stripped[0].isdigit():
        return parse_edge_list(text)
    return parse_family_expr(text)
