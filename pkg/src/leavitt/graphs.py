"""Finite directed multigraphs with named vertices and edges.

Everything downstream (path algebra elements, the matrix picture, the
decision procedures) works over these graphs. Graphs are immutable values;
all functions here are pure and derived tables are memoized on the graph
itself, so sharing across threads is safe.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .omega import OMEGA, is_finite


class GraphError(ValueError):
    """Invalid graph data, or an operation applied outside its domain."""


class CyclicGraphError(GraphError):
    """Raised by operations defined only for acyclic graphs."""


class InfinitePathSetError(GraphError):
    """Raised when asked to enumerate an infinite family of paths."""


class Edge(NamedTuple):
    id: str
    src: str
    dst: str


class Path(NamedTuple):
    """A directed path: a start vertex and a chained edge-id sequence.

    The trivial path at a vertex v is Path(v, ()).
    """

    base: str
    edges: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @staticmethod
    def build(vertices: Iterable[str], edges: Iterable[tuple[str, str, str]]) -> "Graph":
        return Graph(tuple(vertices), tuple(Edge(*e) for e in edges))

    def __repr__(self):
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"


# ---------------------------------------------------------------------------
# derived tables


@functools.lru_cache(maxsize=None)
def vertex_set(g: Graph) -> frozenset:
    return frozenset(g.vertices)


@functools.lru_cache(maxsize=None)
def edge_by_id(g: Graph):
    return {e.id: e for e in g.edges}


@functools.lru_cache(maxsize=None)
def _out_edges(g: Graph):
    table = {v: [] for v in g.vertices}
    for e in g.edges:
        table[e.src].append(e)
    return {v: tuple(sorted(es, key=lambda e: e.id)) for v, es in table.items()}


@functools.lru_cache(maxsize=None)
def _in_edges(g: Graph):
    table = {v: [] for v in g.vertices}
    for e in g.edges:
        table[e.dst].append(e)
    return {v: tuple(sorted(es, key=lambda e: e.id)) for v, es in table.items()}


def out_edges(g: Graph, v: str) -> tuple[Edge, ...]:
    _require_vertex(g, v)
    return _out_edges(g)[v]


def in_edges(g: Graph, v: str) -> tuple[Edge, ...]:
    _require_vertex(g, v)
    return _in_edges(g)[v]


def _require_vertex(g: Graph, v: str):
    if v not in vertex_set(g):
        raise GraphError(f"unknown vertex {v}")


# ---------------------------------------------------------------------------
# validation and structural predicates


def validate(g: Graph) -> list:
    """All invariant violations, as human-readable strings. Empty means ok."""
    errors = []
    seen = set()
    for v in g.vertices:
        if v in seen:
            errors.append(f"duplicate identifier {v}")
        seen.add(v)
    seen_edges = set()
    vs = set(g.vertices)
    for e in g.edges:
        if e.id in seen_edges:
            errors.append(f"duplicate identifier {e.id}")
        seen_edges.add(e.id)
        if e.src not in vs or e.dst not in vs:
            errors.append(f"dangling endpoint {e.id}")
    return errors


def check_valid(g: Graph) -> Graph:
    errors = validate(g)
    if errors:
        raise GraphError("; ".join(errors))
    return g


class VertexInfo(NamedTuple):
    sink: bool
    source: bool
    out_degree: int


def classify_vertex(g: Graph, v: str) -> VertexInfo:
    out = out_edges(g, v)
    return VertexInfo(sink=not out, source=not in_edges(g, v), out_degree=len(out))


def sinks(g: Graph) -> tuple[str, ...]:
    return tuple(v for v in g.vertices if not _out_edges(g)[v])


@functools.lru_cache(maxsize=None)
def _reachable(g: Graph):
    """For each vertex, the set of vertices reachable by a path (length >= 0)."""
    table = {}
    outs = _out_edges(g)
    for start in g.vertices:
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for e in outs[v]:
                if e.dst not in seen:
                    seen.add(e.dst)
                    queue.append(e.dst)
        table[start] = frozenset(seen)
    return table


@functools.lru_cache(maxsize=None)
def _cycle_vertices(g: Graph) -> frozenset:
    """Vertices lying on a closed nontrivial path."""
    reach = _reachable(g)
    outs = _out_edges(g)
    return frozenset(v for v in g.vertices if any(v in reach[e.dst] for e in outs[v]))


def is_acyclic(g: Graph) -> bool:
    return not _cycle_vertices(g)


def check_acyclic(g: Graph) -> Graph:
    if not is_acyclic(g):
        raise CyclicGraphError("graph has a cycle")
    return g


# ---------------------------------------------------------------------------
# path counting


@functools.lru_cache(maxsize=None)
def mu_table(g: Graph):
    """Number of paths ending at each vertex, the trivial path included.

    OMEGA for vertices reachable from a cycle; otherwise computed by dynamic
    programming over the (necessarily acyclic) portion feeding the vertex.
    """
    reach = _reachable(g)
    bad = _cycle_vertices(g)
    infinite = {v for v in g.vertices if any(v in reach[w] for w in bad)}
    ins = _in_edges(g)
    table = {}

    def count(v):
        if v in table:
            return table[v]
        table[v] = total = 1 + sum(count(e.src) for e in ins[v])
        return total

    for v in g.vertices:
        if v in infinite:
            table[v] = OMEGA
    for v in g.vertices:
        if v not in infinite:
            count(v)
    return dict(table)


def mu(g: Graph, v: str):
    _require_vertex(g, v)
    return mu_table(g)[v]


def sigma(g: Graph):
    """Supremum of mu over all vertices; 0 for the empty graph."""
    table = mu_table(g)
    if not table:
        return 0
    return max(table.values())


def path_source(p: Path) -> str:
    return p.base


def path_range(g: Graph, p: Path) -> str:
    if not p.edges:
        return p.base
    return edge_by_id(g)[p.edges[-1]].dst


def is_path(g: Graph, p: Path) -> bool:
    if p.base not in vertex_set(g):
        return False
    emap = edge_by_id(g)
    at = p.base
    for eid in p.edges:
        e = emap.get(eid)
        if e is None or e.src != at:
            return False
        at = e.dst
    return True


def path_concat(g: Graph, p: Path, q: Path) -> Path:
    if path_range(g, p) != q.base:
        raise GraphError("paths do not chain")
    return Path(p.base, p.edges + q.edges)


def _path_sort_key(p: Path):
    return (len(p.edges), p.edges)


@functools.lru_cache(maxsize=None)
def _paths_to(g: Graph, v: str) -> tuple[Path, ...]:
    ins = _in_edges(g)
    memo = {}

    def rec(w):
        if w in memo:
            return memo[w]
        found = [Path(w, ())]
        for e in ins[w]:
            for a in rec(e.src):
                found.append(Path(a.base, a.edges + (e.id,)))
        memo[w] = found
        return found

    return tuple(sorted(rec(v), key=_path_sort_key))


def enumerate_paths_to(g: Graph, v: str) -> list:
    """All paths ending at v, shortest first, ties broken by edge ids.

    The list always starts with the trivial path and has exactly mu(g, v)
    entries; when that count is infinite the enumeration is refused.
    """
    if not is_finite(mu(g, v)):
        raise InfinitePathSetError(f"infinitely many paths end at {v}")
    return list(_paths_to(g, v))


# ---------------------------------------------------------------------------
# constructions


def standard_graph(kind: str, n: int = 1) -> Graph:
    """The stock test graphs: 'line', 'rose', and 'toeplitz'.

    line: vertices v1..vn with edges ei: vi -> vi+1.
    rose: a single vertex v with loops e1..en.
    toeplitz: a loop at v1 plus one exit edge v1 -> v2 (n is ignored).
    A clock (line feeding a rose) is built by clock_graph instead, since it
    needs two size parameters.
    """
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    if kind == "line":
        vertices = [f"v{i}" for i in range(1, n + 1)]
        edges = [(f"e{i}", f"v{i}", f"v{i + 1}") for i in range(1, n)]
        return Graph.build(vertices, edges)
    if kind == "rose":
        return Graph.build(["v"], [(f"e{i}", "v", "v") for i in range(1, n + 1)])
    if kind == "toeplitz":
        return Graph.build(["v1", "v2"], [("e1", "v1", "v1"), ("e2", "v1", "v2")])
    if kind == "clock":
        raise GraphError("clock graphs take two sizes; compose one with clock_graph(n, m)")
    raise GraphError(f"unknown graph kind {kind!r}")


def clock_graph(n: int, m: int) -> Graph:
    """A line of n vertices whose last vertex carries m loops."""
    if n < 1 or m < 1:
        raise GraphError("clock sizes must be positive")
    vertices = [f"v{i}" for i in range(1, n + 1)]
    edges = [(f"e{i}", f"v{i}", f"v{i + 1}") for i in range(1, n)]
    edges += [(f"l{j}", f"v{n}", f"v{n}") for j in range(1, m + 1)]
    return Graph.build(vertices, edges)


def graph_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; identifier clashes are refused, relabel first."""
    if set(a.vertices) & set(b.vertices) or {e.id for e in a.edges} & {e.id for e in b.edges}:
        raise GraphError("graphs share identifiers; relabel before taking a union")
    return Graph(a.vertices + b.vertices, a.edges + b.edges)


def relabel_graph(g: Graph, prefix: str) -> Graph:
    return Graph.build(
        [prefix + v for v in g.vertices],
        [(prefix + e.id, prefix + e.src, prefix + e.dst) for e in g.edges],
    )


def _fresh_separator(g: Graph) -> str:
    sep = "@"
    ids = list(g.vertices) + [e.id for e in g.edges]
    while any(sep in name for name in ids):
        sep += "@"
    return sep


def m_n_graph(g: Graph, n: int) -> Graph:
    """Attach an incoming line of length n-1 to every vertex.

    The tail for v is v@1 -> v@2 -> ... -> v@(n-1) -> v (the separator grows
    if '@' already occurs in an identifier). n = 1 returns the graph itself.
    """
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    if n == 1:
        return Graph(g.vertices, g.edges)
    sep = _fresh_separator(g)
    vertices = list(g.vertices)
    edges = [tuple(e) for e in g.edges]
    for v in g.vertices:
        tail = [f"{v}{sep}{i}" for i in range(1, n)]
        vertices.extend(tail)
        chain = tail + [v]
        for i in range(1, n):
            edges.append((f"{v}{sep}e{i}", chain[i - 1], chain[i]))
    return Graph.build(vertices, edges)


def e_f_graph(g: Graph, f_ids) -> Graph:
    """The finite graph induced by a non-empty edge set F.

    Vertices are the F-edges themselves (named edge:<id>) together with two
    classes of original vertices (named vertex:<id>): ranges of F that also
    source both an F-edge and a non-F edge, and ranges of F that source no
    F-edge. An edge (x,y) joins x in F to y whenever the range of x is the
    source of y, reading the source of a vertex-type y as y itself.
    """
    f_ids = set(f_ids)
    if not f_ids:
        raise GraphError("F must be non-empty")
    emap = edge_by_id(g)
    unknown = sorted(f_ids - set(emap))
    if unknown:
        raise GraphError(f"unknown edge {unknown[0]}")
    f_edges = [e for e in g.edges if e.id in f_ids]
    r_f = {e.dst for e in f_edges}
    s_f = {e.src for e in f_edges}
    s_non_f = {e.src for e in g.edges if e.id not in f_ids}

    vertices = [f"edge:{e.id}" for e in f_edges]
    middle = [v for v in g.vertices if v in r_f and v in s_f and v in s_non_f]
    terminal = [v for v in g.vertices if v in r_f and v not in s_f]
    vertices += [f"vertex:{v}" for v in middle + terminal]

    # source of a new vertex: the original source for edge-type, itself for
    # vertex-type
    new_source = {f"edge:{e.id}": e.src for e in f_edges}
    new_source.update({f"vertex:{v}": v for v in middle + terminal})

    edges = []
    for e in f_edges:
        x = f"edge:{e.id}"
        for y in vertices:
            if e.dst == new_source[y]:
                edges.append((f"({x},{y})", x, y))
    return Graph.build(vertices, edges)
