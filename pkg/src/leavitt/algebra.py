"""Path algebra elements subject to the Cuntz-Krieger relations.

An element is a finite linear combination of monomials p.q* where p and q
are paths with a common range. Equality is decidable because every element
is kept in a canonical normal form: at each non-sink vertex the
lexicographically greatest outgoing edge is *special*, and a monomial whose
two paths end in the same special edge f is rewritten with the vertex
relation solved for f,

    f f*  ->  s(f) - sum of e e* over the other edges e leaving s(f).

The rewrite only ever fires at the last edge pair, the replacement monomials
either shrink by two or end in a non-special edge, so normalization
terminates; the surviving monomials form the standard linear basis, which is
what makes structural equality sound.
"""

from __future__ import annotations

import functools
from collections import deque

from .fields import Field, FieldMismatchError, FieldValue
from .graphs import (
    Graph,
    GraphError,
    Path,
    edge_by_id,
    is_path,
    path_range,
    vertex_set,
    _out_edges,
)


class AlgebraError(ValueError):
    """Monomial/graph mismatch or incompatible operands."""


@functools.lru_cache(maxsize=None)
def special_edges(g: Graph) -> dict:
    """The designated outgoing edge at each non-sink vertex."""
    return {v: max(e.id for e in es) for v, es in _out_edges(g).items() if es}


def _path_key(p: Path):
    return (p.edges, p.base)


def monomial_key(mono):
    p, q = mono
    return (len(p.edges) + len(q.edges), _path_key(p), _path_key(q))


def _normalize_terms(g: Graph, field: Field, raw, schedule: str = "lifo") -> dict:
    """Rewrite a raw (coeff, p, q) stream into normal-form monomial -> coeff.

    ``schedule`` picks the worklist order (lifo or fifo); both reach the same
    normal form, which the test suite checks as a confluence surrogate.
    """
    spec = special_edges(g)
    emap = edge_by_id(g)
    outs = _out_edges(g)
    acc: dict = {}
    work = deque()
    for c, p, q in raw:
        work.append((c, p, q))
    pop = work.pop if schedule == "lifo" else work.popleft
    while work:
        c, p, q = pop()
        if not c:
            continue
        if p.edges and q.edges and p.edges[-1] == q.edges[-1]:
            f = p.edges[-1]
            w = emap[f].src
            if spec[w] == f:
                p0 = Path(p.base, p.edges[:-1])
                q0 = Path(q.base, q.edges[:-1])
                work.append((c, p0, q0))
                for e in outs[w]:
                    if e.id != f:
                        work.append((-c, Path(p0.base, p0.edges + (e.id,)),
                                     Path(q0.base, q0.edges + (e.id,))))
                continue
        key = (p, q)
        prev = acc.get(key)
        acc[key] = c if prev is None else prev + c
    return {m: c for m, c in acc.items() if c}


def _check_monomial(g: Graph, p: Path, q: Path):
    if not (is_path(g, p) and is_path(g, q)):
        raise AlgebraError(f"monomial/graph mismatch: {p}, {q}")
    if path_range(g, p) != path_range(g, q):
        raise AlgebraError(f"paths have different ranges: {p}, {q}")


class Element:
    """An immutable element of the algebra of a fixed graph over a field.

    Supports +, -, * (both by elements and by coefficients), ``star`` for
    the involution, and structural equality of normal forms.
    """

    __slots__ = ("graph", "field", "_terms")

    def __init__(self, graph: Graph, field: Field, terms: dict, *, _trusted=False):
        if not _trusted:
            raise TypeError("use the Element constructors (zero, vertex, from_terms, ...)")
        self.graph = graph
        self.field = field
        self._terms = terms

    # --- constructors ---------------------------------------------------

    @staticmethod
    def from_terms(graph, field, raw, schedule: str = "lifo") -> "Element":
        """Normalize a raw combination of (coeff, p, q) triples.

        Coefficients may be ints or FieldValues of the right field.
        """
        cooked = []
        for c, p, q in raw:
            if isinstance(c, int):
                c = field.from_int(c)
            elif not isinstance(c, FieldValue) or c.field != field:
                raise FieldMismatchError(f"coefficient {c!r} is not in {field.spec_string()}")
            _check_monomial(graph, p, q)
            cooked.append((c, p, q))
        return Element(graph, field, _normalize_terms(graph, field, cooked, schedule),
                       _trusted=True)

    @staticmethod
    def _raw(graph, field, terms: dict) -> "Element":
        # Trusted construction from an already-reduced monomial->coeff map;
        # sink_normal_form uses this to keep a non-canonical representation.
        return Element(graph, field, terms, _trusted=True)

    @staticmethod
    def zero(graph, field) -> "Element":
        return Element(graph, field, {}, _trusted=True)

    @staticmethod
    def vertex(graph, field, v: str) -> "Element":
        if v not in vertex_set(graph):
            raise GraphError(f"unknown vertex {v}")
        t = Path(v, ())
        return Element(graph, field, {(t, t): field.one}, _trusted=True)

    @staticmethod
    def edge(graph, field, eid: str) -> "Element":
        e = edge_by_id(graph).get(eid)
        if e is None:
            raise GraphError(f"unknown edge {eid}")
        p = Path(e.src, (eid,))
        return Element(graph, field, {(p, Path(e.dst, ())): field.one}, _trusted=True)

    @staticmethod
    def ghost(graph, field, eid: str) -> "Element":
        e = edge_by_id(graph).get(eid)
        if e is None:
            raise GraphError(f"unknown edge {eid}")
        q = Path(e.src, (eid,))
        return Element(graph, field, {(Path(e.dst, ()), q): field.one}, _trusted=True)

    @staticmethod
    def one(graph, field) -> "Element":
        """The identity of a finite graph algebra: the sum of all vertices."""
        terms = {(Path(v, ()), Path(v, ())): field.one for v in graph.vertices}
        return Element(graph, field, terms, _trusted=True)

    # --- views -----------------------------------------------------------

    def items(self):
        """Terms in the canonical order: total length, then both paths."""
        return sorted(self._terms.items(), key=lambda kv: monomial_key(kv[0]))

    def coefficient(self, p: Path, q: Path):
        return self._terms.get((p, q), self.field.zero)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # --- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "Element"):
        if self.graph != other.graph:
            raise AlgebraError("elements live over different graphs")
        if self.field != other.field:
            raise FieldMismatchError("elements live over different fields")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            prev = terms.get(m)
            total = c if prev is None else prev + c
            if total:
                terms[m] = total
            elif prev is not None:
                del terms[m]
        return Element(self.graph, self.field, terms, _trusted=True)

    def __neg__(self):
        return Element(self.graph, self.field, {m: -c for m, c in self._terms.items()},
                       _trusted=True)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Element":
        if isinstance(c, int):
            c = self.field.from_int(c)
        if not c:
            return Element.zero(self.graph, self.field)
        return Element(self.graph, self.field,
                       {m: c * v for m, v in self._terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (FieldValue, int)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._check_compatible(other)
        g = self.graph
        raw = []
        for (p1, q1), c1 in self._terms.items():
            for (p2, q2), c2 in other._terms.items():
                mono = _mul_monomials(g, p1, q1, p2, q2)
                if mono is not None:
                    raw.append((c1 * c2, mono[0], mono[1]))
        return Element(g, self.field, _normalize_terms(g, self.field, raw), _trusted=True)

    def __rmul__(self, other):
        if isinstance(other, (FieldValue, int)):
            return self.scale(other)
        return NotImplemented

    def star(self) -> "Element":
        """The induced involution: sum of k p q* goes to conj(k) q p*."""
        terms = {(q, p): c.conj() for (p, q), c in self._terms.items()}
        return Element(self.graph, self.field, terms, _trusted=True)

    # --- comparison -----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (self.graph == other.graph and self.field == other.field
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.graph, self.field, frozenset(self._terms.items())))

    def __repr__(self):
        return format_element(self)

    __str__ = __repr__


def _is_prefix(a: Path, b: Path) -> bool:
    return a.base == b.base and b.edges[: len(a.edges)] == a.edges


def _mul_monomials(g: Graph, p1: Path, q1: Path, p2: Path, q2: Path):
    """(p1 q1*)(p2 q2*) before normalization: None when the ghost/real
    cancellation in the middle kills the product."""
    if _is_prefix(q1, p2):
        gamma = p2.edges[len(q1.edges):]
        return Path(p1.base, p1.edges + gamma), q2
    if _is_prefix(p2, q1):
        gamma = q1.edges[len(p2.edges):]
        return p1, Path(q2.base, q2.edges + gamma)
    return None


def normalize(graph, field, raw, schedule: str = "lifo") -> Element:
    """Public face of the rewriting pass; see Element.from_terms."""
    return Element.from_terms(graph, field, raw, schedule)


def mul(x: Element, y: Element) -> Element:
    return x * y


def star(x: Element) -> Element:
    return x.star()


def eq(x: Element, y: Element) -> bool:
    x._check_compatible(y)
    return x == y


def linear_combine(terms) -> Element:
    """Sum of coefficient * element pairs; the list must be non-empty."""
    terms = list(terms)
    if not terms:
        raise AlgebraError("linear_combine needs at least one term")
    total = None
    for c, x in terms:
        part = x.scale(c)
        total = part if total is None else total + part
    return total


def local_unit(x: Element) -> Element:
    """The sum of the distinct vertices supporting x; acts as identity on x."""
    support = {p.base for (p, q) in x._terms} | {q.base for (p, q) in x._terms}
    terms = {}
    for v in x.graph.vertices:
        if v in support:
            t = Path(v, ())
            terms[(t, t)] = x.field.one
    return Element(x.graph, x.field, terms, _trusted=True)


# ---------------------------------------------------------------------------
# printing (the expression grammar; parsing lives in leavitt.io)


def format_monomial(p: Path, q: Path) -> str:
    parts = list(p.edges) + [f"{eid}*" for eid in reversed(q.edges)]
    if not parts:
        return p.base
    return ".".join(parts)


def _float_sign(literal: str) -> bool:
    # Safe to move a leading '-' out of the coefficient only if the rest of
    # the literal has no further additive structure.
    return literal.startswith("-") and not any(ch in "+-" for ch in literal[1:])


def format_element(x: Element) -> str:
    if x.is_zero:
        return "0"
    pieces = []
    for (p, q), c in x.items():
        mono = format_monomial(p, q)
        lit = x.field.literal(c.payload)
        pieces.append((lit, mono))
    out = []
    for idx, (lit, mono) in enumerate(pieces):
        if idx > 0 and _float_sign(lit):
            lit = lit[1:]
            joiner = " - "
        elif idx > 0:
            joiner = " + "
        else:
            joiner = ""
        body = mono if lit == "1" else f"{lit}*{mono}"
        out.append(joiner + body)
    return "".join(out)
