"""Parsing and serialization: graph files, element expressions, reports.

Graph text format, one declaration per line, '#' starts a comment:

    vertex <id>
    edge <id> <source-id> <range-id>

The structured (JSON) graph format is an object with "vertices" and "edges"
keys only; edges are {"id","src","dst"} objects. Both parsers reject
duplicate identifiers and dangling endpoints.

Element expressions follow

    expr    := term (('+'|'-') term)*
    term    := [coeff '*'] factors | coeff
    factors := factor ('.' factor)*
    factor  := identifier ['*']

where coeff is a field literal. Coefficient literals are atomic: "1+2i*e1"
is (1+2i)*e1, while "1 + 2i*e1" is 1 + (2i)*e1. A bare coeff term means
coeff times the identity (the sum of all vertices). Printing emits the same
grammar with terms in canonical monomial order.
"""

from __future__ import annotations

import json

from .algebra import Element, format_element
from .fields import Field
from .graphs import Graph, edge_by_id, validate, vertex_set
from .omega import extnat_to_json
from .semisimple import MatrixImage
from .decide import DecisionReport

__all__ = [
    "ParseError",
    "parse_graph",
    "parse_graph_json",
    "parse_graph_any",
    "format_graph",
    "graph_to_json",
    "parse_element",
    "format_element",
    "matrix_image_to_json",
    "format_matrix_image",
    "report_to_json",
    "format_report",
    "verify_claims",
]


class ParseError(ValueError):
    pass


# ---------------------------------------------------------------------------
# graphs


def parse_graph(text: str) -> Graph:
    """The line-oriented text format; raises with line numbers on bad syntax
    and with offending identifiers on broken invariants."""
    vertices = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "vertex" and len(tokens) == 2:
            vertices.append(tokens[1])
        elif tokens[0] == "edge" and len(tokens) == 4:
            edges.append((tokens[1], tokens[2], tokens[3]))
        else:
            raise ParseError(f"line {lineno}: expected 'vertex <id>' or "
                             f"'edge <id> <src> <dst>', got {line!r}")
    g = Graph.build(vertices, edges)
    errors = validate(g)
    if errors:
        raise ParseError("; ".join(errors))
    return g


def parse_graph_json(obj) -> Graph:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict):
        raise ParseError("graph object expected")
    unknown = set(obj) - {"vertices", "edges"}
    if unknown:
        raise ParseError(f"unknown keys: {sorted(unknown)}")
    vertices = obj.get("vertices", [])
    edges_in = obj.get("edges", [])
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError("vertices must be a list of strings")
    edges = []
    for e in edges_in:
        if not isinstance(e, dict):
            raise ParseError("edges must be objects")
        bad = set(e) - {"id", "src", "dst"}
        if bad:
            raise ParseError(f"unknown edge keys: {sorted(bad)}")
        try:
            edges.append((e["id"], e["src"], e["dst"]))
        except KeyError as missing:
            raise ParseError(f"edge missing key {missing}") from None
    g = Graph.build(vertices, edges)
    errors = validate(g)
    if errors:
        raise ParseError("; ".join(errors))
    return g


def parse_graph_any(text: str) -> Graph:
    """Sniff the format: JSON if the first non-space character is '{'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from None
        return parse_graph_json(obj)
    return parse_graph(text)


def format_graph(g: Graph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e.id} {e.src} {e.dst}" for e in g.edges]
    return "\n".join(lines) + ("\n" if lines else "")


def graph_to_json(g: Graph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in g.edges],
    }


# ---------------------------------------------------------------------------
# element expressions

_IDENT_CHARS = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_:@(),")


class _ExprParser:
    def __init__(self, text: str, g: Graph, k: Field):
        self.text = text
        self.pos = 0
        self.g = g
        self.k = k
        self.vset = vertex_set(g)
        self.emap = edge_by_id(g)

    def fail(self, message):
        raise ParseError(f"column {self.pos + 1}: {message}")

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_term_end(self) -> bool:
        self.skip_ws()
        return self.peek() in ("", "+", "-")

    def parse(self) -> Element:
        self.skip_ws()
        if not self.peek():
            self.fail("empty expression")
        total = self.parse_term()
        while True:
            self.skip_ws()
            ch = self.peek()
            if not ch:
                return total
            if ch not in "+-":
                self.fail(f"unexpected character {ch!r}")
            self.pos += 1
            term = self.parse_term()
            total = total + term if ch == "+" else total - term

    def parse_term(self) -> Element:
        self.skip_ws()
        start = self.pos
        scanned = self.k.scan_literal(self.text, self.pos)
        if scanned is not None:
            coeff, end = scanned
            self.pos = end
            self.skip_ws()
            if self.peek() == "*":
                self.pos += 1
                return self.parse_factors().scale(coeff)
            if self.at_term_end():
                return Element.one(self.g, self.k).scale(coeff)
            self.pos = start  # looked like a literal but is not one: re-read
        if self.peek() in "+-":
            # sign before plain factors, e.g. "-v1"
            sign = self.peek()
            self.pos += 1
            element = self.parse_factors()
            return -element if sign == "-" else element
        return self.parse_factors()

    def parse_factors(self) -> Element:
        element = self.parse_factor()
        while True:
            self.skip_ws()
            if self.peek() != ".":
                return element
            self.pos += 1
            element = element * self.parse_factor()

    def parse_factor(self) -> Element:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _IDENT_CHARS:
            self.pos += 1
        name = self.text[start:self.pos]
        if not name:
            self.fail("expected an identifier")
        self.skip_ws()
        adjoint = False
        if self.peek() == "*":
            adjoint = True
            self.pos += 1
        element = self.resolve(name, adjoint)
        return element

    def resolve(self, name: str, adjoint: bool) -> Element:
        is_vertex = name in self.vset
        is_edge = name in self.emap
        if is_vertex and is_edge:
            raise ParseError(f"ambiguous identifier {name!r} (both a vertex and an edge)")
        if is_vertex:
            return Element.vertex(self.g, self.k, name)
        if is_edge:
            if adjoint:
                return Element.ghost(self.g, self.k, name)
            return Element.edge(self.g, self.k, name)
        raise ParseError(f"unknown identifier {name!r}")


def parse_element(text: str, g: Graph, k: Field) -> Element:
    return _ExprParser(text, g, k).parse()


# ---------------------------------------------------------------------------
# matrix images and reports


def matrix_image_to_json(image: MatrixImage) -> list:
    out = []
    for v in image.basis.sinks:
        block = image.blocks[v]
        out.append({
            "sink": v,
            "size": len(block),
            "rows": [[image.field.literal(x.payload) for x in row] for row in block],
        })
    return out


def format_matrix_image(image: MatrixImage) -> str:
    lines = []
    for entry in matrix_image_to_json(image):
        lines.append(f"sink {entry['sink']} (size {entry['size']}):")
        width = max((len(x) for row in entry["rows"] for x in row), default=1)
        for row in entry["rows"]:
            lines.append("  [ " + "  ".join(x.rjust(width) for x in row) + " ]")
    return "\n".join(lines)


def _bool_str(b: bool) -> str:
    return "true" if b else "false"


def report_to_json(report: DecisionReport) -> dict:
    return {
        "field": report.field.spec_string(),
        "acyclic": report.acyclic,
        "mu": {v: extnat_to_json(report.mu[v]) for v in report.graph.vertices},
        "sigma": extnat_to_json(report.sigma),
        "properness_level": extnat_to_json(report.properness_level),
        "regular": report.regular,
        "star_regular": report.star_regular,
        "positive_definite_algebra": report.positive_definite_algebra,
        "proper_algebra": report.proper_algebra,
        "improper_certificate": (
            format_element(report.improper_certificate)
            if report.improper_certificate is not None else None
        ),
    }


def format_report(report: DecisionReport) -> str:
    data = report_to_json(report)
    mu_line = " ".join(f"{v}={data['mu'][v]}" for v in report.graph.vertices)
    lines = [
        f"field: {data['field']}",
        f"acyclic: {_bool_str(data['acyclic'])}",
        f"mu: {mu_line}" if mu_line else "mu: (no vertices)",
        f"sigma: {data['sigma']}",
        f"properness_level: {data['properness_level']}",
        f"regular: {_bool_str(data['regular'])}",
        f"star_regular: {_bool_str(data['star_regular'])}",
        f"positive_definite_algebra: {_bool_str(data['positive_definite_algebra'])}",
        f"proper_algebra: {data['proper_algebra']}",
    ]
    if data["improper_certificate"] is not None:
        lines.append(f"improper_certificate: {data['improper_certificate']}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# machine-checkable claims (witness serialization)


def claim_product_equals(factors, equals) -> dict:
    return {"type": "product_equals",
            "factors": [format_element(x) for x in factors],
            "equals": format_element(equals)}


def claim_star_fixed(x) -> dict:
    return {"type": "star_fixed", "arg": format_element(x)}


def claim_star_product_zero(x) -> dict:
    return {"type": "star_product_zero", "arg": format_element(x)}


def claim_nonzero(x) -> dict:
    return {"type": "nonzero", "arg": format_element(x)}


def verify_claims(g: Graph, k: Field, claims) -> bool:
    """Re-check serialized claims by parsing and recomputing each one."""
    for claim in claims:
        kind = claim["type"]
        if kind == "product_equals":
            factors = [parse_element(t, g, k) for t in claim["factors"]]
            product = factors[0]
            for x in factors[1:]:
                product = product * x
            if product != parse_element(claim["equals"], g, k):
                return False
        elif kind == "star_fixed":
            x = parse_element(claim["arg"], g, k)
            if x.star() != x:
                return False
        elif kind == "star_product_zero":
            x = parse_element(claim["arg"], g, k)
            if not (x.star() * x).is_zero:
                return False
        elif kind == "nonzero":
            if parse_element(claim["arg"], g, k).is_zero:
                return False
        else:
            raise ParseError(f"unknown claim type {kind!r}")
    return True
