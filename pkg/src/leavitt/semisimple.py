"""The finite-dimensional picture of an acyclic graph algebra.

For a finite acyclic graph the algebra splits into one matrix block per
sink, of size the number of paths into that sink. ``phi`` realizes the
block-matrix isomorphism by expanding every monomial toward the sinks and
reading off coefficients against the ordered path basis; ``phi_inv`` maps
matrix entries back to path monomials and renormalizes.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .algebra import Element
from .fields import Field
from .graphs import (
    Graph,
    Path,
    check_acyclic,
    enumerate_paths_to,
    mu,
    path_range,
    sinks,
    _out_edges,
)
from .linalg import ShapeError, conj_transpose, mat_eq, mat_mul, mat_shape, zeros


class SinkBasis:
    """Ordered sinks with, for each, the ordered list of paths into it."""

    def __init__(self, graph: Graph):
        check_acyclic(graph)
        self.graph = graph
        self.sinks = sinks(graph)
        self.paths = {v: tuple(enumerate_paths_to(graph, v)) for v in self.sinks}
        self.index = {}
        for v in self.sinks:
            for i, a in enumerate(self.paths[v]):
                self.index[a] = (v, i)
        for v in self.sinks:
            assert len(self.paths[v]) == mu(graph, v)

    def size(self, v: str) -> int:
        return len(self.paths[v])


@functools.lru_cache(maxsize=None)
def sink_basis(g: Graph) -> SinkBasis:
    return SinkBasis(g)


def _sink_expand(g: Graph, terms: dict) -> dict:
    """Push every monomial to the sinks: p q* = sum over e leaving r(p) of
    (pe)(qe)*. Terminates because the graph is acyclic."""
    outs = _out_edges(g)
    out: dict = {}
    work = [(c, p, q) for (p, q), c in terms.items()]
    while work:
        c, p, q = work.pop()
        branches = outs[path_range(g, p)]
        if not branches:
            key = (p, q)
            prev = out.get(key)
            total = c if prev is None else prev + c
            out[key] = total
            continue
        for e in branches:
            work.append((c, Path(p.base, p.edges + (e.id,)),
                         Path(q.base, q.edges + (e.id,))))
    return {m: c for m, c in out.items() if c}


def sink_normal_form(x: Element) -> Element:
    """The same algebra element, rewritten onto monomials that end at sinks.

    The result is *not* in the rewriting normal form (re-normalizing it gives
    back x); it is the representation phi reads entries from.
    """
    check_acyclic(x.graph)
    return Element._raw(x.graph, x.field, _sink_expand(x.graph, x._terms))


@dataclass
class MatrixImage:
    """Per-sink square blocks over the coefficient field."""

    field: Field
    basis: SinkBasis
    blocks: dict

    def block(self, v: str):
        return self.blocks[v]

    def is_zero(self) -> bool:
        return all(not x for b in self.blocks.values() for row in b for x in row)

    def __eq__(self, other):
        if not isinstance(other, MatrixImage):
            return NotImplemented
        return (self.field == other.field
                and self.basis.graph == other.basis.graph
                and all(mat_eq(self.blocks[v], other.blocks[v]) for v in self.blocks))

    def __mul__(self, other):
        if not isinstance(other, MatrixImage):
            return NotImplemented
        blocks = {v: mat_mul(self.blocks[v], other.blocks[v]) for v in self.blocks}
        return MatrixImage(self.field, self.basis, blocks)

    def __add__(self, other):
        if not isinstance(other, MatrixImage):
            return NotImplemented
        blocks = {
            v: [[x + y for x, y in zip(ra, rb)]
                for ra, rb in zip(self.blocks[v], other.blocks[v])]
            for v in self.blocks
        }
        return MatrixImage(self.field, self.basis, blocks)

    def scale(self, c):
        return MatrixImage(self.field, self.basis,
                           {v: [[c * x for x in row] for row in b]
                            for v, b in self.blocks.items()})

    def star(self) -> "MatrixImage":
        return MatrixImage(self.field, self.basis,
                           {v: conj_transpose(b) for v, b in self.blocks.items()})

    @staticmethod
    def zero(basis: SinkBasis, field: Field) -> "MatrixImage":
        return MatrixImage(field, basis,
                           {v: zeros(field, basis.size(v), basis.size(v))
                            for v in basis.sinks})

    @staticmethod
    def identity(basis: SinkBasis, field: Field) -> "MatrixImage":
        image = MatrixImage.zero(basis, field)
        for v in basis.sinks:
            for i in range(basis.size(v)):
                image.blocks[v][i][i] = field.one
        return image


def phi(x: Element) -> MatrixImage:
    """The canonical isomorphism onto the per-sink matrix blocks.

    Linear, multiplicative, and star-compatible: the image of star(x) is the
    blockwise conjugate transpose.
    """
    basis = sink_basis(x.graph)
    image = MatrixImage.zero(basis, x.field)
    for (p, q), c in _sink_expand(x.graph, x._terms).items():
        v, i = basis.index[p]
        v2, j = basis.index[q]
        assert v == v2
        image.blocks[v][i][j] = image.blocks[v][i][j] + c
    return image


def phi_inv(image: MatrixImage) -> Element:
    """Matrix entries back to path monomials: entry (i, j) of block v rides
    on alpha_i alpha_j* for the ordered paths into v."""
    basis = image.basis
    g = basis.graph
    raw = []
    for v in basis.sinks:
        block = image.blocks[v]
        n = basis.size(v)
        if mat_shape(block) != (n, n):
            raise ShapeError(f"block {v} is {mat_shape(block)}, expected {n}x{n}")
        paths = basis.paths[v]
        for i in range(n):
            for j in range(n):
                if block[i][j]:
                    raw.append((block[i][j], paths[i], paths[j]))
    return Element.from_terms(g, image.field, raw)


def matrix_image_from_blocks(g: Graph, field: Field, blocks: dict) -> MatrixImage:
    basis = sink_basis(g)
    image = MatrixImage.zero(basis, field)
    for v, b in blocks.items():
        if v not in image.blocks:
            raise ShapeError(f"{v} is not a sink")
        if mat_shape(b) != mat_shape(image.blocks[v]):
            raise ShapeError(f"block {v} has the wrong shape")
        image.blocks[v] = [row[:] for row in b]
    return image


def dimension(g: Graph) -> int:
    """Sum of mu(v)^2 over the sinks of a finite acyclic graph."""
    check_acyclic(g)
    return sum(mu(g, v) ** 2 for v in sinks(g))
