"""Shared corpus graphs, field lists, and brute-force oracles.

The oracles here are deliberately independent of the library internals:
paths are enumerated by forward walks from every vertex, not by the
library's backward dynamic programming.
"""

import random

import pytest

from leavitt import (
    Element,
    GaussianRationals,
    Graph,
    Path,
    PrimeField,
    QuadraticExtField,
    Rationals,
    graph_union,
    relabel_graph,
    standard_graph,
)
from leavitt.graphs import in_edges, out_edges, path_range


def binary_in_tree() -> Graph:
    # two levels feeding the root sink n1
    vertices = [f"n{i}" for i in range(1, 8)]
    edges = [
        ("c1", "n2", "n1"), ("c2", "n3", "n1"),
        ("c3", "n4", "n2"), ("c4", "n5", "n2"),
        ("c5", "n6", "n3"), ("c6", "n7", "n3"),
    ]
    return Graph.build(vertices, edges)


def corpus() -> dict:
    graphs = {f"line{n}": standard_graph("line", n) for n in range(1, 6)}
    graphs["union_2_1"] = graph_union(standard_graph("line", 2),
                                      relabel_graph(standard_graph("line", 1), "u"))
    graphs["union_3_2"] = graph_union(standard_graph("line", 3),
                                      relabel_graph(standard_graph("line", 2), "w"))
    graphs["btree"] = binary_in_tree()
    graphs["rose1"] = standard_graph("rose", 1)
    graphs["rose2"] = standard_graph("rose", 2)
    graphs["toeplitz"] = standard_graph("toeplitz")
    return graphs


def acyclic_corpus() -> dict:
    from leavitt import is_acyclic
    return {name: g for name, g in corpus().items() if is_acyclic(g)}


FIVE_FIELDS = (
    Rationals(),
    GaussianRationals(conjugation=False),
    GaussianRationals(conjugation=True),
    PrimeField(3),
    PrimeField(5),
)

ALL_FIELDS = FIVE_FIELDS + (PrimeField(2), QuadraticExtField(2),
                            QuadraticExtField(3), QuadraticExtField(5))


@pytest.fixture
def graphs():
    return corpus()


@pytest.fixture
def rng():
    return random.Random(20240817)


# ---------------------------------------------------------------------------
# random data


def random_path_to(g, v, rng, max_len=2) -> Path:
    """A bounded random backward walk ending at v."""
    edges = []
    at = v
    for _ in range(rng.randint(0, max_len)):
        ins = in_edges(g, at)
        if not ins:
            break
        e = rng.choice(ins)
        edges.append(e.id)
        at = e.src
    return Path(at, tuple(reversed(edges)))


def random_raw_terms(g, k, rng, max_terms=3, max_len=2):
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        v = rng.choice(g.vertices)
        p = random_path_to(g, v, rng, max_len)
        q = random_path_to(g, v, rng, max_len)
        terms.append((k.sample(rng), p, q))
    return terms


def random_element(g, k, rng, max_terms=3, max_len=2) -> Element:
    return Element.from_terms(g, k, random_raw_terms(g, k, rng, max_terms, max_len))


def random_nonzero_element(g, k, rng, max_terms=3, max_len=2) -> Element:
    while True:
        x = random_element(g, k, rng, max_terms, max_len)
        if x:
            return x


# ---------------------------------------------------------------------------
# oracles


def brute_paths(g, max_len=None):
    """Every path of g by forward extension, up to max_len when given."""
    found = [Path(v, ()) for v in g.vertices]
    frontier = list(found)
    while frontier:
        new = []
        for p in frontier:
            if max_len is not None and len(p.edges) >= max_len:
                continue
            for e in out_edges(g, path_range(g, p)):
                new.append(Path(p.base, p.edges + (e.id,)))
        found.extend(new)
        frontier = new
        if max_len is None and len(found) > 100000:
            raise AssertionError("brute_paths needs max_len on cyclic graphs")
    return found


def brute_paths_to(g, v, max_len=None):
    return [p for p in brute_paths(g, max_len) if path_range(g, p) == v]
