"""Decision procedures over (graph, field) pairs.

Regularity is purely graph-theoretic (acyclicity); star-regularity also asks
the field's involution to be n-proper up to the largest path count sigma;
positive definiteness of the algebra depends on the field alone. Properness
of the algebra over a cyclic graph and a field that is proper but not
positive definite is honestly reported as unknown.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Element
from .fields import Field
from .graphs import Graph, GraphError, is_acyclic, mu_table, sigma
from .omega import OMEGA
from .witness import improper_element

PROPER = "proper"
IMPROPER = "improper"
UNKNOWN = "unknown"


@dataclass
class DecisionReport:
    graph: Graph
    field: Field
    acyclic: bool
    mu: dict
    sigma: object
    properness_level: object
    regular: bool
    star_regular: bool
    positive_definite_algebra: bool
    proper_algebra: str
    improper_certificate: Element | None = dc_field(default=None)


def is_regular(g: Graph) -> bool:
    """Every element has an inner inverse exactly when the graph is acyclic."""
    return is_acyclic(g)


def is_star_regular(g: Graph, k: Field) -> bool:
    """Acyclic, and the involution n-proper for every finite n up to sigma."""
    return is_acyclic(g) and sigma(g) <= k.properness_level()


def is_positive_definite_algebra(g: Graph, k: Field) -> bool:
    """Positive definiteness transfers between the field and the algebra of
    any graph with at least one vertex."""
    if not g.vertices:
        raise GraphError("positive definiteness is undefined for the empty graph")
    return k.properness_level() is OMEGA


def proper_algebra(g: Graph, k: Field):
    """(status, certificate): proper, improper with a nonzero annihilating
    element, or unknown for the undecided cyclic case."""
    level = k.properness_level()
    if level is OMEGA:
        return PROPER, None
    if is_acyclic(g):
        if sigma(g) <= level:
            return PROPER, None
        return IMPROPER, improper_element(g, k)
    return UNKNOWN, None


def full_report(g: Graph, k: Field) -> DecisionReport:
    acyclic = is_acyclic(g)
    level = k.properness_level()
    status, cert = proper_algebra(g, k)
    return DecisionReport(
        graph=g,
        field=k,
        acyclic=acyclic,
        mu=dict(mu_table(g)),
        sigma=sigma(g),
        properness_level=level,
        regular=acyclic,
        star_regular=is_star_regular(g, k),
        positive_definite_algebra=level is OMEGA,
        proper_algebra=status,
        improper_certificate=cert,
    )
