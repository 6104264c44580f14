import pytest

from leavitt import (
    Element,
    GaussianRationals,
    Graph,
    GraphError,
    OMEGA,
    PrimeField,
    Rationals,
    full_report,
    is_acyclic,
    is_positive_definite_algebra,
    is_regular,
    is_star_regular,
    proper_algebra,
    sigma,
    standard_graph,
)
from leavitt.decide import IMPROPER, PROPER, UNKNOWN

from conftest import FIVE_FIELDS, corpus

Q = Rationals()
QI_ID = GaussianRationals(conjugation=False)
QI_CONJ = GaussianRationals(conjugation=True)
GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF5 = PrimeField(5)
LINE2 = standard_graph("line", 2)


class TestRegular:
    def test_line2(self):
        assert is_regular(LINE2)

    def test_loop(self):
        assert not is_regular(standard_graph("rose", 1))

    def test_empty(self):
        assert is_regular(Graph.build([], []))


class TestStarRegular:
    def test_line2_identity_gaussian(self):
        assert not is_star_regular(LINE2, QI_ID)

    def test_line2_conjugation(self):
        assert is_star_regular(LINE2, QI_CONJ)

    def test_single_vertex_gf2(self):
        assert is_star_regular(standard_graph("line", 1), GF2)

    def test_line2_gf3(self):
        # sigma = 2 and GF(3) is 2-proper
        assert is_star_regular(LINE2, GF3)

    def test_cyclic_never(self):
        for k in FIVE_FIELDS:
            assert not is_star_regular(standard_graph("rose", 1), k)


class TestPositiveDefinite:
    def test_rationals(self):
        for g in corpus().values():
            assert is_positive_definite_algebra(g, Q)

    def test_gf3(self):
        for g in corpus().values():
            assert not is_positive_definite_algebra(g, GF3)

    def test_gaussian_conjugation(self):
        for g in corpus().values():
            assert is_positive_definite_algebra(g, QI_CONJ)

    def test_empty_graph_rejected(self):
        with pytest.raises(GraphError):
            is_positive_definite_algebra(Graph.build([], []), Q)


class TestProperAlgebra:
    def test_rose2_rationals(self):
        assert proper_algebra(standard_graph("rose", 2), Q) == (PROPER, None)

    def test_line2_gf2_certificate(self):
        status, cert = proper_algebra(LINE2, GF2)
        assert status == IMPROPER
        expected = Element.vertex(LINE2, GF2, "v2") + Element.edge(LINE2, GF2, "e1")
        assert cert == expected
        assert (cert.star() * cert).is_zero

    def test_loop_gf2_unknown(self):
        assert proper_algebra(standard_graph("rose", 1), GF2) == (UNKNOWN, None)


class TestFullReport:
    def test_line2_rationals(self):
        r = full_report(LINE2, Q)
        assert r.regular and r.star_regular
        assert r.sigma == 2 and r.properness_level is OMEGA
        assert r.proper_algebra == PROPER

    def test_line2_gf5(self):
        r = full_report(LINE2, GF5)
        assert r.regular and not r.star_regular
        assert r.proper_algebra == IMPROPER
        assert r.improper_certificate is not None

    def test_rose1_everywhere(self):
        for k in FIVE_FIELDS:
            r = full_report(standard_graph("rose", 1), k)
            assert not r.regular and not r.star_regular

    def test_invariants_on_corpus(self):
        for g in corpus().values():
            for k in FIVE_FIELDS:
                r = full_report(g, k)
                if r.star_regular:
                    assert r.regular
                assert r.star_regular == (r.acyclic and r.sigma <= r.properness_level)
                assert r.positive_definite_algebra == (r.properness_level is OMEGA)
                assert r.regular == is_acyclic(g)
                if r.proper_algebra == IMPROPER:
                    cert = r.improper_certificate
                    assert cert is not None and not cert.is_zero
                    assert (cert.star() * cert).is_zero
                if r.proper_algebra == UNKNOWN:
                    assert not r.acyclic and r.properness_level is not OMEGA

    def test_empty_graph_report(self):
        r = full_report(Graph.build([], []), GF3)
        assert r.regular and r.star_regular and r.sigma == 0


class TestPositiveDefiniteEquivalence:
    def test_pd_iff_star_regular_for_every_acyclic_graph(self):
        # positive definite fields make every acyclic algebra star-regular;
        # any finite level fails on a long enough line
        from conftest import ALL_FIELDS, acyclic_corpus

        for k in ALL_FIELDS:
            pd = k.properness_level() is OMEGA
            on_corpus = all(is_star_regular(g, k) for g in acyclic_corpus().values())
            if pd:
                assert on_corpus
            else:
                level = k.properness_level()
                assert not is_star_regular(standard_graph("line", level + 1), k)
                assert is_star_regular(standard_graph("line", level), k)


class TestMonotonicity:
    def test_adding_a_path_into_a_sink_never_helps(self):
        # lengthening a sink's past only raises sigma
        from leavitt.graphs import sinks

        for name, g in corpus().items():
            if not is_acyclic(g) or not sinks(g):
                continue
            target = sinks(g)[0]
            bigger = Graph.build(
                list(g.vertices) + ["zz1", "zz2"],
                [tuple(e) for e in g.edges]
                + [("zze1", "zz1", "zz2"), ("zze2", "zz2", target)],
            )
            assert sigma(bigger) >= sigma(g)
            for k in FIVE_FIELDS:
                if not is_star_regular(g, k):
                    assert not is_star_regular(bigger, k)
