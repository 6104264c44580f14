import pytest

from leavitt import (
    CyclicGraphError,
    Element,
    GaussianRationals,
    Path,
    PrimeField,
    QuadraticExtField,
    Rationals,
    dimension,
    graph_union,
    m_n_graph,
    phi,
    phi_inv,
    relabel_graph,
    sink_basis,
    sink_normal_form,
    standard_graph,
)
from leavitt.linalg import conj_transpose, is_zero_matrix, mat_from_rows, mat_mul
from leavitt.semisimple import MatrixImage

from conftest import acyclic_corpus, random_element

Q = Rationals()
LINE2 = standard_graph("line", 2)
LINE3 = standard_graph("line", 3)

PHI_FIELDS = (Q, PrimeField(3), GaussianRationals(conjugation=True))


class TestSinkBasis:
    def test_line2(self):
        basis = sink_basis(LINE2)
        assert basis.sinks == ("v2",)
        assert basis.paths["v2"] == (Path("v2", ()), Path("v1", ("e1",)))

    def test_isolated(self):
        basis = sink_basis(standard_graph("line", 1))
        assert basis.paths["v1"] == (Path("v1", ()),)

    def test_union_sizes(self):
        g = graph_union(LINE2, relabel_graph(standard_graph("line", 1), "u"))
        basis = sink_basis(g)
        assert [basis.size(v) for v in basis.sinks] == [2, 1]

    def test_cyclic_rejected(self):
        with pytest.raises(CyclicGraphError):
            sink_basis(standard_graph("rose", 1))


class TestSinkNormalForm:
    def test_line2_vertex_expands(self):
        v1 = Element.vertex(LINE2, Q, "v1")
        nf = sink_normal_form(v1)
        p = Path("v1", ("e1",))
        assert dict(nf.items()) == {(p, p): Q.one}

    def test_sink_vertex_fixed(self):
        v2 = Element.vertex(LINE2, Q, "v2")
        assert dict(sink_normal_form(v2).items()) == dict(v2.items())

    def test_line3_vertex_expands_twice(self):
        v1 = Element.vertex(LINE3, Q, "v1")
        p = Path("v1", ("e1", "e2"))
        assert dict(sink_normal_form(v1).items()) == {(p, p): Q.one}

    def test_renormalizing_recovers_element(self, rng):
        for g in acyclic_corpus().values():
            for _ in range(20):
                x = random_element(g, Q, rng)
                nf = sink_normal_form(x)
                back = Element.from_terms(g, Q, [(c, p, q) for (p, q), c in nf.items()])
                assert back == x


class TestPhi:
    def test_zero(self):
        assert phi(Element.zero(LINE2, Q)).is_zero()

    def test_line2_sink_vertex(self):
        image = phi(Element.vertex(LINE2, Q, "v2"))
        assert image.blocks["v2"] == mat_from_rows(Q, [[1, 0], [0, 0]])

    def test_line2_edge_is_matrix_unit_21(self):
        image = phi(Element.edge(LINE2, Q, "e1"))
        assert image.blocks["v2"] == mat_from_rows(Q, [[0, 0], [1, 0]])

    def test_identity_maps_to_identity_blocks(self):
        for g in acyclic_corpus().values():
            image = phi(Element.one(g, Q))
            expected = MatrixImage.identity(sink_basis(g), Q)
            assert image == expected

    def test_star_algebra_isomorphism(self, rng):
        for g in acyclic_corpus().values():
            for k in PHI_FIELDS:
                for _ in range(100):
                    x = random_element(g, k, rng)
                    y = random_element(g, k, rng)
                    assert phi(x * y) == phi(x) * phi(y)
                    assert phi(x + y) == phi(x) + phi(y)
                    c = k.sample(rng)
                    assert phi(x.scale(c)) == phi(x).scale(c)
                    assert phi(x.star()) == phi(x).star()
                    assert phi_inv(phi(x)) == x

    def test_phi_of_phi_inv_is_identity(self, rng):
        for g in acyclic_corpus().values():
            basis = sink_basis(g)
            for _ in range(10):
                image = MatrixImage.zero(basis, Q)
                for v in basis.sinks:
                    n = basis.size(v)
                    image.blocks[v] = [[Q.sample(rng) for _ in range(n)] for _ in range(n)]
                assert phi(phi_inv(image)) == image

    def test_phi_inv_examples(self):
        from leavitt.semisimple import matrix_image_from_blocks

        basis = sink_basis(LINE2)
        ident = MatrixImage.identity(basis, Q)
        assert phi_inv(ident) == Element.one(LINE2, Q)
        assert phi_inv(MatrixImage.zero(basis, Q)).is_zero
        unit12 = matrix_image_from_blocks(
            LINE2, Q, {"v2": mat_from_rows(Q, [[0, 1], [0, 0]])})
        assert phi_inv(unit12) == Element.ghost(LINE2, Q, "e1")

    def test_block_shape_errors(self):
        from leavitt.linalg import ShapeError
        from leavitt.semisimple import matrix_image_from_blocks

        with pytest.raises(ShapeError):
            matrix_image_from_blocks(LINE2, Q, {"v2": mat_from_rows(Q, [[1]])})
        with pytest.raises(ShapeError):
            matrix_image_from_blocks(LINE2, Q, {"v1": mat_from_rows(Q, [[1]])})
        bad = MatrixImage(Q, sink_basis(LINE2), {"v2": mat_from_rows(Q, [[1]])})
        with pytest.raises(ShapeError):
            phi_inv(bad)

    def test_cyclic_rejected(self):
        with pytest.raises(CyclicGraphError):
            phi(Element.vertex(standard_graph("rose", 1), Q, "v"))


class TestDimension:
    def test_lines(self):
        for n in range(1, 7):
            assert dimension(standard_graph("line", n)) == n * n

    def test_isolated(self):
        assert dimension(standard_graph("line", 1)) == 1

    def test_union(self):
        g = graph_union(LINE2, relabel_graph(standard_graph("line", 1), "u"))
        assert dimension(g) == 5

    def test_mn_scaling(self):
        for g in acyclic_corpus().values():
            d = dimension(g)
            for n in (2, 3, 4):
                assert dimension(m_n_graph(g, n)) == n * n * d


class TestColumnConstruction:
    def test_improper_tuple_gives_annihilated_matrix(self):
        fields = [PrimeField(2), PrimeField(3), PrimeField(5),
                  QuadraticExtField(3), GaussianRationals(conjugation=False)]
        for k in fields:
            n = k.properness_level() + 1
            tup = k.improper_tuple(n)
            assert tup is not None
            a = [[k.zero for _ in range(n)] for _ in range(n)]
            for i, x in enumerate(tup):
                a[i][0] = x
            assert not is_zero_matrix(a)
            assert is_zero_matrix(mat_mul(conj_transpose(a), a))
