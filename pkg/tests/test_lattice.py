"""Dynkin-diagram lattices and their integral invariants."""

import pytest

from k3family import DynkinDiagram, GramMatrix, Stream, e8_diagram, gram_from_diagram, lattice_invariants, t237_diagram
from k3family.elimination import int_matrix_det
from k3family.lattice import InvalidDiagramError, conjugate, path_with_tail, random_unimodular

import oracle_data as od


# -- diagrams ------------------------------------------------------------------------


def test_diagram_normalizes_edge_order():
    d = DynkinDiagram(nodes=3, edges=((2, 0), (1, 2)))
    assert d.edges == ((0, 2), (1, 2))


def test_diagram_rejects_self_loop():
    with pytest.raises(InvalidDiagramError):
        DynkinDiagram(nodes=2, edges=((1, 1),))


def test_diagram_rejects_out_of_range():
    with pytest.raises(InvalidDiagramError):
        DynkinDiagram(nodes=2, edges=((0, 2),))


def test_diagram_rejects_duplicate_even_reversed():
    with pytest.raises(InvalidDiagramError):
        DynkinDiagram(nodes=3, edges=((0, 1), (1, 0)))


def test_from_edge_text():
    d = DynkinDiagram.from_edge_text("""
# a triangle-free path
0 1
1 2
""")
    assert d.nodes == 3 and d.edges == ((0, 1), (1, 2))


def test_path_with_tail_shape():
    d = path_with_tail(4, 1)
    assert d.nodes == 5
    assert d.edges == ((0, 1), (1, 2), (2, 3), (1, 4))


def test_t237_diagram_arms():
    d = t237_diagram()
    assert d.nodes == 10 and len(d.edges) == 9
    # branch node 2 has degree 3; arm lengths 2, 6, 1 edges
    degree = [0] * d.nodes
    for i, j in d.edges:
        degree[i] += 1
        degree[j] += 1
    assert degree[2] == 3
    assert sorted(degree).count(1) == 3  # three arm endpoints


def test_e8_diagram_shape():
    d = e8_diagram()
    assert d.nodes == 8 and len(d.edges) == 7
    degree = [0] * d.nodes
    for i, j in d.edges:
        degree[i] += 1
        degree[j] += 1
    assert max(degree) == 3


# -- Gram matrices --------------------------------------------------------------------


def test_gram_from_diagram_entries():
    G = gram_from_diagram(DynkinDiagram(nodes=3, edges=((0, 1), (1, 2))))
    assert G.as_lists() == [[-2, 1, 0], [1, -2, 1], [0, 1, -2]]


def test_gram_matrix_validation():
    with pytest.raises(InvalidDiagramError):
        GramMatrix(((1, 2), (2,)))
    with pytest.raises(InvalidDiagramError):
        GramMatrix(((1, 2), (3, 4)))


# -- invariants -----------------------------------------------------------------------


def test_t237_invariants_match_oracle():
    inv = lattice_invariants(gram_from_diagram(t237_diagram()))
    assert inv.determinant == od.T237_DET == -1
    assert inv.signature == od.T237_SIGNATURE == (1, 9)
    assert inv.even
    assert inv.radical == 0


def test_e8_invariants_match_oracle():
    inv = lattice_invariants(gram_from_diagram(e8_diagram()))
    assert inv.determinant == od.E8_DET == 1
    assert inv.signature == od.E8_SIGNATURE == (0, 8)
    assert inv.even
    assert inv.radical == 0


def test_rank_one_negative():
    inv = lattice_invariants(GramMatrix(((-2,),)))
    assert inv.determinant == -2
    assert inv.signature == (0, 1)
    assert inv.even and inv.radical == 0


def test_odd_unimodular_rank_one():
    inv = lattice_invariants(GramMatrix(((1,),)))
    assert inv.determinant == 1
    assert inv.signature == (1, 0)
    assert not inv.even


def test_degenerate_form():
    inv = lattice_invariants(GramMatrix(((0, 0), (0, 0))))
    assert inv.determinant == 0
    assert inv.radical == 2
    assert inv.signature == (0, 0)


def test_rank_deficient_form():
    # rank 1: the two rows are proportional
    inv = lattice_invariants(GramMatrix(((2, 2), (2, 2))))
    assert inv.determinant == 0
    assert inv.radical == 1
    assert inv.signature == (1, 0)


def test_hyperbolic_plane():
    inv = lattice_invariants(GramMatrix(((0, 1), (1, 0))))
    assert inv.determinant == -1
    assert inv.signature == (1, 1)
    assert inv.even and inv.radical == 0


def test_signature_counts_sum_to_rank_minus_radical():
    for G in (gram_from_diagram(t237_diagram()), gram_from_diagram(e8_diagram())):
        inv = lattice_invariants(G)
        pos, neg = inv.signature
        assert pos + neg + inv.radical == G.n


# -- basis independence ------------------------------------------------------------------


def test_random_unimodular_is_unimodular_and_seeded():
    s = Stream(11, "uni")
    U = random_unimodular(10, s, ops=40)
    assert int_matrix_det(U) in (1, -1)
    assert random_unimodular(10, Stream(11, "uni"), ops=40) == U


def test_invariants_stable_under_basis_change():
    G = gram_from_diagram(t237_diagram())
    base = lattice_invariants(G)
    s = Stream(3, "conj")
    for _ in range(5):
        U = random_unimodular(G.n, s, ops=35)
        inv = lattice_invariants(conjugate(U, G))
        assert (inv.determinant, inv.signature, inv.even, inv.radical) == (
            base.determinant,
            base.signature,
            base.even,
            base.radical,
        )
