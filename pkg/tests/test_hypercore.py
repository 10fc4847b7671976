import numpy as np
import pytest

from bergeham import hypercore as hc
from bergeham.hypercore import BergeCertificate, CertificateKind, Violation, new_hypergraph


def test_h4_degrees(h4):
    assert h4.m == 4
    assert h4.degrees() == [3, 2, 2, 2, 3]
    assert hc.min_degree(h4) == 2
    assert hc.degree(h4, 1) == 3


def test_incidence_matches_edges(h4):
    inc = h4.incidence()
    assert inc.shape == (4, 5)
    assert inc.dtype == np.uint8
    assert inc.sum(axis=0).tolist() == h4.degrees()
    assert inc[3].tolist() == [0, 1, 1, 1, 0]


def test_edges_sorted_within_and_order_kept():
    H = new_hypergraph(4, 3, [(4, 1, 2), (3, 2, 1)])
    assert H.edges == ((1, 2, 4), (1, 2, 3))
    assert H.canonical().edges == ((1, 2, 3), (1, 2, 4))


@pytest.mark.parametrize(
    "n, r, edges, exc, edge",
    [
        (5, 3, [(1, 2)], hc.NonUniformEdge, 1),
        (5, 3, [(1, 2, 3), (1, 1, 2)], hc.NonUniformEdge, 2),
        (5, 3, [(1, 2, 6)], hc.VertexOutOfRange, 1),
        (5, 3, [(0, 2, 3)], hc.VertexOutOfRange, 1),
        (5, 3, [(1, 2, 3), (3, 2, 1)], hc.DuplicateEdge, 2),
        (5, 1, [], hc.RTooSmall, None),
        (3, 4, [], hc.RExceedsN, None),
        (65, 3, [], hc.TooManyVertices, None),
    ],
)
def test_validation_errors(n, r, edges, exc, edge):
    with pytest.raises(exc) as info:
        new_hypergraph(n, r, edges)
    assert info.value.edge == edge
    assert isinstance(info.value, ValueError)


def test_degree_out_of_range(h4):
    with pytest.raises(hc.VertexOutOfRange):
        hc.degree(h4, 6)


def test_empty_hypergraph_min_degree():
    assert hc.min_degree(new_hypergraph(4, 3, [])) == 0


def test_labels_survive_edge_removal_and_ignore_equality(h4):
    G = h4.without_edges([2])
    assert G.labels == (1, 3, 4)
    assert G == new_hypergraph(5, 3, [(1, 2, 5), (1, 4, 5), (2, 3, 4)])


def test_relabel_preserves_degree_multiset(h4):
    G = h4.relabel([5, 4, 3, 2, 1])
    assert sorted(G.degrees()) == sorted(h4.degrees())
    assert G.edges[3] == (2, 3, 4)


def _path(vs, es):
    return BergeCertificate(CertificateKind.PATH, vs, es)


def test_valid_path(h4):
    c = _path((2, 3, 5, 1, 4), (4, 2, 1, 3))
    res = hc.validate_certificate(h4, c)
    assert res.ok and res
    assert hc.is_hamiltonian_certificate(h4, c)


def test_short_path_is_valid_but_not_hamiltonian(h4):
    c = _path((1, 5), (3,))
    assert hc.validate_certificate(h4, c)
    assert not hc.is_hamiltonian_certificate(h4, c)


@pytest.mark.parametrize(
    "c, violation, position",
    [
        (_path((1, 2, 3), (1,)), Violation.WRONG_LENGTH, None),
        (_path((1, 9), (1,)), Violation.VERTEX_OUT_OF_RANGE, 2),
        (_path((1, 2, 1), (1, 1)), Violation.REPEATED_VERTEX, 3),
        (_path((1, 2), (5,)), Violation.INDEX_OUT_OF_RANGE, 1),
        (_path((2, 5, 1), (1, 1)), Violation.REPEATED_EDGE, 2),
        (_path((2, 5, 3), (1, 4)), Violation.PAIR_NOT_COVERED, 2),
        (BergeCertificate("cycle", (1, 2, 5), (1, 1)), Violation.WRONG_LENGTH, None),
    ],
)
def test_violations(h4, c, violation, position):
    res = hc.validate_certificate(h4, c)
    assert not res.ok
    assert res.violation is violation
    assert res.position == position


def test_cycle_closing_pair_checked():
    C = new_hypergraph(5, 3, [(1, 2, 3), (2, 3, 4), (3, 4, 5), (1, 4, 5), (1, 2, 5)])
    good = BergeCertificate("cycle", (1, 2, 3, 4, 5), (1, 2, 3, 4, 5))
    assert hc.validate_certificate(C, good)
    bad = BergeCertificate("cycle", (1, 2, 3, 4, 5), (1, 2, 3, 4, 2))
    assert hc.validate_certificate(C, bad).violation is Violation.REPEATED_EDGE
    bad = BergeCertificate("cycle", (1, 2, 3, 4, 5), (1, 2, 3, 5, 4))
    res = hc.validate_certificate(C, bad)
    assert res.violation is Violation.PAIR_NOT_COVERED and res.position == 4


def test_interleaved_rendering():
    c = _path((1, 7, 6), (7, 5))
    assert c.interleaved() == "v1,e7,v7,e5,v6"
    assert c.interleaved(labels=list(range(10, 20))) == "v1,e16,v7,e14,v6"
