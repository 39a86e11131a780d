import pytest

import graph_fixtures as gf
from errors import InvalidInputError, ResourceLimitError
from construction.certificates import verify_certificate
from construction.oracle import has_topological_k5, mohar_lemma_check


def test_k5_is_its_own_subdivision():
    certificate = has_topological_k5(gf.k5())
    assert certificate.branch == [0, 1, 2, 3, 4]
    assert all(len(p.vertices) == 2 for p in certificate.paths)


def test_subdivided_k5_is_found():
    g = gf.with_edges(range(6), [(0, 5), (5, 1)] + [(a, b) for a in range(5) for b in range(a + 1, 5)
                                                   if (a, b) != (0, 1)])
    certificate = has_topological_k5(g)
    assert certificate is not None
    assert verify_certificate(g, certificate)
    assert certificate.branch == [0, 1, 2, 3, 4]
    assert certificate.path_for(0, 1).vertices == [0, 5, 1]


@pytest.mark.parametrize("builder", [gf.k33, gf.petersen, gf.cube, gf.icosahedron])
def test_graphs_without_tk5(builder):
    assert has_topological_k5(builder()) is None


def test_apexed_octahedron_has_tk5(apexed_octahedron):
    g, _ = apexed_octahedron
    certificate = has_topological_k5(g)
    assert verify_certificate(g, certificate)


def test_oracle_size_cap():
    with pytest.raises(ResourceLimitError):
        has_topological_k5(gf.k5(), max_vertices=4)


def test_min_degree_five_planar_graph_has_k4_minus():
    assert mohar_lemma_check(gf.icosahedron())


@pytest.mark.parametrize("builder", [gf.octahedron, gf.k6])
def test_mohar_lemma_preconditions(builder):
    with pytest.raises(InvalidInputError):
        mohar_lemma_check(builder())
