import pytest

import graph_fixtures as gf
from errors import GraphFormatError
from utils.constants import FORMAT_ADJACENCY, FORMAT_GRAPH6
from utils.graph_io import (
    detect_format,
    parse_adjacency,
    parse_graph6,
    read_graph,
    to_adjacency,
    to_graph6,
)


def test_parse_graph6_k5():
    g = parse_graph6("D~{")
    assert g == gf.k5()


def test_parse_graph6_k4_with_header():
    g = parse_graph6(">>graph6<<C~\n")
    assert g.n == 4 and g.m == 6


def test_parse_graph6_reports_byte_position():
    with pytest.raises(GraphFormatError, match="byte 2"):
        parse_graph6("D~ {")


def test_parse_graph6_empty():
    with pytest.raises(GraphFormatError):
        parse_graph6("   ")


def test_to_graph6_k5():
    assert to_graph6(gf.k5()) == "D~{"


def test_graph6_preserves_petersen():
    g = gf.petersen()
    assert parse_graph6(to_graph6(g)) == g


def test_parse_adjacency_closes_edges_symmetrically():
    text = """
    # a triangle with a pendant vertex
    0: 1 2
    1: 2
    3: 0   # pendant
    """
    g = parse_adjacency(text)
    assert g.n == 4
    assert g.m == 4
    assert g.has_edge(2, 0) and g.has_edge(0, 3)


def test_parse_adjacency_line_numbers():
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_adjacency("0: 1\n1 2\n")


def test_parse_adjacency_rejects_self_loop():
    with pytest.raises(GraphFormatError, match="self-loop"):
        parse_adjacency("0: 0 1\n")


def test_parse_adjacency_rejects_gaps_in_labels():
    with pytest.raises(GraphFormatError, match="outside"):
        parse_adjacency("0: 5\n")


def test_adjacency_text_reparses(cube):
    assert parse_adjacency(to_adjacency(cube)) == cube


def test_detect_format():
    assert detect_format("x.g6", "") == FORMAT_GRAPH6
    assert detect_format("x.adj", "") == FORMAT_ADJACENCY
    assert detect_format("x", "0: 1\n") == FORMAT_ADJACENCY
    assert detect_format("x", "D~{\n") == FORMAT_GRAPH6


def test_read_graph_from_file(tmp_path):
    path = tmp_path / "k5.g6"
    path.write_text("D~{\n")
    assert read_graph(str(path)) == gf.k5()


def test_read_graph_missing_file(tmp_path):
    with pytest.raises(OSError):
        read_graph(str(tmp_path / "absent.g6"))
