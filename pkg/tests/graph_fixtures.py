"""
Named test graphs.

Plain functions so tests can build variants; conftest.py exposes the common
ones as fixtures.
"""

from typing import Iterable, Tuple

import networkx as nx

from graphs.core import Graph
from planar.embedding import planar_embed
from services.generator_service import Triangulation, apex


def from_nx(g: nx.Graph) -> Graph:
    return Graph.from_networkx(g)


def k4() -> Graph:
    return from_nx(nx.complete_graph(4))


def k5() -> Graph:
    return from_nx(nx.complete_graph(5))


def k6() -> Graph:
    return from_nx(nx.complete_graph(6))


def k33() -> Graph:
    return from_nx(nx.complete_bipartite_graph(3, 3))


def petersen() -> Graph:
    return from_nx(nx.petersen_graph())


def cube() -> Graph:
    return from_nx(nx.cubical_graph())


def octahedron() -> Graph:
    return Triangulation.octahedron().graph()


def icosahedron() -> Graph:
    return from_nx(nx.icosahedral_graph())


def cuboctahedron() -> Graph:
    return Triangulation.octahedron().medial()


def pentagonal_bipyramid() -> Graph:
    """Equator 0..4, poles 5 and 6."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, pole) for i in range(5) for pole in (5, 6)]
    return Graph.from_edges(range(7), edges)


def medial(g: Graph) -> Graph:
    """Medial graph of a plane graph; vertex i is the i-th edge in sorted order."""
    embedding = planar_embed(g)
    index = {e: i for i, e in enumerate(g.edges())}

    def key(u: int, w: int) -> int:
        return index[(min(u, w), max(u, w))]

    links = set()
    for x, rot in embedding.rotation.items():
        for i, y in enumerate(rot):
            a, b = key(x, y), key(x, rot[(i + 1) % len(rot)])
            links.add((min(a, b), max(a, b)))
    return Graph.from_edges(range(len(index)), links)


def nested_triangulation() -> Graph:
    """
    A 4-connected triangulation on 14 vertices built from nested 4-cycles.

    0..3 is the middle cycle; 4..7 sits inside it around the 4-valent
    centre 8 and 9..12 outside it around the 4-valent centre 13.
    """
    edges = []
    for ring in ((0, 1, 2, 3), (4, 5, 6, 7), (9, 10, 11, 12)):
        edges += [(ring[i], ring[(i + 1) % 4]) for i in range(4)]
    edges += [(8, x) for x in (4, 5, 6, 7)]
    edges += [(13, x) for x in (9, 10, 11, 12)]
    for i, x in enumerate((4, 5, 6, 7)):
        edges += [(x, i), (x, (i + 1) % 4)]
    for i, x in enumerate((9, 10, 11, 12)):
        edges += [(x, i), (x, (i + 1) % 4)]
    return Graph.from_edges(range(14), edges)


def apexed(g: Graph) -> Tuple[Graph, int]:
    return apex(g)


def with_edges(vertices: Iterable[int], edges: Iterable[Tuple[int, int]]) -> Graph:
    return Graph.from_edges(vertices, edges)
