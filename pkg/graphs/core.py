"""
Graph Core Module

Immutable simple undirected graph, vertex paths and vertex cuts.
Vertices are integers; parsed graphs use 0..n-1 while derived graphs
(deletions, hammocks) keep the labels of their host.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

import networkx as nx

from errors import InvalidInputError

logger = logging.getLogger(__name__)


class Graph:
    """
    Simple undirected graph with sorted adjacency tuples.

    The adjacency relation is validated on construction: it must be
    symmetric, loop-free and free of repeated neighbours.
    """

    __slots__ = ("_adj", "_m", "_nx")

    def __init__(self, adjacency: Mapping[int, Iterable[int]]):
        adj: Dict[int, Tuple[int, ...]] = {}
        for v, nbrs in adjacency.items():
            nbr_list = list(nbrs)
            if v in nbr_list:
                raise InvalidInputError(f"self-loop at vertex {v}")
            if len(set(nbr_list)) != len(nbr_list):
                raise InvalidInputError(f"repeated neighbour at vertex {v}")
            adj[v] = tuple(sorted(nbr_list))
        half = 0
        for v, nbrs in adj.items():
            for w in nbrs:
                if w not in adj or v not in adj[w]:
                    raise InvalidInputError(f"adjacency is not symmetric at edge {v}-{w}")
            half += len(nbrs)
        self._adj = dict(sorted(adj.items()))
        self._m = half // 2
        self._nx: Optional[nx.Graph] = None

    # ------------------------------------------------------------------
    # Construction helpers
    # ------------------------------------------------------------------

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[Tuple[int, int]]) -> "Graph":
        adj: Dict[int, set] = {v: set() for v in vertices}
        for u, w in edges:
            if u == w:
                raise InvalidInputError(f"self-loop at vertex {u}")
            adj.setdefault(u, set()).add(w)
            adj.setdefault(w, set()).add(u)
        return cls(adj)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Build from a networkx graph, relabelling to 0..n-1 unless labels are ints."""
        if not all(isinstance(v, int) for v in g.nodes):
            mapping = {v: i for i, v in enumerate(sorted(g.nodes, key=str))}
            g = nx.relabel_nodes(g, mapping)
        return cls.from_edges(g.nodes, g.edges)

    def to_networkx(self) -> nx.Graph:
        """Return a cached, frozen networkx copy with nodes in sorted order."""
        if self._nx is None:
            g = nx.Graph()
            g.add_nodes_from(self._adj)
            g.add_edges_from(self.edges())
            self._nx = nx.freeze(g)
        return self._nx

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> List[int]:
        return list(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, w: int) -> bool:
        nbrs = self._adj.get(u)
        return nbrs is not None and w in nbrs

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, w) for u, nbrs in self._adj.items() for w in nbrs if u < w]

    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self._adj.values()), default=0)

    # ------------------------------------------------------------------
    # Derived graphs
    # ------------------------------------------------------------------

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on `vertices`, keeping labels."""
        keep = set(vertices)
        missing = keep - set(self._adj)
        if missing:
            raise InvalidInputError(f"vertices not in graph: {sorted(missing)}")
        return Graph({v: [w for w in self._adj[v] if w in keep] for v in keep})

    def remove(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        return self.subgraph(v for v in self._adj if v not in drop)

    def relabeled(self) -> Tuple["Graph", Dict[int, int]]:
        """Relabel to 0..n-1 in sorted order; returns the graph and old-to-new map."""
        mapping = {v: i for i, v in enumerate(self._adj)}
        return Graph({mapping[v]: [mapping[w] for w in nbrs]
                      for v, nbrs in self._adj.items()}), mapping

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(tuple(self._adj.items()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Path:
    """A sequence of distinct vertices; a single vertex is a trivial path."""

    vertices: Tuple[int, ...]

    def __post_init__(self):
        if not self.vertices:
            raise InvalidInputError("a path needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidInputError(f"path repeats a vertex: {list(self.vertices)}")
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @property
    def interior(self) -> Tuple[int, ...]:
        return self.vertices[1:-1]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def edges(self) -> List[Tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def reversed(self) -> "Path":
        return Path(tuple(reversed(self.vertices)))

    def concat(self, other: "Path") -> "Path":
        """Join two paths sharing this path's end and the other's start."""
        if self.end != other.start:
            raise InvalidInputError(f"cannot join path ending at {self.end} with path starting at {other.start}")
        return Path(self.vertices + other.vertices[1:])

    def is_path_in(self, g: Graph) -> bool:
        return all(v in g for v in self.vertices) and all(g.has_edge(a, b) for a, b in self.edges())


@dataclass(frozen=True)
class CutSet:
    """A set of vertices whose removal is meant to disconnect a graph."""

    vertices: FrozenSet[int]

    def __len__(self) -> int:
        return len(self.vertices)

    def separates(self, g: Graph, s: int, t: int) -> bool:
        if s in self.vertices or t in self.vertices:
            return False
        rest = g.remove(self.vertices).to_networkx()
        return not nx.has_path(rest, s, t)


def components(g: Graph, removed: Iterable[int] = ()) -> List[FrozenSet[int]]:
    """
    Connected components of g minus `removed`.

    Returns:
        Components as frozensets, ordered by their smallest vertex.
    """
    drop = set(removed)
    view = g.to_networkx()
    if drop:
        view = view.subgraph(v for v in g.vertices if v not in drop)
    comps = [frozenset(c) for c in nx.connected_components(view)]
    comps.sort(key=min)
    return comps
