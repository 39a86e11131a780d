"""
Connectivity Module

Vertex connectivity, minimum vertex cuts and vertex-disjoint path systems.

Every routing question reduces to a unit vertex-capacity flow: each vertex v
is split into ("in", v) -> ("out", v) with capacity 1 and each edge becomes
arcs out -> in in both directions.
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from errors import AdjacencyError, InvalidInputError
from graphs.core import CutSet, Graph, Path

logger = logging.getLogger(__name__)

_SOURCE = "source"
_SINK = "sink"


def vertex_connectivity(g: Graph) -> int:
    """
    Compute the vertex connectivity of g.

    Complete graphs have connectivity n - 1.

    Raises:
        InvalidInputError: If g has fewer than two vertices.
    """
    if g.n < 2:
        raise InvalidInputError("vertex connectivity needs at least 2 vertices")
    return nx.node_connectivity(g.to_networkx())


def local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths for nonadjacent s, t."""
    _check_pair(g, s, t)
    return nx.algorithms.connectivity.local_node_connectivity(g.to_networkx(), s, t)


def min_vertex_cut(g: Graph, s: int, t: int) -> CutSet:
    """
    Find a minimum vertex set separating s from t.

    Args:
        g: Host graph.
        s: First terminal.
        t: Second terminal, not adjacent to s.

    Returns:
        CutSet whose size equals the number of internally disjoint s-t paths.

    Raises:
        AdjacencyError: If s and t are adjacent.
    """
    _check_pair(g, s, t)
    cut = nx.minimum_node_cut(g.to_networkx(), s, t)
    return CutSet(frozenset(cut))


def _check_pair(g: Graph, s: int, t: int) -> None:
    if s not in g or t not in g:
        raise InvalidInputError(f"terminals {s}, {t} must be vertices of the graph")
    if s == t:
        raise InvalidInputError("terminals must be distinct")
    if g.has_edge(s, t):
        raise AdjacencyError(f"vertices {s} and {t} are adjacent; no vertex cut separates them")


# ============================================================================
# Disjoint paths via node-split flow
# ============================================================================

def _route(g: Graph, sources: Dict[int, int], targets: Set[int], k: int,
           forbidden: Set[int]) -> Optional[List[Path]]:
    """
    Route k units from `sources` to `targets` through vertex-split g.

    Args:
        sources: Source vertex -> vertex capacity (1, or k for a fan hub).
        targets: Target vertices, each absorbing one unit.
        forbidden: Vertices the routing must avoid.

    Returns:
        Paths sorted by vertex sequence, or None if fewer than k units fit.
    """
    net = nx.DiGraph()
    net.add_edge(_SOURCE, "super", capacity=k)
    for x, cap in sources.items():
        net.add_edge("super", ("in", x), capacity=cap)
    for v in g.vertices:
        if v in forbidden:
            continue
        net.add_edge(("in", v), ("out", v), capacity=sources.get(v, 1))
        if v in targets:
            net.add_edge(("out", v), _SINK, capacity=1)
            continue
        for w in g.neighbors(v):
            if w in forbidden or w in sources:
                continue
            net.add_edge(("out", v), ("in", w), capacity=1)

    if _SINK not in net:
        return None
    value, flow = nx.maximum_flow(net, _SOURCE, _SINK)
    if value < k:
        return None

    paths = []
    for _ in range(k):
        walk: List[int] = []
        node = "super"
        while node != _SINK:
            nxt = next(w for w, f in flow[node].items() if f > 0)
            flow[node][nxt] -= 1
            if isinstance(nxt, tuple) and nxt[0] == "in":
                walk.append(nxt[1])
            node = nxt
        paths.append(Path(tuple(walk)))
    paths.sort(key=lambda p: p.vertices)
    return paths


def disjoint_paths(g: Graph, X: Iterable[int], Y: Iterable[int], k: int,
                   forbidden: Iterable[int] = ()) -> Optional[List[Path]]:
    """
    Find k pairwise vertex-disjoint (X, Y)-paths avoiding `forbidden`.

    Each path meets X only in its first vertex and Y only in its last; a
    vertex of X and Y is a trivial path.

    Args:
        g: Host graph.
        X: Start set.
        Y: End set.
        k: Number of paths, at most min(|X|, |Y|).
        forbidden: Vertices no path may use.

    Returns:
        Paths sorted by vertex sequence, or None if no such system exists.

    Raises:
        InvalidInputError: If k is out of range or a vertex is unknown.
    """
    xs, ys, banned = set(X), set(Y), set(forbidden)
    if k < 1 or k > min(len(xs), len(ys)):
        raise InvalidInputError(f"k={k} must lie in 1..min(|X|, |Y|)={min(len(xs), len(ys))}")
    unknown = (xs | ys) - set(g.vertices)
    if unknown:
        raise InvalidInputError(f"vertices not in graph: {sorted(unknown)}")
    xs -= banned
    ys -= banned
    if k > min(len(xs), len(ys)):
        return None
    return _route(g, {x: 1 for x in xs}, ys, k, banned)


def fan(g: Graph, x: int, Y: Iterable[int], k: int,
        forbidden: Iterable[int] = ()) -> Optional[List[Path]]:
    """
    Find k paths from x to distinct vertices of Y sharing only x.

    Returns:
        Paths starting at x, sorted by vertex sequence, or None.

    Raises:
        InvalidInputError: If x lies in Y or k exceeds |Y|.
    """
    ys, banned = set(Y), set(forbidden)
    if x in ys:
        raise InvalidInputError(f"fan centre {x} lies in the target set")
    if x not in g:
        raise InvalidInputError(f"fan centre {x} is not a vertex")
    if k < 1 or k > len(ys):
        raise InvalidInputError(f"k={k} must lie in 1..|Y|={len(ys)}")
    if x in banned:
        return None
    ys -= banned
    if k > len(ys):
        return None
    return _route(g, {x: k}, ys, k, banned)


def is_k_connected(g: Graph, k: int) -> bool:
    """True if g has more than k vertices and no cut of fewer than k vertices."""
    if g.n <= k:
        return False
    return vertex_connectivity(g) >= k
