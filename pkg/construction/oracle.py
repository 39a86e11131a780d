"""
Oracle Module

Brute-force ground truth for small graphs: search for a subdivided K5 by
trying branch sets and backtracking over systems of internally disjoint
connecting paths, and the minimum-degree-5 K4-minus lemma as a checkable
predicate.
"""

import logging
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

import networkx as nx

from errors import InternalConsistencyError, InvalidInputError, ResourceLimitError
from graphs.core import Graph, Path
from graphs.subgraphs import find_k4_minus
from models import Tk5Certificate
from construction.certificates import verify_certificate
from utils.constants import BRANCH_SIZE, ORACLE_MAX_VERTICES

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def _branch_candidates(g: Graph) -> List[Tuple[int, ...]]:
    """5-sets of degree-4+ vertices, densest first."""
    eligible = [v for v in g.vertices if g.degree(v) >= 4]
    scored = []
    for subset in combinations(eligible, BRANCH_SIZE):
        inside = sum(1 for a, b in combinations(subset, 2) if g.has_edge(a, b))
        degree_sum = sum(g.degree(v) for v in subset)
        scored.append((-inside, -degree_sum, subset))
    scored.sort()
    return [subset for _, _, subset in scored]


class _PathSystemSearch:
    """Backtracking over the non-adjacent branch pairs of one branch set."""

    def __init__(self, g: Graph, branch: Tuple[int, ...]):
        self.g = g
        self.nx_graph = g.to_networkx()
        self.branch = frozenset(branch)
        self.failed: Set[Tuple[FrozenSet[Pair], FrozenSet[int]]] = set()

    def _available(self, pair: Pair, used: FrozenSet[int]):
        a, b = pair
        keep = [x for x in self.g.vertices
                if x in (a, b) or (x not in used and x not in self.branch)]
        return self.nx_graph.subgraph(keep)

    def _free_degree(self, x: int, used: FrozenSet[int]) -> int:
        return sum(1 for y in self.g.neighbors(x) if y not in used and y not in self.branch)

    def _feasible(self, pairs: FrozenSet[Pair], used: FrozenSet[int]) -> bool:
        demand: Dict[int, int] = {}
        for a, b in pairs:
            demand[a] = demand.get(a, 0) + 1
            demand[b] = demand.get(b, 0) + 1
        if any(self._free_degree(x, used) < k for x, k in demand.items()):
            return False
        return all(nx.has_path(self._available(p, used), *p) for p in pairs)

    def _pick(self, pairs: FrozenSet[Pair], used: FrozenSet[int]) -> Pair:
        return min(pairs, key=lambda p: (min(self._free_degree(p[0], used),
                                             self._free_degree(p[1], used)), p))

    def solve(self, pairs: FrozenSet[Pair], used: FrozenSet[int]) -> Optional[Dict[Pair, Path]]:
        if not pairs:
            return {}
        state = (pairs, used)
        if state in self.failed or not self._feasible(pairs, used):
            self.failed.add(state)
            return None
        pair = self._pick(pairs, used)
        rest = pairs - {pair}
        for seq in nx.shortest_simple_paths(self._available(pair, used), *pair):
            found = self.solve(rest, used | frozenset(seq[1:-1]))
            if found is not None:
                found[pair] = Path(tuple(seq))
                return found
        self.failed.add(state)
        return None


def has_topological_k5(g: Graph, max_vertices: Optional[int] = None) -> Optional[Tk5Certificate]:
    """
    Search g for a subdivided K5.

    Adjacent branch pairs are joined by their edge; the remaining pairs are
    routed by backtracking, most constrained pair first, with failed states
    memoized.

    Args:
        g: Graph to search.
        max_vertices: Size cap; defaults to ORACLE_MAX_VERTICES.

    Returns:
        A verified certificate, or None if g has no TK5.

    Raises:
        ResourceLimitError: If g exceeds the size cap.
    """
    cap = ORACLE_MAX_VERTICES if max_vertices is None else max_vertices
    if g.n > cap:
        raise ResourceLimitError(f"oracle search is capped at {cap} vertices; graph has {g.n}")
    if g.n < BRANCH_SIZE or nx.is_planar(g.to_networkx()):
        return None
    candidates = _branch_candidates(g)
    logger.debug(f"Oracle: {len(candidates)} branch sets to try")
    for branch in candidates:
        direct = {}
        open_pairs = []
        for a, b in combinations(branch, 2):
            if g.has_edge(a, b):
                direct[(a, b)] = Path((a, b))
            else:
                open_pairs.append((a, b))
        routed = _PathSystemSearch(g, branch).solve(frozenset(open_pairs), frozenset())
        if routed is None:
            continue
        certificate = Tk5Certificate.from_paths(branch, {**direct, **routed})
        if not verify_certificate(g, certificate):
            raise InternalConsistencyError(f"oracle produced an invalid certificate on {list(branch)}")
        logger.info(f"Oracle found TK5 on branch set {list(branch)}")
        return certificate
    return None


def mohar_lemma_check(g: Graph) -> bool:
    """
    A 2-connected planar graph of minimum degree 5 contains K4-minus.

    Returns:
        Whether a K4-minus was found; always True under the preconditions.

    Raises:
        InvalidInputError: If g is not 2-connected, not planar or has a
            vertex of degree below 5.
    """
    if g.n == 0 or g.min_degree() < 5:
        raise InvalidInputError("minimum degree must be at least 5")
    view = g.to_networkx()
    if not nx.is_planar(view):
        raise InvalidInputError("graph must be planar")
    if not nx.is_biconnected(view):
        raise InvalidInputError("graph must be 2-connected")
    return find_k4_minus(g) is not None
