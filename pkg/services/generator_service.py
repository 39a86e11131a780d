"""
Generator Service Module

Seeded random instances for tests and batch runs: 4-connected planar
triangulations grown by edge splits (or, for minimum degree 5, by vertex
splits of a capped antiprism) and shuffled by guarded diagonal flips,
their medial graphs, apexed versions of both and plane hammocks.
Every instance is checked against its advertised properties before it is
returned.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from errors import InfeasibleInstanceError, InvalidInputError
from graphs.connectivity import is_k_connected, vertex_connectivity
from graphs.core import Graph
from graphs.subgraphs import find_k4_minus
from utils.constants import (
    GENERATOR_MAX_ATTEMPTS,
    HOST_CONNECTIVITY,
    INPUT_CONNECTIVITY,
    KIND_APEXED_MEDIAL,
    KIND_APEXED_QUADRANGULATION,
    KIND_APEXED_TRIANGULATION,
    KIND_PLANE_2CONN,
)
from utils.validators import validate_generator_request

logger = logging.getLogger(__name__)

ICOSAHEDRON_ORDER = 12


# ============================================================================
# Triangulations
# ============================================================================

class Triangulation:
    """
    A plane triangulation stored as a rotation system.

    For every face x, y, a the rotations satisfy next_x(y) = a,
    next_y(a) = x and next_a(x) = y.
    """

    def __init__(self, rotation: Dict[int, List[int]]):
        self.rotation = {v: list(nbrs) for v, nbrs in rotation.items()}

    @classmethod
    def octahedron(cls) -> "Triangulation":
        rotation = {0: [1, 2, 3, 4], 5: [4, 3, 2, 1]}
        for i in range(1, 5):
            prev, nxt = (i - 2) % 4 + 1, i % 4 + 1
            rotation[i] = [0, prev, 5, nxt]
        return cls(rotation)

    @classmethod
    def capped_antiprism(cls, r: int) -> "Triangulation":
        """
        Two r-cycles joined as an antiprism, each capped by a hub.

        Labels: 0 is the inner cap, 1..r the inner ring, r+1..2r the outer
        ring and 2r+1 the outer cap. Ring vertices have degree 5 and caps
        degree r, so r = 5 gives the icosahedron.
        """
        inner, outer, cap = 0, 2 * r + 1, list(range(1, r + 1))
        ring = list(range(r + 1, 2 * r + 1))
        rotation = {inner: list(cap), outer: list(reversed(ring))}
        for k in range(r):
            a, b = cap[k], ring[k]
            rotation[a] = [inner, cap[k - 1], ring[k - 1], b, cap[(k + 1) % r]]
            rotation[b] = [outer, ring[(k + 1) % r], cap[(k + 1) % r], a, ring[k - 1]]
        return cls(rotation)

    @property
    def n(self) -> int:
        return len(self.rotation)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def edges(self) -> List[Tuple[int, int]]:
        return sorted((u, w) for u, nbrs in self.rotation.items() for w in nbrs if u < w)

    def next_around(self, x: int, y: int) -> int:
        rot = self.rotation[x]
        return rot[(rot.index(y) + 1) % len(rot)]

    def prev_around(self, x: int, y: int) -> int:
        rot = self.rotation[x]
        return rot[(rot.index(y) - 1) % len(rot)]

    def thirds(self, x: int, y: int) -> Tuple[int, int]:
        """The apexes of the two faces on edge xy."""
        return self.next_around(x, y), self.prev_around(x, y)

    def _insert_after(self, c: int, p: int, new: int) -> None:
        rot = self.rotation[c]
        rot.insert(rot.index(p) + 1, new)

    # ------------------------------------------------------------------
    # Local moves
    # ------------------------------------------------------------------

    def can_split(self, x: int, y: int) -> bool:
        a, b = self.thirds(x, y)
        return b not in self.rotation[a]

    def split_edge(self, x: int, y: int) -> int:
        """Subdivide xy by a new vertex joined to both face apexes."""
        a, b = self.thirds(x, y)
        z = max(self.rotation) + 1
        rx, ry = self.rotation[x], self.rotation[y]
        rx[rx.index(y)] = z
        ry[ry.index(x)] = z
        self._insert_after(a, x, z)
        self._insert_after(b, y, z)
        self.rotation[z] = [x, b, y, a]
        return z

    def can_flip(self, x: int, y: int, floor: int) -> bool:
        """Flipping keeps degrees at least `floor` and creates no separating triangle."""
        if self.degree(x) <= floor or self.degree(y) <= floor:
            return False
        a, b = self.thirds(x, y)
        if b in self.rotation[a]:
            return False
        common = set(self.rotation[a]) & set(self.rotation[b])
        return common <= {x, y}

    def flip(self, x: int, y: int) -> Tuple[int, int]:
        """Replace the diagonal xy by the opposite diagonal."""
        a, b = self.thirds(x, y)
        self.rotation[x].remove(y)
        self.rotation[y].remove(x)
        self._insert_after(a, x, b)
        self._insert_after(b, y, a)
        return a, b

    def split_vertex(self, x: int, i: int, s: int) -> int:
        """
        Split x along the neighbours c_i and c_(i+s) of its rotation.

        x keeps c_i..c_(i+s) and a new vertex z takes c_(i+s)..c_i; x and z
        become adjacent, and c_i and c_(i+s) gain one edge each. The new
        degrees are s + 2 and d - s + 2.
        """
        rot = self.rotation[x]
        d = len(rot)
        if not 1 <= s <= d - 1:
            raise InvalidInputError(f"split width {s} out of range for degree {d}")
        arc = [rot[(i + k) % d] for k in range(s + 1)]
        rest = [rot[(i + s + k) % d] for k in range(d - s + 1)]
        first, last = arc[0], arc[-1]
        z = max(self.rotation) + 1
        for c in rest[1:-1]:
            nbrs = self.rotation[c]
            nbrs[nbrs.index(x)] = z
        self._insert_after(first, x, z)
        nbrs = self.rotation[last]
        nbrs.insert(nbrs.index(x), z)
        self.rotation[x] = arc + [z]
        self.rotation[z] = rest + [x]
        return z

    # ------------------------------------------------------------------
    # Derived graphs
    # ------------------------------------------------------------------

    def graph(self) -> Graph:
        return Graph({v: nbrs for v, nbrs in self.rotation.items()})

    def medial(self) -> Graph:
        """One vertex per edge; edges consecutive around a vertex are adjacent."""
        index = {e: i for i, e in enumerate(self.edges())}

        def key(u: int, w: int) -> int:
            return index[(min(u, w), max(u, w))]

        links = set()
        for x, rot in self.rotation.items():
            for i, y in enumerate(rot):
                nxt = rot[(i + 1) % len(rot)]
                a, b = key(x, y), key(x, nxt)
                links.add((min(a, b), max(a, b)))
        return Graph.from_edges(range(len(index)), links)


def grow_triangulation(n: int, rng: random.Random) -> Triangulation:
    """Grow the octahedron to n vertices by random splits, then shuffle by flips."""
    t = Triangulation.octahedron()
    while t.n < n:
        t.split_edge(*rng.choice([e for e in t.edges() if t.can_split(*e)]))
    for _ in range(2 * n):
        x, y = rng.choice(t.edges())
        if t.can_flip(x, y, 4):
            t.flip(x, y)
    return t


def random_triangulation(n: int, rng: random.Random, min_degree: int = 4) -> Graph:
    """
    A random 4-connected triangulation on n vertices with the requested
    minimum degree.

    Minimum degree 5 starts from a capped antiprism (the icosahedron for
    12 vertices) and grows by splitting vertices of degree at least 6, so
    every degree stays at least 5; flips that keep it so shuffle the result.

    Raises:
        InfeasibleInstanceError: If min_degree is 5 and n is below 12 or
            equal to 13.
    """
    if min_degree != 5:
        return grow_triangulation(n, rng).graph()
    if n < ICOSAHEDRON_ORDER or n == ICOSAHEDRON_ORDER + 1:
        raise InfeasibleInstanceError(f"no triangulation on {n} vertices has minimum degree 5")
    t = Triangulation.capped_antiprism(5 if n == ICOSAHEDRON_ORDER else 6)
    while t.n < n:
        x = rng.choice([v for v in sorted(t.rotation) if t.degree(v) >= 6])
        d = t.degree(x)
        t.split_vertex(x, rng.randrange(d), rng.randint(3, d - 3))
    for _ in range(2 * n):
        x, y = rng.choice(t.edges())
        if t.can_flip(x, y, 5):
            t.flip(x, y)
    return t.graph()


def apex(g: Graph) -> Tuple[Graph, int]:
    """Add a vertex adjacent to every vertex of g."""
    v = max(g.vertices) + 1
    edges = list(g.edges()) + [(x, v) for x in g.vertices]
    return Graph.from_edges(list(g.vertices) + [v], edges), v


# ============================================================================
# Service
# ============================================================================

@dataclass(frozen=True)
class GeneratedInstance:
    graph: Graph
    kind: str
    seed: int
    apex: Optional[int] = None
    boundary: FrozenSet[int] = field(default_factory=frozenset)
    attempts: int = 1


class GeneratorService:
    """
    Service class for seeded instance generation.

    Each request uses its own random stream, so the same seed always
    yields the same instance.
    """

    @staticmethod
    def generate(kind: str, size: int, seed: int, min_degree: int = 4) -> GeneratedInstance:
        """
        Generate an instance and check its advertised properties.

        Args:
            kind: One of the generator kinds.
            size: Vertex count of the emitted graph.
            seed: Seed of the random stream.
            min_degree: Minimum degree of a triangulation base (4 or 5).

        Returns:
            GeneratedInstance.

        Raises:
            InvalidInputError: If the request is malformed.
            InfeasibleInstanceError: If no such instance exists or none was
                found within the attempt budget.
        """
        if kind == KIND_APEXED_QUADRANGULATION:
            raise InfeasibleInstanceError(
                "a triangle-free plane graph has a vertex of degree at most 3, "
                "so an apexed quadrangulation is at most 4-connected")
        valid, error = validate_generator_request(kind, size, min_degree)
        if not valid:
            raise InvalidInputError(error)

        rng = random.Random(seed)
        builders = {
            KIND_APEXED_TRIANGULATION: GeneratorService._apexed_triangulation,
            KIND_APEXED_MEDIAL: GeneratorService._apexed_medial,
            KIND_PLANE_2CONN: GeneratorService._plane_hammock,
        }
        for attempt in range(1, GENERATOR_MAX_ATTEMPTS + 1):
            try:
                instance = builders[kind](size, seed, rng, min_degree)
            except InfeasibleInstanceError as e:
                logger.debug(f"Attempt {attempt} for {kind} n={size}: {e}")
                continue
            if instance is not None:
                logger.info(f"Generated {kind} with {instance.graph.n} vertices (seed {seed}, attempt {attempt})")
                return GeneratedInstance(instance.graph, kind, seed, instance.apex,
                                         instance.boundary, attempt)
            logger.debug(f"Attempt {attempt} for {kind} n={size} failed its postconditions")
        raise InfeasibleInstanceError(f"no {kind} instance on {size} vertices after {GENERATOR_MAX_ATTEMPTS} attempts")

    @staticmethod
    def _apexed_triangulation(size: int, seed: int, rng: random.Random,
                              min_degree: int) -> Optional[GeneratedInstance]:
        base = random_triangulation(size - 1, rng, min_degree)
        if base.min_degree() < min_degree or not is_k_connected(base, HOST_CONNECTIVITY):
            return None
        g, v = apex(base)
        if not GeneratorService._is_apexed_instance(g):
            return None
        return GeneratedInstance(g, KIND_APEXED_TRIANGULATION, seed, v)

    @staticmethod
    def _apexed_medial(size: int, seed: int, rng: random.Random,
                       min_degree: int) -> Optional[GeneratedInstance]:
        base = grow_triangulation((size + 5) // 3, rng).medial()
        if not is_k_connected(base, HOST_CONNECTIVITY) or find_k4_minus(base) is not None:
            return None
        g, v = apex(base)
        if not GeneratorService._is_apexed_instance(g):
            return None
        return GeneratedInstance(g, KIND_APEXED_MEDIAL, seed, v)

    @staticmethod
    def _plane_hammock(size: int, seed: int, rng: random.Random,
                       min_degree: int) -> Optional[GeneratedInstance]:
        base = random_triangulation(size + 1, rng, 4)
        four = [v for v in base.vertices if base.degree(v) == 4]
        if not four:
            return None
        hole = rng.choice(four)
        g, mapping = base.remove({hole}).relabeled()
        if not nx.is_biconnected(g.to_networkx()) or not nx.is_planar(g.to_networkx()):
            return None
        boundary = frozenset(mapping[w] for w in base.neighbors(hole))
        logger.info(f"Plane hammock boundary: {sorted(boundary)}")
        return GeneratedInstance(g, KIND_PLANE_2CONN, seed, None, boundary)

    @staticmethod
    def _is_apexed_instance(g: Graph) -> bool:
        if nx.is_planar(g.to_networkx()):
            return False
        return vertex_connectivity(g) >= INPUT_CONNECTIVITY
