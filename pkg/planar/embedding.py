"""
Plane Embedding Module

Combinatorial embeddings (rotation systems), face tracing, restriction of an
embedding to a vertex subset and apex-vertex detection.

Rotations are clockwise neighbour orders as produced by networkx. The face
containing the directed edge (v, w) occupies the angle at v between w and
its clockwise successor.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from errors import InvalidInputError, PreconditionError
from graphs.core import Graph

logger = logging.getLogger(__name__)

HalfEdge = Tuple[int, int]


@dataclass(frozen=True)
class Face:
    """A face given by its cyclic boundary walk."""

    boundary: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.boundary)

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self.boundary)

    def half_edges(self) -> List[HalfEdge]:
        b = self.boundary
        if len(b) < 2:
            return []
        return [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]

    def walk_from(self, u: int, x: int) -> Tuple[int, ...]:
        """The boundary rotated to start with the directed edge u -> x."""
        b = self.boundary
        for i in range(len(b)):
            if b[i] == u and b[(i + 1) % len(b)] == x:
                return b[i:] + b[:i]
        raise InvalidInputError(f"edge {u}->{x} is not on face {list(b)}")


@dataclass(frozen=True, eq=False)
class PlaneEmbedding:
    """
    A plane embedding of a connected graph.

    Attributes:
        graph: The embedded graph.
        rotation: Clockwise neighbour order per vertex.
        faces: Faces traced from the rotation system.
        outer: Index of the designated outer face, if any.
    """

    graph: Graph
    rotation: Dict[int, Tuple[int, ...]]
    faces: Tuple[Face, ...]
    outer: Optional[int] = None
    _face_index: Dict[HalfEdge, int] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        index = {}
        for i, face in enumerate(self.faces):
            for half in face.half_edges():
                index[half] = i
        object.__setattr__(self, "_face_index", index)

    # ------------------------------------------------------------------
    # Faces
    # ------------------------------------------------------------------

    def face_index(self, u: int, w: int) -> int:
        try:
            return self._face_index[(u, w)]
        except KeyError:
            raise InvalidInputError(f"{u}->{w} is not a directed edge of the embedding") from None

    def face_of(self, u: int, w: int) -> Face:
        return self.faces[self.face_index(u, w)]

    def faces_around(self, v: int) -> List[int]:
        """Face indices of the angles at v, in clockwise order."""
        return [self.face_index(v, w) for w in self.rotation[v]]

    def face_pattern(self, v: int) -> Tuple[int, ...]:
        return tuple(self.faces[i].length for i in self.faces_around(v))

    @property
    def outer_face(self) -> Optional[Face]:
        return None if self.outer is None else self.faces[self.outer]

    def with_outer(self, index: int) -> "PlaneEmbedding":
        if not 0 <= index < len(self.faces):
            raise InvalidInputError(f"face index {index} out of range")
        return PlaneEmbedding(self.graph, self.rotation, self.faces, index)

    def with_outer_avoiding(self, vertices: Iterable[int]) -> "PlaneEmbedding":
        """Re-designate the outer face as the first face avoiding `vertices`."""
        avoid = set(vertices)
        for i, face in enumerate(self.faces):
            if not face.vertices & avoid:
                return self.with_outer(i)
        raise PreconditionError(f"every face meets {sorted(avoid)}", hypothesis="outer-face-choice")

    # ------------------------------------------------------------------
    # Checks and output
    # ------------------------------------------------------------------

    def validate(self) -> bool:
        """Euler's formula, total face length 2E and one face per directed edge."""
        g = self.graph
        if g.n - g.m + len(self.faces) != 2:
            return False
        if sum(f.length for f in self.faces) != 2 * g.m:
            return False
        return len(self._face_index) == 2 * g.m

    def dump(self) -> str:
        lines = []
        for i, face in enumerate(self.faces):
            tag = " (outer)" if i == self.outer else ""
            lines.append(f"face {i}{tag}: " + " ".join(str(v) for v in face.boundary))
        return "\n".join(lines)


def _build(graph: Graph, rotation: Dict[int, Tuple[int, ...]],
           outer: Optional[int]) -> PlaneEmbedding:
    if graph.m == 0:
        return PlaneEmbedding(graph, {v: () for v in graph.vertices}, (Face(()),), 0)
    emb = nx.PlanarEmbedding()
    emb.set_data({v: list(nbrs) for v, nbrs in rotation.items()})
    marked = set()
    faces = []
    for v in graph.vertices:
        for w in sorted(rotation[v]):
            if (v, w) not in marked:
                faces.append(Face(tuple(emb.traverse_face(v, w, mark_half_edges=marked))))
    return PlaneEmbedding(graph, dict(rotation), tuple(faces), outer)


def is_planar(g: Graph) -> bool:
    return nx.is_planar(g.to_networkx())


def planar_embed(g: Graph) -> Optional[PlaneEmbedding]:
    """
    Embed a connected graph in the plane.

    Returns:
        PlaneEmbedding with face 0 as the provisional outer face, or None if
        g is not planar.

    Raises:
        InvalidInputError: If g is empty or disconnected.
    """
    if g.n == 0 or not nx.is_connected(g.to_networkx()):
        raise InvalidInputError("planar embedding requires a nonempty connected graph")
    planar, emb = nx.check_planarity(g.to_networkx())
    if not planar:
        return None
    rotation = {v: tuple(emb.neighbors_cw_order(v)) for v in g.vertices}
    embedding = _build(g, rotation, 0)
    logger.debug(f"Embedded {g}: {len(embedding.faces)} faces")
    return embedding


def faces_of_subgraph(e: PlaneEmbedding, h: Iterable[int]) -> PlaneEmbedding:
    """
    Restrict an embedding to the subgraph induced on h.

    The restricted rotation keeps the inherited cyclic orders. Each deleted
    neighbour of a kept vertex votes for the restricted face occupying its
    angle; the face with most votes (lowest index on ties) becomes outer.

    Raises:
        InvalidInputError: If h has unknown vertices or induces a
            disconnected graph.
    """
    keep = set(h)
    unknown = keep - set(e.graph.vertices)
    if unknown:
        raise InvalidInputError(f"vertices not in embedding: {sorted(unknown)}")
    sub = e.graph.subgraph(keep)
    if sub.n == 0 or not nx.is_connected(sub.to_networkx()):
        raise InvalidInputError("restriction must induce a nonempty connected graph")
    rotation = {v: tuple(w for w in e.rotation[v] if w in keep) for v in sub.vertices}
    if len(keep) == e.graph.n:
        return _build(sub, rotation, e.outer)

    restricted = _build(sub, rotation, None)
    if sub.m == 0:
        return restricted
    votes: Counter = Counter()
    for b in sub.vertices:
        rot = e.rotation[b]
        for idx, d in enumerate(rot):
            if d in keep:
                continue
            x = next((rot[(idx - j) % len(rot)] for j in range(1, len(rot))
                      if rot[(idx - j) % len(rot)] in keep), None)
            if x is not None:
                votes[restricted.face_index(b, x)] += 1
    if not votes:
        return restricted.with_outer(0)
    best = max(votes.values())
    outer = min(i for i, c in votes.items() if c == best)
    return restricted.with_outer(outer)


def find_apex_vertices(g: Graph) -> List[int]:
    """All vertices whose deletion leaves a planar graph, in increasing order."""
    return [v for v in g.vertices if nx.is_planar(g.remove({v}).to_networkx())]
