"""
Construction Pipeline Module

From a 5-connected nonplanar apex graph to either a K4-minus subgraph or a
verified TK5 certificate.

The wheel route: delete an apex v, cut the planar remainder along the
neighbourhood of a 4-valent vertex, shrink the fat side to a minimal fat
4-hammock H, find a short proper facial wheel in H, a rim linkage with
three hub-adjacent ends and a 5-fan from a vertex outside H + v, and
assemble the TK5 from these pieces. When the minimal hammock holds no
wheel that completes, the larger hammocks met during the descent are
tried in turn.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from errors import (
    AssemblyError,
    ConstructionFailure,
    InternalConsistencyError,
    InvalidInputError,
    NotApexError,
    NotFiveConnectedError,
    PlanarInputError,
    ResourceLimitError,
)
from graphs.connectivity import fan, vertex_connectivity
from graphs.core import Graph, Path
from graphs.subgraphs import K4Minus, find_k4_minus
from models import TraceRecord, Tk5Certificate
from planar.embedding import find_apex_vertices, is_planar, planar_embed
from planar.wheels import FacialWheel
from construction.certificates import assemble_tk5, verify_certificate
from construction.discharging import iter_wheels, short_wheel_hypotheses
from construction.hammocks import Hammock, HammockKind, descent_chain, hammocks_from_cut
from construction.linkage import CuLinkage, find_cu_linkage
from construction.oracle import has_topological_k5
from utils.constants import (
    FAN_SIZE,
    HAMMOCK_BOUNDARY_SIZE,
    INPUT_CONNECTIVITY,
    OUTCOME_K4_MINUS,
    OUTCOME_SMALL_GRAPH_TK5,
    OUTCOME_TK5,
    TARGET_ALPHA,
)
from utils.validators import validate_graph_size

logger = logging.getLogger(__name__)

# Both sides of a 4-cut are degenerate only when the planar part has six vertices.
SMALL_GRAPH_ORDER = 7


# ============================================================================
# Records
# ============================================================================

@dataclass(frozen=True)
class ValidatedInput:
    graph: Graph
    connectivity: int
    apex_vertices: Tuple[int, ...]


@dataclass(frozen=True)
class ConstructionTrace:
    """The objects chosen along the wheel route."""

    apex: Optional[int] = None
    cut_vertex: Optional[int] = None
    hammock: Optional[Hammock] = None
    wheel: Optional[FacialWheel] = None
    linkage: Optional[CuLinkage] = None
    fan: Tuple[Path, ...] = ()
    fan_centre: Optional[int] = None
    notes: Tuple[str, ...] = ()

    def to_record(self) -> TraceRecord:
        h = self.hammock
        return TraceRecord(
            apex=self.apex,
            cut_vertex=self.cut_vertex,
            hammock=sorted(h.vertices) if h else [],
            boundary=sorted(h.boundary) if h else [],
            hub=self.wheel.hub if self.wheel else None,
            rim=list(self.wheel.rim) if self.wheel else [],
            linkage=[list(p.vertices) for p in self.linkage.paths] if self.linkage else [],
            fan=[list(p.vertices) for p in self.fan],
            fan_centre=self.fan_centre,
            notes=list(self.notes),
        )


@dataclass(frozen=True)
class K4MinusFound:
    k4_minus: K4Minus
    kind: str = field(default=OUTCOME_K4_MINUS, init=False)


@dataclass(frozen=True)
class Tk5Built:
    certificate: Tk5Certificate
    trace: ConstructionTrace
    kind: str = field(default=OUTCOME_TK5, init=False)


@dataclass(frozen=True)
class SmallGraphTk5:
    certificate: Tk5Certificate
    trace: ConstructionTrace
    kind: str = field(default=OUTCOME_SMALL_GRAPH_TK5, init=False)


Outcome = Union[K4MinusFound, Tk5Built, SmallGraphTk5]


# ============================================================================
# Validation
# ============================================================================

def validate_input(g: Graph) -> ValidatedInput:
    """
    Check the construction hypotheses in order: size, 5-connectivity,
    nonplanarity, apex.

    Raises:
        ResourceLimitError: If g is empty or above the vertex ceiling.
        NotFiveConnectedError: If g is not 5-connected.
        PlanarInputError: If g is planar.
        NotApexError: If no vertex deletion leaves a planar graph.
    """
    ok, message = validate_graph_size(g)
    if not ok:
        raise ResourceLimitError(message)
    kappa = vertex_connectivity(g) if g.n > 1 else 0
    if g.n <= INPUT_CONNECTIVITY or kappa < INPUT_CONNECTIVITY:
        raise NotFiveConnectedError(f"graph is {kappa}-connected on {g.n} vertices; 5-connectivity is required")
    if is_planar(g):
        raise PlanarInputError("graph is planar")
    apexes = find_apex_vertices(g)
    if not apexes:
        raise NotApexError("no vertex deletion leaves a planar graph")
    logger.info(f"Input valid: kappa={kappa}, apex vertices {apexes}")
    return ValidatedInput(g, kappa, tuple(apexes))


# ============================================================================
# Construction
# ============================================================================

class _Route:
    """Mutable note-taking while walking the wheel route."""

    def __init__(self):
        self.notes: List[str] = []

    def note(self, text: str) -> None:
        logger.debug(text)
        self.notes.append(text)


def _fan_for(g: Graph, h: Hammock, v: int) -> Optional[Tuple[int, List[Path]]]:
    """A 5-fan from some w outside H + v to {v} + bnd H avoiding int H."""
    targets = set(h.boundary) | {v}
    outside = g.remove(h.interior)
    for w in sorted(set(g.vertices) - h.vertices - {v}):
        paths = fan(outside, w, targets, FAN_SIZE)
        if paths is not None:
            return w, paths
    return None


def _wheel_route(g: Graph, v: int, route: _Route) -> Optional[Outcome]:
    planar = g.remove({v})
    if planar.min_degree() != HAMMOCK_BOUNDARY_SIZE:
        route.note(f"apex {v}: g - v has minimum degree {planar.min_degree()}")
        return None
    embedding = planar_embed(planar)
    for u in (x for x in planar.vertices if planar.degree(x) == HAMMOCK_BOUNDARY_SIZE):
        cut = planar.neighbors(u)
        hammocks = hammocks_from_cut(planar, cut, check_connectivity=False)
        fat = [h for h in hammocks if h.kind is HammockKind.FAT]
        if not fat:
            if g.n != SMALL_GRAPH_ORDER:
                raise InternalConsistencyError(f"both sides of N({u}) are thin on {g.n} vertices")
            certificate = has_topological_k5(g)
            if certificate is None:
                raise InternalConsistencyError("small instance has no TK5")
            trace = ConstructionTrace(apex=v, cut_vertex=u, notes=tuple(route.notes))
            return SmallGraphTk5(certificate, trace)
        for side in fat:
            outcome = _hammock_route(g, v, u, side, embedding, route)
            if outcome is not None:
                return outcome
    return None


def _hammock_route(g: Graph, v: int, u: int, side: Hammock, embedding, route: _Route) -> Optional[Outcome]:
    """
    Try the fat hammocks of the descent from `side`, minimal one first.

    A minimal hammock may hold no usable wheel when the short-wheel
    hypotheses fail; the larger hammocks of the descent are tried next.
    """
    chain = descent_chain(side)
    failed = short_wheel_hypotheses(embedding, chain[-1])
    if failed:
        # a bad P3 or triangle plus v spans a K4-minus; keep scanning
        route.note(f"cut N({u}): unmet wheel hypotheses: {', '.join(failed)}")
    for h in reversed(chain):
        found_wheel = False
        for wheel in iter_wheels(embedding, h, short_proper_only=True):
            found_wheel = True
            outcome = _wheel_outcome(g, v, u, h, wheel, route)
            if outcome is not None:
                return outcome
        if not found_wheel:
            route.note(f"cut N({u}): no short proper wheel in {h}")
    return None


def _wheel_outcome(g: Graph, v: int, u: int, h: Hammock, wheel: FacialWheel,
                   route: _Route) -> Optional[Tk5Built]:
    hub = wheel.hub
    linkage = find_cu_linkage(h, wheel, min_alpha=TARGET_ALPHA)
    if linkage is None:
        route.note(f"hub {hub}: no rim linkage with alpha {TARGET_ALPHA}")
        return None
    if not g.has_edge(hub, v):
        raise InternalConsistencyError(f"hub {hub} is 4-valent in g - v but not adjacent to {v}")
    found = _fan_for(g, h, v)
    if found is None:
        route.note(f"hub {hub}: no vertex outside H + {v} has a {FAN_SIZE}-fan")
        return None
    w, fan_paths = found
    try:
        certificate = assemble_tk5(g, wheel, linkage, fan_paths, (hub, v), v, w)
    except AssemblyError as err:
        logger.warning(f"Assembly failed for hub {hub}: {err}")
        route.note(f"hub {hub}: {err}")
        return None
    trace = ConstructionTrace(apex=v, cut_vertex=u, hammock=h, wheel=wheel, linkage=linkage,
                              fan=tuple(fan_paths), fan_centre=w, notes=tuple(route.notes))
    return Tk5Built(certificate, trace)


def construct(g: Graph, force_wheel_route: bool = False, apex: Optional[int] = None) -> Outcome:
    """
    Produce a K4-minus or a verified TK5 for a valid input graph.

    Args:
        g: 5-connected nonplanar apex graph.
        force_wheel_route: Skip the K4-minus shortcut and build the TK5
            through a short wheel; falls back to the K4-minus when every
            route is exhausted.
        apex: Restrict the route to this apex vertex.

    Raises:
        HypothesisError: If g is not a valid input.
        InvalidInputError: If `apex` is not an apex vertex of g.
        ConstructionFailure: If no route and no K4-minus exists.
    """
    valid = validate_input(g)
    k4 = find_k4_minus(g)
    if k4 is not None and not force_wheel_route:
        logger.info(f"K4-minus found: {k4}")
        return K4MinusFound(k4)

    if apex is not None and apex not in valid.apex_vertices:
        raise InvalidInputError(f"{apex} is not an apex vertex; apex vertices are {list(valid.apex_vertices)}")
    apexes = [apex] if apex is not None else list(valid.apex_vertices)

    route = _Route()
    for v in apexes:
        outcome = _wheel_route(g, v, route)
        if outcome is None:
            continue
        if not verify_certificate(g, outcome.certificate):
            raise InternalConsistencyError("construction returned an unverified certificate")
        logger.info(f"{outcome.kind}: branch set {outcome.certificate.branch}")
        return outcome

    if k4 is not None:
        logger.warning(f"Wheel route exhausted; reporting K4-minus {k4}")
        return K4MinusFound(k4)
    raise ConstructionFailure("every wheel route was exhausted and no K4-minus exists",
                              trace=ConstructionTrace(notes=tuple(route.notes)))
