"""
Input Validation Module

Provides centralized validation functions for graphs, boundary lists and
generator requests. Each validator returns (is_valid, error_message).
"""

from typing import Iterable, List, Optional, Tuple

from graphs.core import Graph
from utils.constants import (
    GENERATOR_KINDS,
    HAMMOCK_BOUNDARY_SIZE,
    KIND_APEXED_MEDIAL,
    KIND_APEXED_TRIANGULATION,
    KIND_PLANE_2CONN,
    MAX_GRAPH_VERTICES,
)


def validate_graph_size(g: Graph, limit: Optional[int] = None) -> Tuple[bool, str]:
    """
    Validate that a graph is nonempty and below the configured ceiling.

    Args:
        g: Graph to validate.
        limit: Vertex ceiling; defaults to MAX_GRAPH_VERTICES.

    Returns:
        Tuple of (is_valid, error_message).
    """
    limit = MAX_GRAPH_VERTICES if limit is None else limit
    if g.n == 0:
        return False, "Graph has no vertices"
    if g.n > limit:
        return False, f"Graph has {g.n} vertices; the limit is {limit}"
    return True, ""


def parse_boundary(text: str) -> Tuple[bool, str, List[int]]:
    """
    Parse a comma-separated boundary list such as "0,3,5,7".

    Returns:
        Tuple of (is_valid, error_message, vertices).
    """
    if not text or not text.strip():
        return False, "Boundary list is required", []
    try:
        vertices = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        return False, f"Boundary must be comma-separated integers, got '{text}'", []
    return True, "", vertices


def validate_boundary(g: Graph, boundary: Iterable[int]) -> Tuple[bool, str]:
    """
    Validate a hammock boundary: exactly four distinct vertices of g.

    Returns:
        Tuple of (is_valid, error_message).
    """
    vertices = list(boundary)
    if len(set(vertices)) != len(vertices):
        return False, "Boundary vertices must be distinct"
    if len(vertices) != HAMMOCK_BOUNDARY_SIZE:
        return False, f"Boundary must list exactly {HAMMOCK_BOUNDARY_SIZE} vertices, got {len(vertices)}"
    missing = [v for v in vertices if v not in g]
    if missing:
        return False, f"Boundary vertices not in graph: {missing}"
    return True, ""


def validate_generator_request(kind: str, size: int, min_degree: int = 4) -> Tuple[bool, str]:
    """
    Validate a generator request before any work is done.

    Sizes count the vertices of the emitted graph.

    Returns:
        Tuple of (is_valid, error_message).
    """
    if kind not in GENERATOR_KINDS:
        return False, f"Unknown generator kind '{kind}'. Choose from: {', '.join(GENERATOR_KINDS)}"
    if size > MAX_GRAPH_VERTICES:
        return False, f"Size {size} exceeds the limit {MAX_GRAPH_VERTICES}"
    if min_degree not in (4, 5):
        return False, "Minimum degree of the base triangulation must be 4 or 5"

    if kind == KIND_APEXED_TRIANGULATION:
        smallest = 7 if min_degree == 4 else 13
        if size < smallest:
            return False, f"An apexed triangulation with base minimum degree {min_degree} needs at least {smallest} vertices"
        if min_degree == 5 and size == 14:
            return False, "No triangulation on 13 vertices has minimum degree 5"
    elif kind == KIND_APEXED_MEDIAL:
        if size < 13 or (size - 1) % 3 != 0:
            return False, "An apexed medial graph has 3t - 5 vertices for t >= 6 (13, 16, 19, ...)"
    elif kind == KIND_PLANE_2CONN:
        if size < 5:
            return False, "A plane hammock needs at least 5 vertices"
    return True, ""
