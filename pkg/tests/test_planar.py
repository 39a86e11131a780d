import pytest

import graph_fixtures as gf
from errors import InvalidInputError, InvalidQueryError, PreconditionError
from construction.hammocks import Hammock
from planar.embedding import faces_of_subgraph, find_apex_vertices, planar_embed
from planar.wheels import facial_wheel, is_imbalanced, is_proper, is_short


# ============================================================================
# Embeddings
# ============================================================================

def test_nonplanar_graph_has_no_embedding():
    assert planar_embed(gf.k5()) is None
    assert planar_embed(gf.k33()) is None


def test_cube_faces(cube):
    e = planar_embed(cube)
    assert e.validate()
    assert len(e.faces) == 6
    assert all(face.length == 4 for face in e.faces)


def test_triangulation_faces(nested_embedding):
    assert nested_embedding.validate()
    assert len(nested_embedding.faces) == 24
    assert all(face.length == 3 for face in nested_embedding.faces)


def test_embedding_needs_connected_graph():
    with pytest.raises(InvalidInputError):
        planar_embed(gf.with_edges(range(4), [(0, 1), (2, 3)]))


def test_face_pattern_cuboctahedron(cuboctahedron):
    e = planar_embed(cuboctahedron)
    for v in cuboctahedron.vertices:
        pattern = e.face_pattern(v)
        assert sorted(pattern) == [3, 3, 4, 4]
        assert pattern[0] != pattern[1]


def test_restriction_votes_for_the_hole(octahedron):
    e = planar_embed(octahedron)
    restricted = faces_of_subgraph(e, [1, 2, 3, 4, 5])
    assert restricted.validate()
    assert restricted.outer_face.vertices == frozenset({1, 2, 3, 4})
    assert restricted.outer_face.length == 4


def test_restriction_to_everything_keeps_outer(octahedron):
    e = planar_embed(octahedron).with_outer(3)
    assert faces_of_subgraph(e, octahedron.vertices).outer == 3


def test_restriction_of_icosahedron_keeps_a_pentagon():
    g = gf.icosahedron()
    e = planar_embed(g)
    rest = set(g.vertices) - {0} - set(g.neighbors(0))
    centre = next(x for x in rest if set(g.neighbors(x)) <= rest)
    restricted = faces_of_subgraph(e, rest)
    assert restricted.validate()
    assert restricted.outer_face.length == 5
    assert restricted.outer_face.vertices == frozenset(rest - {centre})


def test_restriction_of_cube_to_a_face(cube):
    e = planar_embed(cube)
    square = next(f for f in e.faces if f.vertices == frozenset({0, 1, 2, 3}))
    restricted = faces_of_subgraph(e, [0, 1, 2, 3])
    assert len(restricted.faces) == 2
    assert restricted.outer_face.length == 4
    inner = next(f for i, f in enumerate(restricted.faces) if i != restricted.outer)
    assert set(inner.half_edges()) == set(square.half_edges())


def test_restriction_rejects_disconnected_set(octahedron):
    with pytest.raises(InvalidInputError):
        faces_of_subgraph(planar_embed(octahedron), [0, 5])


def test_with_outer_avoiding(octahedron):
    e = planar_embed(octahedron).with_outer_avoiding({0})
    assert 0 not in e.outer_face.vertices
    with pytest.raises(PreconditionError):
        planar_embed(gf.k4()).with_outer_avoiding({0, 1})


def test_apex_vertices():
    assert find_apex_vertices(gf.k6()) == []
    assert find_apex_vertices(gf.k5()) == [0, 1, 2, 3, 4]
    g, v = gf.apexed(gf.octahedron())
    assert find_apex_vertices(g) == [v]


# ============================================================================
# Facial wheels
# ============================================================================

def _wheel(g, u):
    return facial_wheel(planar_embed(g).with_outer_avoiding({u}), u)


def test_octahedron_wheel_is_short_and_balanced(octahedron):
    w = _wheel(octahedron, 0)
    assert set(w.rim) == {1, 2, 3, 4}
    assert w.face_lengths == (3, 3, 3, 3)
    assert is_short(w)
    assert not is_imbalanced(w)


def test_properness_needs_imbalance(octahedron):
    w = _wheel(octahedron, 0)
    h = Hammock(octahedron, frozenset(octahedron.vertices), explicit_boundary=frozenset({1, 2, 3, 5}))
    with pytest.raises(InvalidQueryError):
        is_proper(w, h)


def test_cuboctahedron_wheel(cuboctahedron):
    w = _wheel(cuboctahedron, 0)
    assert len(w.rim) == 6
    assert sorted(w.face_lengths) == [3, 3, 4, 4]
    assert is_short(w)
    assert not is_imbalanced(w)


def test_hub_on_outer_face_raises(octahedron):
    e = planar_embed(octahedron)
    u = e.outer_face.boundary[0]
    with pytest.raises(PreconditionError):
        facial_wheel(e, u)


def test_rim_arcs(cuboctahedron):
    w = _wheel(cuboctahedron, 0)
    a, b = w.rim[1], w.rim[4]
    assert w.rim_arc(a, b) == w.rim[1:5]
    assert w.rim_interior(a, b) == w.rim[2:4]
    assert w.rim_arc(b, a) == w.rim[4:] + w.rim[:2]
    with pytest.raises(InvalidQueryError):
        w.rim_position(0)


def test_imbalanced_wheel_properness():
    bipyramid = gf.pentagonal_bipyramid()
    g = gf.medial(bipyramid)
    hub = bipyramid.edges().index((0, 5))
    w = _wheel(g, hub)
    assert sorted(w.face_lengths) == [3, 3, 4, 5]
    assert is_short(w) and is_imbalanced(w)

    large = w.short_data.large_segment
    assert len(large) == 4
    everything = frozenset(g.vertices)
    outside = [x for x in g.vertices if x not in w.vertices][:4]
    clean = Hammock(g, everything, explicit_boundary=frozenset(outside))
    assert is_proper(w, clean)

    touching = frozenset([large[1]] + outside[:3])
    assert not is_proper(w, Hammock(g, everything, explicit_boundary=touching))


def test_wheel_outside_hammock_is_rejected(octahedron):
    w = _wheel(octahedron, 0)
    h = Hammock(octahedron, frozenset({1, 2, 3, 4, 5}))
    with pytest.raises(InvalidQueryError):
        is_short(w, h)
