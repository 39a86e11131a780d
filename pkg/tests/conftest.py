import os
import sys

import pytest

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import graph_fixtures as gf  # noqa: E402
from planar.embedding import planar_embed  # noqa: E402


@pytest.fixture
def octahedron():
    return gf.octahedron()


@pytest.fixture
def cube():
    return gf.cube()


@pytest.fixture
def nested():
    return gf.nested_triangulation()


@pytest.fixture
def nested_embedding(nested):
    return planar_embed(nested)


@pytest.fixture
def cuboctahedron():
    return gf.cuboctahedron()


@pytest.fixture
def apexed_octahedron():
    g, v = gf.apexed(gf.octahedron())
    return g, v


@pytest.fixture
def apexed_nested():
    g, v = gf.apexed(gf.nested_triangulation())
    return g, v


@pytest.fixture
def apexed_cuboctahedron():
    g, v = gf.apexed(gf.cuboctahedron())
    return g, v


@pytest.fixture
def db_path(tmp_path):
    return str(tmp_path / "runs.db")
