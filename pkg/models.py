"""
Data Models Module

Pydantic models for certificates, construction traces, check reports and
run-log rows exchanged between the library, the CLI and the database.
"""

from pydantic import BaseModel, Field
from typing import Dict, Iterable, List, Optional, Tuple

from errors import InvalidInputError
from graphs.core import Path


class CertificatePath(BaseModel):
    """One subdivided edge of a TK5: its branch pair and its vertex sequence."""
    pair: List[int] = Field(..., min_length=2, max_length=2)
    vertices: List[int] = Field(..., min_length=1)


class Tk5Certificate(BaseModel):
    """
    Five branch vertices and ten connecting paths.

    The schema only fixes shapes; the graph-dependent invariants are checked
    by construction.certificates.verify_certificate.
    """
    branch: List[int] = Field(..., min_length=5, max_length=5)
    paths: List[CertificatePath] = Field(..., min_length=1)

    @classmethod
    def from_paths(cls, branch: Iterable[int], paths: Dict[Tuple[int, int], Path]) -> "Tk5Certificate":
        """
        Build a certificate with pairs sorted and each path oriented from
        the smaller branch vertex.
        """
        entries = []
        for (a, b), path in paths.items():
            lo, hi = min(a, b), max(a, b)
            seq = list(path.vertices)
            if seq and seq[0] != lo:
                seq.reverse()
            entries.append(CertificatePath(pair=[lo, hi], vertices=seq))
        entries.sort(key=lambda p: tuple(p.pair))
        return cls(branch=sorted(branch), paths=entries)

    def path_for(self, a: int, b: int) -> CertificatePath:
        wanted = sorted((a, b))
        for p in self.paths:
            if sorted(p.pair) == wanted:
                return p
        raise InvalidInputError(f"certificate has no path for pair {a}-{b}")

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)


class TraceRecord(BaseModel):
    """Serialized construction trace."""
    apex: Optional[int] = None
    cut_vertex: Optional[int] = None
    hammock: List[int] = Field(default_factory=list)
    boundary: List[int] = Field(default_factory=list)
    hub: Optional[int] = None
    rim: List[int] = Field(default_factory=list)
    linkage: List[List[int]] = Field(default_factory=list)
    fan: List[List[int]] = Field(default_factory=list)
    fan_centre: Optional[int] = None
    notes: List[str] = Field(default_factory=list)


class CheckReport(BaseModel):
    """Result of checking one input graph."""
    name: str
    graph6: str = ""
    vertices: int = Field(..., ge=0)
    edges: int = Field(..., ge=0)
    connectivity: Optional[int] = None
    planar: Optional[bool] = None
    apex_vertices: List[int] = Field(default_factory=list)
    k4_minus: Optional[List[int]] = None
    outcome: str
    message: str = ""
    exit_code: int = 0
    certificate: Optional[Tk5Certificate] = None
    trace: Optional[TraceRecord] = None


class RunRecord(BaseModel):
    """A row of the run log."""
    id: int
    name: str
    graph6: str
    vertices: int
    edges: int
    outcome: str
    exit_code: int
    message: str = ""
    certificate: Optional[str] = None
    created_at: Optional[str] = None
