"""
Check Service Module

Business logic behind the command-line surface: checking input graphs
against the construction hypotheses, running the construction, verifying
certificates and producing discharging reports.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import networkx as nx
from pydantic import ValidationError

from errors import (
    GraphFormatError,
    HypothesisError,
    InternalConsistencyError,
    InvalidInputError,
    ResourceLimitError,
)
from graphs.connectivity import vertex_connectivity
from graphs.core import Graph
from graphs.subgraphs import find_k4_minus
from models import CheckReport, Tk5Certificate
from planar.embedding import PlaneEmbedding, find_apex_vertices, is_planar, planar_embed
from construction.certificates import certificate_problems
from construction.discharging import (
    ChargeLedger,
    NonpositivityReport,
    OuterFaceAccount,
    apply_discharging,
    initial_charges,
    outer_face_account,
    verify_nonpositive,
)
from construction.hammocks import Hammock
from construction.pipeline import K4MinusFound, construct, validate_input
from utils.constants import (
    EXIT_HYPOTHESIS_FAILURE,
    EXIT_INTERNAL_ERROR,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_VERIFICATION_FAILURE,
    OUTCOME_CHECKED,
    OUTCOME_ERROR,
    OUTCOME_INVALID,
)
from utils.graph_io import read_graph, to_graph6
from utils.validators import validate_boundary, validate_graph_size

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DischargeReport:
    ledger: ChargeLedger
    embedding: PlaneEmbedding
    nonpositivity: NonpositivityReport
    outer_account: OuterFaceAccount


class CheckService:
    """
    Service class for graph checks.

    Every method returns a report or a (success, message, payload) tuple;
    exit codes are decided here so the CLI only prints.
    """

    @staticmethod
    def check_graph(g: Graph, name: str, run_construction: bool = False,
                    force_wheel_route: bool = False, apex: Optional[int] = None) -> CheckReport:
        """
        Check one graph and optionally run the construction.

        Args:
            g: Input graph.
            name: Label used in reports and the run log.
            run_construction: Run construct() after the hypothesis checks.
            force_wheel_route: Passed on to construct().
            apex: Apex vertex to use, if given.

        Returns:
            CheckReport with outcome, message and exit code.
        """
        report = CheckReport(name=name, graph6=to_graph6(g) if g.n else "", vertices=g.n,
                             edges=g.m, outcome=OUTCOME_CHECKED)
        try:
            ok, error = validate_graph_size(g)
            if not ok:
                raise ResourceLimitError(error)
            if g.n > 1:
                report.connectivity = vertex_connectivity(g)
            if g.n > 0 and nx.is_connected(g.to_networkx()):
                report.planar = is_planar(g)
                report.apex_vertices = find_apex_vertices(g) if not report.planar else []
            k4 = find_k4_minus(g)
            report.k4_minus = sorted(k4.vertices) if k4 is not None else None

            if not run_construction:
                validate_input(g)
                report.message = "hypotheses hold: 5-connected, nonplanar, apex"
                return report

            outcome = construct(g, force_wheel_route=force_wheel_route, apex=apex)
            report.outcome = outcome.kind
            if isinstance(outcome, K4MinusFound):
                report.message = f"K4- found: {outcome.k4_minus}"
            else:
                report.certificate = outcome.certificate
                report.trace = outcome.trace.to_record()
                report.message = f"TK5 found: branch {outcome.certificate.branch}"
            return report
        except (HypothesisError, ResourceLimitError) as e:
            hypothesis = getattr(e, "hypothesis", "size")
            report.outcome = OUTCOME_INVALID
            report.message = f"not {hypothesis}: {e}" if hypothesis != "size" else str(e)
            report.exit_code = EXIT_HYPOTHESIS_FAILURE
        except InvalidInputError as e:
            report.outcome = OUTCOME_INVALID
            report.message = str(e)
            report.exit_code = EXIT_HYPOTHESIS_FAILURE
        except InternalConsistencyError as e:
            logger.error(f"Internal error on {name}: {e}")
            report.outcome = OUTCOME_ERROR
            report.message = str(e)
            report.exit_code = EXIT_INTERNAL_ERROR
        return report

    @staticmethod
    def check_file(path: str, fmt: Optional[str] = None, run_construction: bool = False,
                   force_wheel_route: bool = False, apex: Optional[int] = None) -> CheckReport:
        """Read and check one graph file; parse failures become exit-1 reports."""
        try:
            g = read_graph(path, fmt)
        except (GraphFormatError, OSError) as e:
            return CheckReport(name=path, vertices=0, edges=0, outcome=OUTCOME_INVALID,
                               message=f"parse error: {e}", exit_code=EXIT_PARSE_ERROR)
        return CheckService.check_graph(g, path, run_construction, force_wheel_route, apex)

    @staticmethod
    def verify(g: Graph, certificate_text: str) -> Tuple[int, List[str]]:
        """
        Verify a certificate document against a graph.

        Returns:
            Tuple of (exit_code, problems). Schema violations are reported
            per field with exit code 1; certificate problems with 3.
        """
        try:
            certificate = Tk5Certificate.model_validate_json(certificate_text)
        except ValidationError as e:
            problems = [f"{'.'.join(str(p) for p in err['loc']) or 'document'}: {err['msg']}"
                        for err in e.errors()]
            return EXIT_PARSE_ERROR, problems
        problems = certificate_problems(g, certificate)
        if problems:
            return EXIT_VERIFICATION_FAILURE, problems
        return EXIT_OK, []

    @staticmethod
    def discharge(g: Graph, boundary: Iterable[int]) -> DischargeReport:
        """
        Charge and discharge a plane graph analysed as a hammock.

        The outer face is the face holding the most boundary vertices
        (lowest index on ties).

        Raises:
            InvalidInputError: If g is not planar and 2-connected or the
                boundary is malformed.
        """
        boundary = list(boundary)
        valid, error = validate_boundary(g, boundary)
        if not valid:
            raise InvalidInputError(error)
        if g.n < 3 or not nx.is_biconnected(g.to_networkx()):
            raise InvalidInputError("discharging needs a 2-connected graph")
        embedding = planar_embed(g)
        if embedding is None:
            raise InvalidInputError("graph is not planar")
        bnd = set(boundary)
        best = max(range(len(embedding.faces)), key=lambda i: (len(embedding.faces[i].vertices & bnd), -i))
        embedding = embedding.with_outer(best)

        h = Hammock(g, frozenset(g.vertices), explicit_boundary=frozenset(boundary))
        ledger = apply_discharging(initial_charges(embedding, h), embedding, h, strict=False)
        report = DischargeReport(ledger, embedding, verify_nonpositive(ledger, h),
                                 outer_face_account(ledger, embedding))
        logger.info(f"Discharged {g}: total {ledger.final_total()}, {len(ledger.gaps)} uncovered vertices")
        return report
