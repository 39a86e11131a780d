"""
Database Module

Run log for checked graphs.
Uses SQLite with parameterized queries; one row per checked graph.
"""

import sqlite3
import logging
from contextlib import contextmanager
from typing import Dict, List, Optional

from models import CheckReport, RunRecord
from utils.constants import DB_PATH

logger = logging.getLogger(__name__)


def get_connection(path: Optional[str] = None) -> sqlite3.Connection:
    """
    Create a new database connection.

    Args:
        path: Database file; defaults to DB_PATH.

    Returns:
        SQLite connection object with row factory set to sqlite3.Row.
    """
    conn = sqlite3.connect(path or DB_PATH)
    conn.row_factory = sqlite3.Row
    return conn


@contextmanager
def get_db(path: Optional[str] = None):
    """
    Context manager for database connections.
    Ensures proper connection cleanup and provides automatic commit/rollback.

    Yields:
        SQLite connection object.
    """
    conn = get_connection(path)
    try:
        yield conn
        conn.commit()
    except Exception as e:
        conn.rollback()
        logger.error(f"Database error: {e}")
        raise
    finally:
        conn.close()


def init_database(path: Optional[str] = None):
    """
    Initialize database schema.
    Safe to call multiple times.
    """
    with get_db(path) as conn:
        cursor = conn.cursor()
        cursor.execute("""
            CREATE TABLE IF NOT EXISTS runs (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                name TEXT NOT NULL,
                graph6 TEXT NOT NULL DEFAULT '',
                vertices INTEGER NOT NULL,
                edges INTEGER NOT NULL,
                outcome TEXT NOT NULL,
                exit_code INTEGER NOT NULL,
                message TEXT DEFAULT '',
                certificate TEXT,
                created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP
            )
        """)
        cursor.execute("""
            CREATE INDEX IF NOT EXISTS idx_runs_outcome ON runs(outcome)
        """)
        logger.debug("Run log initialized")


# Run Operations

def record_run(report: CheckReport, path: Optional[str] = None) -> int:
    """
    Store one check report.

    Args:
        report: The report to store.
        path: Database file; defaults to DB_PATH.

    Returns:
        Row ID of the new run.
    """
    certificate = report.certificate.to_json() if report.certificate is not None else None
    with get_db(path) as conn:
        cursor = conn.cursor()
        cursor.execute("""
            INSERT INTO runs (name, graph6, vertices, edges, outcome, exit_code, message, certificate)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?)
        """, (report.name, report.graph6, report.vertices, report.edges, report.outcome,
              report.exit_code, report.message, certificate))
        logger.info(f"Run recorded: {report.name} -> {report.outcome}")
        return cursor.lastrowid


def get_runs(limit: int = 20, outcome: Optional[str] = None,
             path: Optional[str] = None) -> List[RunRecord]:
    """
    Most recent runs first.

    Args:
        limit: Maximum number of runs to return.
        outcome: Only runs with this outcome, if given.
        path: Database file; defaults to DB_PATH.
    """
    query = """
        SELECT id, name, graph6, vertices, edges, outcome, exit_code, message,
               certificate, created_at
        FROM runs
    """
    params: list = []
    if outcome is not None:
        query += " WHERE outcome = ?"
        params.append(outcome)
    query += " ORDER BY id DESC LIMIT ?"
    params.append(limit)

    with get_db(path) as conn:
        cursor = conn.cursor()
        cursor.execute(query, params)
        return [
            RunRecord(
                id=row['id'],
                name=row['name'],
                graph6=row['graph6'],
                vertices=row['vertices'],
                edges=row['edges'],
                outcome=row['outcome'],
                exit_code=row['exit_code'],
                message=row['message'] or "",
                certificate=row['certificate'],
                created_at=row['created_at'],
            )
            for row in cursor.fetchall()
        ]


def get_outcome_counts(path: Optional[str] = None) -> Dict[str, int]:
    """Number of recorded runs per outcome."""
    with get_db(path) as conn:
        cursor = conn.cursor()
        cursor.execute("""
            SELECT outcome, COUNT(*) as count FROM runs
            GROUP BY outcome ORDER BY outcome
        """)
        return {row['outcome']: row['count'] for row in cursor.fetchall()}
