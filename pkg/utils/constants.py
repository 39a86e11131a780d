"""
Application Constants Module

Contains all configurable constants for the Apex TK5 Toolkit.
Uses environment variables for deployment flexibility.
"""

import os

# Logging Configuration
LOG_LEVEL = os.getenv("TK5_LOG_LEVEL", "INFO").upper()
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Run Log Database
DB_PATH = os.getenv("TK5_DB_PATH", "runs.db")

# Size Limits
MAX_GRAPH_VERTICES = int(os.getenv("TK5_MAX_VERTICES", "400"))
ORACLE_MAX_VERTICES = int(os.getenv("TK5_ORACLE_MAX_VERTICES", "16"))

# Generator Settings
GENERATOR_MAX_ATTEMPTS = int(os.getenv("TK5_GENERATOR_ATTEMPTS", "50"))

# Batch Settings
DEFAULT_JOBS = int(os.getenv("TK5_JOBS", "1"))

# Structural Thresholds
INPUT_CONNECTIVITY = 5
HOST_CONNECTIVITY = 4
HAMMOCK_BOUNDARY_SIZE = 4
LINKAGE_SIZE = 4
TARGET_ALPHA = 3
FAN_SIZE = 5
BRANCH_SIZE = 5

# Generator Kinds
KIND_APEXED_TRIANGULATION = "apexed-triangulation"
KIND_APEXED_MEDIAL = "apexed-medial"
KIND_APEXED_QUADRANGULATION = "apexed-quadrangulation"
KIND_PLANE_2CONN = "plane-2conn"

GENERATOR_KINDS = [
    KIND_APEXED_TRIANGULATION,
    KIND_APEXED_MEDIAL,
    KIND_APEXED_QUADRANGULATION,
    KIND_PLANE_2CONN,
]

# Graph File Formats
FORMAT_GRAPH6 = "g6"
FORMAT_ADJACENCY = "adj"
GRAPH_FORMATS = [FORMAT_GRAPH6, FORMAT_ADJACENCY]

# Exit Codes
EXIT_OK = 0
EXIT_PARSE_ERROR = 1
EXIT_HYPOTHESIS_FAILURE = 2
EXIT_VERIFICATION_FAILURE = 3
EXIT_INTERNAL_ERROR = 4

# Outcome Names
OUTCOME_K4_MINUS = "k4-minus"
OUTCOME_TK5 = "tk5"
OUTCOME_SMALL_GRAPH_TK5 = "small-graph-tk5"
OUTCOME_INVALID = "invalid"
OUTCOME_ERROR = "error"
OUTCOME_CHECKED = "checked"

# Application Settings
APP_NAME = "Apex TK5 Toolkit"
APP_VERSION = "1.0.0"
