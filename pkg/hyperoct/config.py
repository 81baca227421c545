"""
Configuration settings for hyperoct.
"""
import json
import os
from pathlib import Path

from hyperoct.errors import UsageError

APP_NAME = "hyperoct"

# Environment fallback for --jobs
JOBS_ENV_VAR = "HYPEROCT_JOBS"

# Symmetric-rank enumeration
DEFAULT_SYMRANK_BUDGET = 10 ** 8  # matrices
SYMRANK_BATCH_SIZE = 1 << 16

OUTPUT_FORMATS = ("text", "json", "csv")


# Load run defaults
def get_run_defaults():
    """Load run defaults from the JSON resource file."""
    try:
        resource_path = Path(__file__).parent.parent / "resources" / "run_defaults.json"
        with open(resource_path, "r") as f:
            return json.load(f)
    except (FileNotFoundError, json.JSONDecodeError):
        # Defaults if file not found or invalid
        return {
            "format": "text",
            "jobs": 1,
            "symrank_budget": DEFAULT_SYMRANK_BUDGET,
            "symrank_batch_size": SYMRANK_BATCH_SIZE,
        }


def resolve_jobs(cli_value=None):
    """
    Decide how many worker processes an enumeration may use.

    Args:
        cli_value (int or None): Value passed with --jobs, if any

    Returns:
        int: Number of workers, at least 1
    """
    if cli_value is not None:
        jobs = cli_value
    elif os.environ.get(JOBS_ENV_VAR):
        raw = os.environ[JOBS_ENV_VAR]
        try:
            jobs = int(raw)
        except ValueError:
            raise UsageError(f"{JOBS_ENV_VAR} must be a positive integer, got {raw!r}")
    else:
        jobs = int(get_run_defaults().get("jobs", 1))

    if jobs < 1:
        raise UsageError(f"--jobs must be a positive integer, got {jobs}")
    return jobs


# Debugging flag (set to True for more verbose output)
DEBUG = False
