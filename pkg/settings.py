"""Engine defaults and logging setup.

Usage:
    from settings import DEFAULT_PRECISION, configure_logging
    configure_logging()

`ASYMPT_LOG_LEVEL` (read from the environment or a `.env` file) only changes
what is logged to stderr; command output on stdout never depends on it.
"""
import logging
import os

from dotenv import load_dotenv

load_dotenv()

DEFAULT_ORDER = 6
DEFAULT_PRECISION = 50
DEFAULT_FORMAT = "plain"

MIN_PRECISION = 10
# Extra decimal digits carried by evaluators on top of the requested precision.
GUARD_DIGITS = 10

DISPLAY_DECIMALS = 9
TABLE_TOLERANCE = 5e-10

# Convergence checks run at no less than this precision.
CONVERGENCE_PRECISION = 60
CONVERGENCE_N0 = 100
CONVERGENCE_SLACK = 0.35

LOG_FORMAT = "%(levelname)s %(name)s %(message)s"


def log_level() -> int:
    """Return the level named by ASYMPT_LOG_LEVEL, WARNING when unset or unknown."""
    name = os.environ.get("ASYMPT_LOG_LEVEL", "WARNING").upper()
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.WARNING


def configure_logging() -> None:
    logging.basicConfig(level=log_level(), format=LOG_FORMAT)
