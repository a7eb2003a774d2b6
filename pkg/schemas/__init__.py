from .sequence import (
    SEQUENCE_KINDS,
    LimitConstant,
    Provenance,
    ReferenceCoefficient,
    SequenceKind,
    SequenceSummary,
)
from .tables import (
    CheckResult,
    ConvergenceMeasurement,
    ErrorRow,
    ErrorTable,
    Expansion,
    VerifyReport,
)
from .cli import CliConfig, Command, OutputFormat

__all__ = [
    "SEQUENCE_KINDS", "LimitConstant", "Provenance", "ReferenceCoefficient",
    "SequenceKind", "SequenceSummary",
    "CheckResult", "ConvergenceMeasurement", "ErrorRow", "ErrorTable", "Expansion", "VerifyReport",
    "CliConfig", "Command", "OutputFormat",
]
