"""Command-line configuration schema."""
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from settings import DEFAULT_FORMAT, DEFAULT_PRECISION, MIN_PRECISION

Command = Literal["expand", "verify", "table", "list"]
OutputFormat = Literal["plain", "csv", "json"]


class CliConfig(BaseModel):
    command: Command
    sequence: Optional[str] = None
    # None: the custom file's declared order, else DEFAULT_ORDER
    order: Optional[int] = Field(default=None, ge=1)
    precision: int = Field(default=DEFAULT_PRECISION, ge=MIN_PRECISION)
    n_values: List[int] = Field(default_factory=list)
    k_values: List[int] = Field(default_factory=list)
    format: OutputFormat = DEFAULT_FORMAT

    @field_validator("n_values")
    @classmethod
    def _positive_n(cls, values: List[int]) -> List[int]:
        if any(n < 1 for n in values):
            raise ValueError("n values must all be >= 1")
        return values

    @field_validator("k_values")
    @classmethod
    def _nonnegative_k(cls, values: List[int]) -> List[int]:
        if any(k < 0 for k in values):
            raise ValueError("k values must all be >= 0")
        return values
