"""Numeric harness result schemas."""
from typing import List, Optional

from pydantic import BaseModel, Field

from schemas.sequence import LimitConstant


class ErrorRow(BaseModel):
    """One (n, k) cell. Values are decimal strings at full working precision."""

    n: int = Field(ge=1)
    k: int = Field(ge=0)
    estimate: str
    exact: str
    abs_error: str


class ErrorTable(BaseModel):
    sequence: str
    precision: int
    rows: List[ErrorRow] = Field(default_factory=list)


class ConvergenceMeasurement(BaseModel):
    sequence: str
    k: int
    n0: int
    precision: int
    exponent: Optional[float] = None  # None when both errors are exactly zero
    degenerate: bool = False


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyReport(BaseModel):
    sequence: str
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class Expansion(BaseModel):
    """Exact coefficients in "p/q" text form.

    For additive sequences coefficients[0] is "0" and `limit_constant`
    names the limit the tail is added to.
    """

    sequence: str
    order: int = Field(ge=0)
    limit_constant: LimitConstant = "none"
    coefficients: List[str]
