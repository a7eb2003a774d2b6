"""Sequence catalog schemas."""
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

SequenceKind = Literal["difference", "product", "ratio"]
LimitConstant = Literal["gamma", "e", "none"]
Provenance = Literal["printed", "derived"]

SEQUENCE_KINDS = ("difference", "product", "ratio")


class ReferenceCoefficient(BaseModel):
    """A known b_k with where it comes from.

    `value` is the exact rational in "p/q" text form.
    """

    model_config = ConfigDict(frozen=True)

    index: int = Field(ge=0)
    value: str
    provenance: Provenance = "printed"
    note: str = ""


class SequenceSummary(BaseModel):
    name: str
    kind: SequenceKind
