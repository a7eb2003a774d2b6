"""User-supplied sequences: an explicit a-coefficient list, expansion only.

File format:
    kind: ratio
    order: 2
    1
    0
    -3/8
    -1/4
"""
import logging
from pathlib import Path
from typing import Optional, Sequence, Union

from catalog.spec import SequenceSpec
from errors import InsufficientCoefficientsError, SeriesFormatError
from recurrences import ListStream, check_normalization, required_terms
from schemas import SEQUENCE_KINDS, SequenceKind
from series.rational import RationalLike
from series.text import numbered_lines, read_coefficient_block

logger = logging.getLogger(__name__)


def custom_spec(
    kind: SequenceKind,
    coeffs: Sequence[RationalLike],
    *,
    name: str = "custom",
    order: Optional[int] = None,
) -> SequenceSpec:
    """Wrap an explicit a_0..a_N list; the kind's normalization is checked here."""
    stream = ListStream(kind, coeffs)
    check_normalization(stream)
    if order is not None and len(stream) < required_terms(kind, order):
        raise InsufficientCoefficientsError(required_terms(kind, order) - 1, len(stream))
    return SequenceSpec(name=name, kind=kind, a_stream=stream, declared_order=order)


def parse_custom_spec(text: str, name: str = "custom") -> SequenceSpec:
    """Return the spec described by a custom-sequence file's text."""
    lines = numbered_lines(text)
    end_line = len(text.splitlines()) + 1
    if not lines:
        raise SeriesFormatError("expected a 'kind:' header line", line=end_line)

    kind_line, kind_text = lines[0]
    key, sep, kind = kind_text.partition(":")
    kind = kind.strip()
    if not sep or key.strip() != "kind":
        raise SeriesFormatError(f"expected 'kind: ...', got {kind_text!r}", line=kind_line)
    if kind not in SEQUENCE_KINDS:
        raise SeriesFormatError(f"unknown kind {kind!r}", line=kind_line)

    order, coeffs = read_coefficient_block(lines[1:], end_line=end_line)
    if not coeffs:
        raise SeriesFormatError("no coefficients given", line=end_line)

    logger.debug("parsed custom %s sequence %r with %d coefficients", kind, name, len(coeffs))
    return custom_spec(kind, coeffs, name=name, order=order)


def load_custom_spec(path: Union[str, Path]) -> SequenceSpec:
    """Return the spec in `path`, named after the file stem."""
    path = Path(path)
    return parse_custom_spec(path.read_text(encoding="utf-8"), name=path.stem)
