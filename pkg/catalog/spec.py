"""SequenceSpec: one relation, its a-stream, and how to evaluate x_n and y_n."""
from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

from errors import ExpansionOnlyError
from recurrences import CoeffStream, additive_expansion, solve
from schemas import LimitConstant, ReferenceCoefficient, SequenceKind
from series.truncated import TruncatedSeries

# (n, precision in decimal digits) -> BigFloat
Evaluator = Callable[[int, int], object]


@dataclass(frozen=True)
class SequenceSpec:
    name: str
    kind: SequenceKind
    a_stream: CoeffStream
    eval_x: Optional[Evaluator] = None
    eval_y: Optional[Evaluator] = None
    limit_constant: LimitConstant = "none"
    # x_n - L = sum t_k n^{-k} instead of x_n = y_n * sum b_k n^{-k}
    additive: bool = False
    reference_coeffs: Tuple[ReferenceCoefficient, ...] = ()
    # the a-series rebuilt from series algebra, independent of the closed form
    a_series_builder: Optional[Callable[[int], TruncatedSeries]] = None
    declared_order: Optional[int] = None
    description: str = field(default="", compare=False)

    @property
    def expansion_only(self) -> bool:
        return self.eval_x is None

    def require_evaluators(self) -> None:
        if self.eval_x is None or self.eval_y is None:
            raise ExpansionOnlyError(
                f"{self.name} is an expansion-only sequence: no exact evaluator for x_n"
            )

    def expand(self, m: int) -> TruncatedSeries:
        """Return b_0..b_m, or the tail 0, t_1..t_m for additive specs."""
        if self.additive:
            return additive_expansion(self.a_stream, m)
        return solve(self.a_stream, m)
