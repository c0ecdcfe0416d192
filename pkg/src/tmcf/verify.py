"""Compare the Euclid-computed continued fraction of theta_i with the predicted one."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .cfengine import cf_of_series
from .conjecture import predicted_degree, predicted_quotient
from .exactalg import Polynomial, format_polynomial, format_rational, series_from_word
from .words import word_prefix

MEASURE_METHOD = (
    "2 + max_{depth//2 <= n < depth} deg(a_{n+1}) / sum_{j<=n} deg(a_j) over predicted degrees; "
    "exactly 2 when the predicted degrees are bounded (i = 1)"
)


@dataclass(frozen=True)
class QuotientMatch:
    index: int
    computed: Polynomial | None
    predicted: Polynomial
    equal: bool

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "computed": None if self.computed is None else format_polynomial(self.computed),
            "predicted": format_polynomial(self.predicted),
            "equal": self.equal,
        }


@dataclass(frozen=True)
class MeasureEstimate:
    i: int
    depth: int
    value: Fraction


@dataclass
class VerificationReport:
    i: int
    depth_requested: int
    depth_certified: int
    precision_used: int
    matches: list[QuotientMatch] = field(default_factory=list)
    first_mismatch: int | None = None
    measure_estimate: Fraction | None = None
    elapsed: float | None = None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None

    @property
    def n_equal(self) -> int:
        return sum(m.equal for m in self.matches)

    def to_dict(self, include_elapsed: bool = False) -> dict:
        return {
            "i": self.i,
            "depth_requested": self.depth_requested,
            "depth_certified": self.depth_certified,
            "precision_used": self.precision_used,
            "matches": [m.to_dict() for m in self.matches],
            "first_mismatch": self.first_mismatch,
            "measure_estimate": None if self.measure_estimate is None else format_rational(self.measure_estimate),
            "measure_method": MEASURE_METHOD,
            # wall time varies run to run, so it is only filled in on request
            "elapsed": self.elapsed if include_elapsed else None,
        }


def required_precision(i: int, depth: int) -> int:
    return 2 * sum(predicted_degree(i, n) for n in range(1, depth + 1)) + 2


def theta_series(i: int, N: int):
    return series_from_word(word_prefix(i, N), N)


def verify_expansion(i: int, depth: int, precision: int | None = None) -> VerificationReport:
    """Expand theta_i to ``depth`` certified quotients and compare with the prediction.

    Indices beyond the certified prefix are listed with ``computed=None`` and do not count as
    mismatches; a short certified prefix means the predicted degrees underestimated the
    required precision.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    t0 = time.perf_counter()
    N = required_precision(i, depth) if precision is None else precision
    expansion = cf_of_series(theta_series(i, N))
    computed = expansion.quotients
    matches = []
    first_mismatch = None
    for n in range(1, depth + 1):
        pred = predicted_quotient(i, n)
        got = computed[n - 1] if n <= len(computed) else None
        equal = got is not None and got == pred
        if got is not None and not equal and first_mismatch is None:
            first_mismatch = n
        matches.append(QuotientMatch(n, got, pred, equal))
    if expansion.cf.a0 != 0 and first_mismatch is None:
        first_mismatch = 0
    measure = irrationality_estimate(i, depth).value if depth >= 3 else None
    return VerificationReport(
        i=i,
        depth_requested=depth,
        depth_certified=expansion.certified_count,
        precision_used=N,
        matches=matches,
        first_mismatch=first_mismatch,
        measure_estimate=measure,
        elapsed=time.perf_counter() - t0,
    )


def measure_from_degrees(degrees: list[int]) -> Fraction:
    depth = len(degrees)
    if depth < 3:
        raise ValueError("need at least 3 partial quotient degrees")
    prefix = [0]
    for d in degrees:
        prefix.append(prefix[-1] + d)
    best = max(Fraction(degrees[n], prefix[n]) for n in range(max(1, depth // 2), depth))
    return 2 + best


def irrationality_estimate(i: int, depth: int) -> MeasureEstimate:
    if depth < 3:
        raise ValueError("depth must be >= 3")
    if i == 1:
        # every predicted quotient is linear, so the limsup term vanishes
        return MeasureEstimate(i, depth, Fraction(2))
    degrees = [predicted_degree(i, n) for n in range(1, depth + 1)]
    return MeasureEstimate(i, depth, measure_from_degrees(degrees))
