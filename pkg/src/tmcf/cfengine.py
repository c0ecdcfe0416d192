"""Continued fractions over Q((1/T)) via the Euclidean algorithm on Q[T].

For a truncated series the engine only emits quotients that are guaranteed to be shared
with every series agreeing with it down to ``T**-N``: the longest prefix with
``2 * sum(deg a_j) <= N - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .exactalg import LaurentSeries, Polynomial, poly_divrem


@dataclass(frozen=True)
class ContinuedFraction:
    a0: Polynomial
    quotients: tuple[Polynomial, ...] = ()

    def __post_init__(self):
        for n, q in enumerate(self.quotients, 1):
            if q.degree < 1:
                raise ValueError(f"partial quotient {n} is constant: {q}")

    def __len__(self) -> int:
        return len(self.quotients)

    def terms(self) -> list[Polynomial]:
        return [self.a0, *self.quotients]

    def degrees(self) -> list[int]:
        return [q.degree for q in self.quotients]


@dataclass(frozen=True)
class CertifiedExpansion:
    cf: ContinuedFraction
    certified_count: int
    precision_used: int

    @property
    def quotients(self) -> tuple[Polynomial, ...]:
        return self.cf.quotients


@dataclass(frozen=True)
class ConvergentPair:
    P: Polynomial
    Q: Polynomial = field()

    def __post_init__(self):
        if self.Q.is_zero():
            raise ValueError("convergent denominator is zero")


def cf_of_rational(num: Polynomial, den: Polynomial, max_quotients: int | None = None) -> ContinuedFraction:
    """Expand num/den; stops when the remainder vanishes or after ``max_quotients`` terms."""
    if den.is_zero():
        raise ZeroDivisionError("continued fraction of a rational function with zero denominator")
    a0, r = poly_divrem(num, den)
    quotients = []
    x, y = den, r
    while not y.is_zero() and (max_quotients is None or len(quotients) < max_quotients):
        q, r = poly_divrem(x, y)
        quotients.append(q)
        x, y = y, r
    return ContinuedFraction(a0, tuple(quotients))


def cf_of_series(s: LaurentSeries) -> CertifiedExpansion:
    """Certified expansion of a truncated series, read as p(T)/T^N."""
    N = s.precision
    if N < 1:
        raise ValueError("series precision must be >= 1")
    num, den = s.as_fraction()
    a0, r = poly_divrem(num, den)
    quotients = []
    budget = N - 1  # 2 * (sum of certified degrees) may not exceed this
    used = 0
    x, y = den, r
    while not y.is_zero():
        d = x.degree - y.degree
        if 2 * (used + d) > budget:
            break
        q, r = poly_divrem(x, y)
        quotients.append(q)
        used += d
        x, y = y, r
    return CertifiedExpansion(ContinuedFraction(a0, tuple(quotients)), len(quotients), N)


def convergents(cf: ContinuedFraction, k: int | None = None) -> list[ConvergentPair]:
    """(P_j, Q_j) for j = 0..k, by the three-term recurrence."""
    if k is None:
        k = len(cf.quotients)
    if k > len(cf.quotients):
        raise ValueError(f"only {len(cf.quotients)} quotients available, asked for {k}")
    p_prev, p = Polynomial([1]), cf.a0
    q_prev, q = Polynomial(), Polynomial([1])
    out = [ConvergentPair(p, q)]
    for a in cf.quotients[:k]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        out.append(ConvergentPair(p, q))
    return out


def fold(cf: ContinuedFraction) -> tuple[Polynomial, Polynomial]:
    """Fold a finite continued fraction back into num/den (last convergent)."""
    last = convergents(cf)[-1]
    return last.P, last.Q


def approximation_order(s: LaurentSeries, pair: ConvergentPair) -> int:
    """Exponent of the leading term of Q*s - P."""
    dq = pair.Q.degree
    pad = s.precision + max(dq, 0) + max(pair.P.degree, 0) + 1
    qs = LaurentSeries.from_polynomial(pair.Q, pad) * s
    diff = qs - LaurentSeries.from_polynomial(pair.P, pad)
    v = diff.leading_exponent()
    if v is None:
        raise ValueError("order unresolved at this precision")
    return v
