"""Predicted continued fraction of theta_i from the recursive laws.

theta_i = [0, a_1, a_2, ...] with a_n = lambda_n * b_n, b_n monic.

* b_n: for i = 1, T - (-1)^n. For i >= 2, b_1 = T - 1, b_{2k} = (T^i - 1)/(T - 1) and
  b_{2k+1} = (T - 1) * P_{nu2(k)+1}.
* P_1 = (T^{2i^2} - 1)/(T^{2i} - 1),
  P_{m+1}(T) = P_m(T^{2i}) + 2 (P_m(T^{2i}) - P_m(1)) / (T^i - 1).
* lambda: lambda_1 = 1, lambda_2 = 1/2 and for k >= 1
  lambda_{4k-3} = lambda_{2k-1}, lambda_{4k} = -lambda_{4k-2},
  lambda_{4k-2} lambda_{4k-1} lambda_{4k} = lambda_{2k},
  lambda_{4k} = -1 / (2 + u_1 + ... + u_{k-1}) with u_j = 2 lambda_{2j+1} c_j,
  where c_j = 1 for i = 1 and c_j = P_{nu2(j)+1}(1) for i >= 2.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from .exactalg import Polynomial, T, poly_derivative, poly_divrem, poly_eval

DEFAULT_DEGREE_BUDGET = 10**6


class RecursionExactnessError(ArithmeticError):
    """A division in the P-recursion left a remainder."""


class DegenerateRecursionError(ArithmeticError):
    """The lambda recursion hit a zero it must invert."""


class DegreeBudgetError(ValueError):
    pass


def nu2(k: int) -> int:
    if k <= 0:
        raise ValueError("2-adic valuation is only defined here for k >= 1")
    return (k & -k).bit_length() - 1


def _check(i: int, lo: int = 1) -> None:
    if not isinstance(i, int) or i < lo:
        raise ValueError(f"family index must be an integer >= {lo}, got {i!r}")


def _exact_div(num: Polynomial, den: Polynomial) -> Polynomial:
    q, r = poly_divrem(num, den)
    if not r.is_zero():
        raise RecursionExactnessError("P-recursion exactness violated")
    return q


def p_degree(i: int, m: int) -> int:
    return (2 * i) ** m * (i - 1)


class PPolynomialTable:
    """Materialized P_{i,1}, P_{i,2}, ... for one i >= 2."""

    def __init__(self, i: int, degree_budget: int = DEFAULT_DEGREE_BUDGET):
        _check(i, 2)
        self.i = i
        self.degree_budget = degree_budget
        self.table: dict[int, Polynomial] = {}
        self._lock = threading.Lock()

    def __getitem__(self, m: int) -> Polynomial:
        if m < 1:
            raise ValueError("m must be >= 1")
        with self._lock:
            if m not in self.table:
                if p_degree(self.i, m) + 1 > self.degree_budget:
                    raise DegreeBudgetError(
                        f"P_{{{self.i},{m}}} has degree {p_degree(self.i, m)}, "
                        f"over the budget of {self.degree_budget} coefficients"
                    )
                for j in range(len(self.table) + 1, m + 1):
                    self.table[j] = self._next(j)
            return self.table[m]

    def _next(self, m: int) -> Polynomial:
        i = self.i
        if m == 1:
            return _exact_div(T ** (2 * i * i) - 1, T ** (2 * i) - 1)
        prev = self.table[m - 1]
        lifted = prev.compose_power(2 * i)
        tail = _exact_div(lifted - poly_eval(prev, 1), T**i - 1)
        return lifted + tail * 2


_p_tables: dict[int, PPolynomialTable] = {}
_tables_lock = threading.Lock()


def _p_table(i: int) -> PPolynomialTable:
    with _tables_lock:
        if i not in _p_tables:
            _p_tables[i] = PPolynomialTable(i)
        return _p_tables[i]


def p_poly(i: int, m: int) -> Polynomial:
    _check(i, 2)
    return _p_table(i)[m]


def p_values_at_one(i: int, m_max: int) -> list[tuple[Fraction, Fraction]]:
    """(P_m(1), P'_m(1)) for m = 1..m_max from the materialized polynomials."""
    _check(i, 2)
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    out = []
    for m in range(1, m_max + 1):
        p = p_poly(i, m)
        out.append((poly_eval(p, 1), poly_eval(poly_derivative(p), 1)))
    for m in range(1, m_max):
        if out[m][0] != out[m - 1][0] + 4 * out[m - 1][1]:
            raise RecursionExactnessError(
                f"P_{{{i},{m + 1}}}(1) != P_{{{i},{m}}}(1) + 4 P'_{{{i},{m}}}(1)"
            )
    return out


# P_m(1) for large m without materializing P_m: push a truncated Taylor expansion at T = 1
# through the recursion. Each step loses one order, so P_m(1) needs m orders of P_1.

def _series_mul(a: list[Fraction], b: list[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for x, ca in enumerate(a[:n]):
        if ca:
            for y, cb in enumerate(b[: n - x]):
                out[x + y] += ca * cb
    return out


def _series_div(a: list[Fraction], b: list[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for k in range(n):
        acc = a[k] - sum(b[j] * out[k - j] for j in range(1, min(k, len(b) - 1) + 1))
        out[k] = acc / b[0]
    return out


def _taylor_at_one(p: Polynomial, n: int) -> list[Fraction]:
    # coefficients of p(1 + h) up to h^(n-1)
    return [sum((c * comb(k, r) for k, c in enumerate(p.coeffs) if k >= r), Fraction(0)) for r in range(n)]


def p_value_at_one(i: int, m: int) -> Fraction:
    _check(i, 2)
    if m < 1:
        raise ValueError("m must be >= 1")
    jet = _taylor_at_one(p_poly(i, 1), m)
    for _ in range(m - 1):
        L = len(jet)
        g = [Fraction(comb(2 * i, r)) for r in range(L)]
        g[0] = Fraction(0)
        composed = [Fraction(0)] * L
        for c in reversed(jet):  # Horner in g
            composed = _series_mul(composed, g, L)
            composed[0] += c
        shifted = composed[1:]  # (P_m(T^{2i}) - P_m(1)) / h
        denom = [Fraction(comb(i, r + 1)) for r in range(L - 1)]  # (T^i - 1) / h
        quot = _series_div(shifted, denom, L - 1)
        jet = [composed[r] + 2 * quot[r] for r in range(L - 1)]
    return jet[0]


class LambdaSequence:
    """Memoized lambda_{i,n}, filled in increasing n."""

    def __init__(self, i: int):
        _check(i)
        self.i = i
        self.values: list[Fraction] = [Fraction(0), Fraction(1), Fraction(1, 2)]  # 1-based
        self.partial_u_sums: list[Fraction] = [Fraction(0)]  # [k] = u_1 + ... + u_k
        self._c: dict[int, Fraction] = {}
        self._lock = threading.RLock()

    def _coupling(self, j: int) -> Fraction:
        if self.i == 1:
            return Fraction(1)
        m = nu2(j) + 1
        if m not in self._c:
            self._c[m] = p_value_at_one(self.i, m)
        return self._c[m]

    def u(self, j: int) -> Fraction:
        return 2 * self[2 * j + 1] * self._coupling(j)

    def _lambda_4k(self, k: int) -> Fraction:
        while len(self.partial_u_sums) < k:
            j = len(self.partial_u_sums)
            self.partial_u_sums.append(self.partial_u_sums[-1] + self.u(j))
        denom = 2 + self.partial_u_sums[k - 1]
        if denom == 0:
            raise DegenerateRecursionError("lambda recursion degenerate")
        return -1 / denom

    def _compute(self, n: int) -> Fraction:
        k, r = divmod(n + 3, 4)  # n = 4k - 3 + r
        v = self.values
        if r == 0:
            return v[2 * k - 1]
        if r == 3:
            return self._lambda_4k(k)
        lam4k = self._lambda_4k(k)
        if r == 1:
            return -lam4k
        # r == 2: lambda_{4k-1} from the triple product
        prod = v[4 * k - 2] * lam4k
        if prod == 0:
            raise DegenerateRecursionError("lambda recursion degenerate")
        return v[2 * k] / prod

    def __getitem__(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("lambda index must be >= 1")
        with self._lock:
            v = self.values
            while len(v) <= n:
                v.append(self._compute(len(v)))
            return v[n]

    def table(self, depth: int) -> list[Fraction]:
        self[depth]
        return self.values[1 : depth + 1]


_lambda_seqs: dict[int, LambdaSequence] = {}


def lambda_sequence(i: int) -> LambdaSequence:
    with _tables_lock:
        if i not in _lambda_seqs:
            _lambda_seqs[i] = LambdaSequence(i)
        return _lambda_seqs[i]


def lambda_coeff(i: int, n: int) -> Fraction:
    return lambda_sequence(i)[n]


def b_poly(i: int, n: int) -> Polynomial:
    _check(i)
    if n < 1:
        raise ValueError("n must be >= 1")
    if i == 1:
        return T + 1 if n % 2 else T - 1
    if n == 1:
        return T - 1
    if n % 2 == 0:
        return Polynomial([1] * i)
    k = (n - 1) // 2
    return (T - 1) * p_poly(i, nu2(k) + 1)


def predicted_quotient(i: int, n: int) -> Polynomial:
    return b_poly(i, n).scale(lambda_coeff(i, n))


def predicted_degree(i: int, n: int) -> int:
    _check(i)
    if n < 1:
        raise ValueError("n must be >= 1")
    if i == 1 or n == 1:
        return 1
    if n % 2 == 0:
        return i - 1
    return 1 + p_degree(i, nu2((n - 1) // 2) + 1)


def predicted_expansion(i: int, depth: int) -> list[Polynomial]:
    return [predicted_quotient(i, n) for n in range(1, depth + 1)]
