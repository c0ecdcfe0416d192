"""Exact arithmetic over Q: rationals, dense polynomials in T, truncated Laurent series in 1/T.

Rationals are :class:`fractions.Fraction` (always normalized, arbitrary precision).
Polynomials are immutable dense coefficient tuples, lowest degree first.
Laurent series carry an explicit precision ``N``: coefficients are known for exponents
``top, top-1, ..., -N`` and nothing is claimed below ``-N``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]

# degree of the zero polynomial; compares below every int
NEG_INF = float("-inf")


def _frac(x: Number) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Polynomial:
    """Dense polynomial over Q in the indeterminate T.

    ``coeffs[k]`` is the coefficient of ``T**k``. Trailing zeros are stripped, so the zero
    polynomial stores an empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list[Fraction]) -> "Polynomial":
        # caller guarantees Fractions; only strip
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "Polynomial":
        if k < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return cls([0] * k + [c])

    # -- basic queries ---------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- ring operations -------------------------------------------------
    def __neg__(self) -> "Polynomial":
        return Polynomial._raw([-c for c in self.coeffs])

    def __add__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Polynomial([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: Number) -> "Polynomial":
        c = _frac(c)
        if c == 0:
            return Polynomial()
        return Polynomial._raw([c * x for x in self.coeffs])

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            raise ZeroDivisionError("the zero polynomial has no monic form")
        return self.scale(1 / self.coeffs[-1])

    def divrem(self, den: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        return poly_divrem(self, den)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return poly_divrem(self, _as_poly(other))[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return poly_divrem(self, _as_poly(other))[1]

    def __call__(self, x: Number) -> Fraction:
        return poly_eval(self, x)

    def derivative(self) -> "Polynomial":
        return poly_derivative(self)

    def compose_power(self, c: int) -> "Polynomial":
        return poly_compose_power(self, c)

    # -- text ------------------------------------------------------------
    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


def _as_poly(x) -> Polynomial | None:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial([x])
    return None


T = Polynomial([0, 1])


def poly_divrem(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Schoolbook division: ``num = q*den + r`` with ``deg r < deg den``."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    dn = len(den.coeffs) - 1
    rem = list(num.coeffs)
    if len(rem) - 1 < dn:
        return Polynomial(), num
    d = den.coeffs
    inv_lc = 1 / d[-1]
    q = [Fraction(0)] * (len(rem) - dn)
    for k in range(len(rem) - 1 - dn, -1, -1):
        c = rem[k + dn]
        if c == 0:
            continue
        c = c * inv_lc
        q[k] = c
        for j in range(dn):
            if d[j]:
                rem[k + j] -= c * d[j]
        rem[k + dn] = Fraction(0)
    del rem[dn:]
    return Polynomial._raw(q), Polynomial._raw(rem)


def poly_eval(p: Polynomial, x: Number) -> Fraction:
    x = _frac(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(p: Polynomial) -> Polynomial:
    return Polynomial._raw([k * c for k, c in enumerate(p.coeffs)][1:])


def poly_compose_power(p: Polynomial, c: int) -> Polynomial:
    """Return ``p(T**c)``."""
    if c < 1:
        raise ValueError("substitution exponent must be >= 1")
    if c == 1 or not p.coeffs:
        return p
    out = [Fraction(0)] * (c * (len(p.coeffs) - 1) + 1)
    for k, a in enumerate(p.coeffs):
        out[c * k] = a
    return Polynomial._raw(out)


# -- text format: "-1/2*T^3 + 2*T - 1" -------------------------------------

def format_polynomial(p: Polynomial) -> str:
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if k == 0:
            body = str(a)
        else:
            mono = "T" if k == 1 else f"T^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*([+-])?\s*
        (?:(\d+(?:/\d+)?)\s*(\*)?\s*)?
        (T(?:\^(\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of :func:`format_polynomial` (also accepts loosely spaced input)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, num, star, mono, exp = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator near {s[pos:]!r}")
        if num is None and mono is None:
            raise ValueError(f"dangling sign near {s[pos:]!r}")
        if star and mono is None:
            raise ValueError(f"dangling '*' near {s[pos:]!r}")
        if num is not None and mono is not None and not star:
            raise ValueError(f"missing '*' near {s[pos:]!r}")
        c = Fraction(num) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        k = 0 if mono is None else (int(exp) if exp else 1)
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = m.end()
        first = False
    if not coeffs:
        return Polynomial()
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return Polynomial(out)


def format_rational(x: Number) -> str:
    """``num/den`` (or bare ``num`` when integral), as used in reports."""
    return str(_frac(x))


# -- truncated Laurent series ----------------------------------------------

class LaurentSeries:
    """Element of Q((1/T)) known on the exponent window ``[-precision, top]``.

    ``coeffs[0]`` is the coefficient of ``T**top`` and ``coeffs[-1]`` that of
    ``T**-precision``. There are no terms above ``top``; below ``-precision`` nothing is
    known, and every operation narrows the precision accordingly.
    """

    __slots__ = ("top", "coeffs", "precision")

    def __init__(self, top: int, coeffs: Sequence[Number], precision: int):
        if len(coeffs) != top + precision + 1:
            raise ValueError(
                f"window [-{precision}, {top}] needs {top + precision + 1} coefficients, "
                f"got {len(coeffs)}"
            )
        self.top = top
        self.coeffs: tuple[Fraction, ...] = tuple(_frac(c) for c in coeffs)
        self.precision = precision

    @classmethod
    def from_polynomial(cls, p: Polynomial, precision: int) -> "LaurentSeries":
        """Exact polynomial viewed as a series known down to ``T**-precision``."""
        top = max(len(p.coeffs) - 1, -precision - 1)
        return cls(top, [p[e] if e >= 0 else 0 for e in range(top, -precision - 1, -1)], precision)

    @classmethod
    def zero(cls, precision: int) -> "LaurentSeries":
        return cls(-1, [0] * (precision), precision)

    def coefficient(self, e: int) -> Fraction:
        if e < -self.precision:
            raise ValueError(f"coefficient of T^{e} is below the known precision {-self.precision}")
        if e > self.top:
            return Fraction(0)
        return self.coeffs[self.top - e]

    def leading_exponent(self) -> int | None:
        """Exponent of the first nonzero known coefficient, or None if all known ones vanish."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return self.top - k
        return None

    def is_zero(self) -> bool:
        return self.leading_exponent() is None

    def truncate(self, precision: int) -> "LaurentSeries":
        if precision > self.precision:
            raise ValueError("cannot raise precision by truncation")
        top = max(self.top, -precision - 1)
        return LaurentSeries(top, [self.coefficient(e) for e in range(top, -precision - 1, -1)], precision)

    def polynomial_part(self) -> Polynomial:
        if self.precision < 0:
            raise ValueError("polynomial part is not resolved at this precision")
        return Polynomial([self.coefficient(e) for e in range(0, self.top + 1)])

    def as_fraction(self) -> tuple[Polynomial, Polynomial]:
        """Return ``(p, T**N)`` with ``p/T**N`` equal to the known window."""
        N = self.precision
        if N < 0:
            raise ValueError("series with negative precision has no fractional form")
        cs = [self.coefficient(e) for e in range(-N, self.top + 1)]
        return Polynomial(cs), Polynomial.monomial(N)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.precision == other.precision and _common(self, other)

    def __hash__(self):
        return hash((self.precision, self.leading_exponent()))

    def agrees_with(self, other: "LaurentSeries", down_to: int | None = None) -> bool:
        """Coefficientwise equality on the common window (optionally only down to ``T**down_to``)."""
        return _common(self, other, down_to)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.top, [-c for c in self.coeffs], self.precision)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        return _add(self, other, 1)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return series_sub(self, other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        return series_mul(self, other)

    def invert(self) -> "LaurentSeries":
        return series_invert(self)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.top - k
            mono = "" if e == 0 else ("T" if e == 1 else f"T^{e}")
            a = -c if c < 0 else c
            body = str(a) if not mono else (mono if a == 1 else f"{a}*{mono}")
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        head = " ".join(terms) if terms else "0"
        return f"{head} + O(T^{-self.precision - 1})"

    def __repr__(self) -> str:
        return f"LaurentSeries({self})"


def _common(a: LaurentSeries, b: LaurentSeries, down_to: int | None = None) -> bool:
    lo = -min(a.precision, b.precision)
    if down_to is not None:
        lo = max(lo, down_to)
    hi = max(a.top, b.top)
    return all(a.coefficient(e) == b.coefficient(e) for e in range(hi, lo - 1, -1))


def _add(a: LaurentSeries, b: LaurentSeries, sign: int) -> LaurentSeries:
    N = min(a.precision, b.precision)
    top = max(a.top, b.top, -N - 1)
    cs = [a.coefficient(e) + sign * b.coefficient(e) for e in range(top, -N - 1, -1)]
    return LaurentSeries(top, cs, N)


def series_from_word(letters: Sequence[int], N: int) -> LaurentSeries:
    """The series ``sum_{n=1..N} letters[n-1] * T**-n`` known to precision N."""
    if N < 1:
        raise ValueError("precision must be >= 1")
    if len(letters) < N:
        raise ValueError("insufficient word prefix")
    return LaurentSeries(-1, list(letters[:N]), N)


def series_sub(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return _add(a, b, -1)


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    va, vb = a.leading_exponent(), b.leading_exponent()
    # unknown tails: a = A + O(T^{-Na-1}), b = B + O(T^{-Nb-1})
    bounds = [-a.precision - b.precision - 1]
    if va is not None:
        bounds.append(va - b.precision)
    if vb is not None:
        bounds.append(vb - a.precision)
    lo = max(bounds)
    N = -lo
    if va is None or vb is None:
        return LaurentSeries(-N - 1, [], N)
    top = va + vb
    if top < lo:
        return LaurentSeries(-N - 1, [], N)
    out = [Fraction(0)] * (top - lo + 1)
    a_terms = [(va - k, a.coefficient(va - k)) for k in range(va + a.precision + 1)]
    b_terms = [(vb - k, b.coefficient(vb - k)) for k in range(vb + b.precision + 1)]
    for ea, ca in a_terms:
        if ca == 0:
            continue
        for eb, cb in b_terms:
            e = ea + eb
            if e < lo:
                break
            if cb:
                out[top - e] += ca * cb
    return LaurentSeries(top, out, N)


def series_invert(s: LaurentSeries) -> LaurentSeries:
    v = s.leading_exponent()
    if v is None:
        raise ZeroDivisionError("cannot invert a series with no resolved leading term")
    # 1/s known to the same relative precision: N + 2v
    N = s.precision + 2 * v
    n_terms = -v + N + 1
    src = [s.coefficient(v - k) for k in range(n_terms)]
    inv_lc = 1 / src[0]
    out = [Fraction(0)] * n_terms
    for k in range(n_terms):
        acc = Fraction(1) if k == 0 else Fraction(0)
        for j in range(1, k + 1):
            if src[j]:
                acc -= src[j] * out[k - j]
        out[k] = acc * inv_lc
    return LaurentSeries(-v, out, N)
