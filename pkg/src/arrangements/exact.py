"""Exact arithmetic: rationals, dense polynomials, matrices and elimination.

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  Integer coefficients are kept as plain ``int`` for
as long as possible; a ``Fraction`` only appears after a genuine division.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?")


class ZeroPolynomialError(ValueError):
    pass


class DegreeZeroInEliminatedVariable(ValueError):
    pass


class _NegativeInfinity:
    """Degree of the zero polynomial.  Compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("-oo - -oo is undefined")
        return self

    def __repr__(self):
        return "-oo"


NEG_INF = _NegativeInfinity()


def parse_rational(text: str) -> Fraction:
    """Parse ``[sign]int[/posint]``.  Anything else raises ValueError."""
    if not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational: {text!r}")
    value = Fraction(text)
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return value


def format_rational(value: Rational) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_arith(a: Rational, b: Rational, op: str) -> Fraction:
    a, b = Fraction(a), Fraction(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def _normalize(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _strip(coeffs: Iterable[Rational]) -> tuple:
    out = [_normalize(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def common_denominator(values: Iterable[Rational]) -> int:
    return reduce(lcm, (Fraction(v).denominator for v in values), 1)


def content(values: Iterable[int]) -> int:
    return reduce(gcd, values, 0)


# ---------------------------------------------------------------------------
# univariate


class Poly:
    """Dense univariate polynomial over Q, ``coeffs[i]`` is the coefficient of t^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: Rational = 1) -> Poly:
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable[Rational]) -> Poly:
        out = cls([1])
        for r in roots:
            out = out * cls([-r, 1])
        return out

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Rational:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Rational:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        other = _as_poly(other)
        return Poly(_mul_lists(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Poly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        if len(rem) - 1 < db:
            return Poly(), self
        quot = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            if isinstance(c, int) and isinstance(lc, int) and c % lc == 0:
                q = c // lc
            else:
                q = Fraction(c) / lc
            quot[i - db] = q
            for j, bc in enumerate(other.coeffs):
                rem[i - db + j] -= q * bc
        return Poly(quot), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: Rational) -> Rational:
        acc: Rational = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _normalize(acc)

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> Poly:
        if self.is_zero():
            raise ZeroPolynomialError("zero polynomial has no monic form")
        lc = Fraction(self.lc)
        return Poly(Fraction(c) / lc for c in self.coeffs)

    def primitive(self) -> Poly:
        """Integer primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        den = common_denominator(self.coeffs)
        ints = [int(c * den) for c in self.coeffs]
        g = content(ints)
        if ints[-1] < 0:
            g = -g
        return Poly(c // g for c in ints)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly([x])
    raise TypeError(f"cannot coerce {type(x).__name__} to Poly")


def _mul_lists(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def format_poly(p: Poly, var: str = "t") -> str:
    """Descending powers with explicit signs, e.g. ``t^3 - 4t^2 + 5t - 2``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{format_rational(mag)}{mono}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def _prem_int(a: list, b: list) -> list:
    """lc(b)^(deg a - deg b + 1) * a  mod  b, for integer lists with deg a >= deg b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    for shift in range(len(a) - 1 - db, -1, -1):
        lr = r[shift + db]
        r = [lb * c for c in r]
        if lr:
            for j, bc in enumerate(b):
                r[shift + j] -= lr * bc
    r = r[:db]
    while r and r[-1] == 0:
        r.pop()
    return r


def _primitive_list(a: list) -> list:
    g = content(a)
    if a and a[-1] < 0:
        g = -g
    if g in (0, 1):
        return a
    return [c // g for c in a]


def _gcd_int_lists(a: list, b: list) -> list:
    """Primitive gcd of two nonzero integer lists by the subresultant PRS."""
    if len(a) < len(b):
        a, b = b, a
    a, b = _primitive_list(a), _primitive_list(b)
    g = h = 1
    while True:
        delta = len(a) - len(b)
        r = _prem_int(a, b)
        if not r:
            return _primitive_list(b)
        if len(r) == 1:
            return [1]
        a = b
        div = g * h**delta
        b = [c // div for c in r]
        g = a[-1]
        h = g**delta // h ** (delta - 1) if delta else h


def _integer_coeffs(p: Poly) -> list:
    den = common_denominator(p.coeffs)
    return [int(c * den) for c in p.coeffs]


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q, via a subresultant remainder sequence over Z."""
    if p.is_zero() and q.is_zero():
        raise ZeroPolynomialError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    return Poly(_gcd_int_lists(_integer_coeffs(p), _integer_coeffs(q))).monic()


def gcd_degree(p: Poly, q: Poly) -> int:
    if p.is_zero() and q.is_zero():
        raise ZeroPolynomialError("gcd(0, 0) is undefined")
    if p.is_zero() or q.is_zero():
        return (q if p.is_zero() else p).degree
    return len(_gcd_int_lists(_integer_coeffs(p), _integer_coeffs(q))) - 1


def is_root(p: Poly, x: Rational) -> bool:
    """Exact root test; rational points are evaluated homogeneously over Z."""
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    acc = 0
    dpow = 1
    for c in reversed(_integer_coeffs(p)):
        acc = acc * num + c * dpow
        dpow *= den
    return acc == 0


def squarefree_part(p: Poly) -> Poly:
    if p.is_zero():
        raise ZeroPolynomialError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return Poly([1])
    g = poly_gcd(p, p.derivative())
    quot, rem = divmod(p, g)
    assert rem.is_zero()
    return quot.monic()


# Fast certificates: over Z, a common factor of f and g (or a repeated factor
# of f) survives reduction mod P whenever P does not divide lc(f).  So a
# trivial gcd mod P proves a trivial gcd over Q; otherwise fall back to the
# exact remainder sequence.
_P = (1 << 61) - 1


def _gcd_degree_mod(a: list, b: list, prime: int = _P) -> int:
    a = [c % prime for c in a]
    b = [c % prime for c in b]
    for lst in (a, b):
        while lst and lst[-1] == 0:
            lst.pop()
    while b:
        inv = pow(b[-1], -1, prime)
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            f = a[-1] * inv % prime
            shift = len(a) - 1 - db
            for j, bc in enumerate(b):
                a[shift + j] = (a[shift + j] - f * bc) % prime
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) - 1


def coprime(p: Poly, q: Poly) -> bool:
    if p.is_zero() or q.is_zero():
        return (q if p.is_zero() else p).degree == 0
    a, b = _integer_coeffs(p), _integer_coeffs(q)
    if a[-1] % _P and _gcd_degree_mod(a, b) == 0:
        return True
    return len(_gcd_int_lists(a, b)) == 1


def distinct_root_count(p: Poly) -> int:
    """Number of distinct complex roots of a nonzero polynomial."""
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial vanishes everywhere")
    if p.degree == 0:
        return 0
    dp = p.derivative()
    if coprime(p, dp):
        return p.degree
    return p.degree - gcd_degree(p, dp)


def strip_rational_root(p: Poly, x: Rational) -> tuple[Poly, int]:
    """Divide out (t - x) as often as it divides p; returns (quotient, multiplicity)."""
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    coeffs = _integer_coeffs(p)
    mult = 0
    while len(coeffs) > 1:
        q = _divide_linear(coeffs, num, den)
        if q is None:
            break
        coeffs = q
        mult += 1
    return Poly(coeffs), mult


def _divide_linear(coeffs: list, num: int, den: int) -> list | None:
    """Exact quotient of an integer list by (den t - num), or None."""
    n = len(coeffs) - 1
    q = [0] * n
    r = coeffs[n]
    for i in range(n - 1, -1, -1):
        if r % den:
            return None
        q[i] = r // den
        r = coeffs[i] + q[i] * num
    return q if r == 0 else None


# ---------------------------------------------------------------------------
# bivariate


class BiPoly:
    """Sparse polynomial in (s, t); ``terms[(i, j)]`` is the coefficient of s^i t^j."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | Iterable = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        clean = {}
        for key, c in items:
            if c != 0:
                clean[(int(key[0]), int(key[1]))] = _normalize(c)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def linear(cls, c0: Rational, cs: Rational, ct: Rational) -> BiPoly:
        return cls({(0, 0): c0, (1, 0): cs, (0, 1): ct})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self):
        return max((i + j for i, j in self.terms), default=NEG_INF)

    def degree_in(self, var: int):
        return max((key[var] for key in self.terms), default=NEG_INF)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"BiPoly({dict(sorted(self.terms.items()))!r})"

    def __add__(self, other: BiPoly) -> BiPoly:
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BiPoly(out)

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: BiPoly) -> BiPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: c * other for k, c in self.terms.items()})
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def coeffs_in_t(self) -> list[Poly]:
        """Coefficients as polynomials in s, indexed by the power of t."""
        if not self.terms:
            return []
        rows: list[dict] = [dict() for _ in range(self.degree_in(1) + 1)]
        for (i, j), c in self.terms.items():
            rows[j][i] = c
        return [Poly([row.get(i, 0) for i in range(max(row, default=-1) + 1)]) for row in rows]

    def eval_s(self, s: Rational) -> Poly:
        """Specialize the first variable, giving a polynomial in t."""
        if not self.terms:
            return Poly()
        out = [0] * (self.degree_in(1) + 1)
        powers: dict = {}
        for (i, j), c in self.terms.items():
            if i not in powers:
                powers[i] = s**i
            out[j] += c * powers[i]
        return Poly(out)

    def __call__(self, s: Rational, t: Rational) -> Rational:
        return _normalize(sum((c * s**i * t**j for (i, j), c in self.terms.items()), 0))


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows * cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational]], cols: int | None = None) -> QMatrix:
        rows = [tuple(_normalize(Fraction(x)) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> QMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> QMatrix:
        return QMatrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)


def _rref_rows(rows: list[list], cols: int) -> tuple[list[list], list[int]]:
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rref(m: QMatrix) -> tuple[QMatrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    rows, pivots = _rref_rows(m.to_rows(), m.cols)
    return QMatrix.from_rows(rows, m.cols), len(pivots), pivots


def rank_of(vectors: Sequence[Sequence[Rational]]) -> int:
    if not vectors:
        return 0
    return len(_rref_rows([list(v) for v in vectors], len(vectors[0]))[1])


def det_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free Bareiss elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - f * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def sylvester_matrix(f: Sequence, g: Sequence) -> list[list]:
    """Sylvester matrix of coefficient lists given low-to-high (formal degrees)."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return rows


def interpolate(xs: Sequence[Rational], ys: Sequence[Rational]) -> Poly:
    """Exact interpolating polynomial through the points (Newton form)."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = Poly([coef[-1]])
    for i in range(n - 2, -1, -1):
        out = out * Poly([-xs[i], 1]) + coef[i]
    return out


def resultant_in_second_variable(g1: BiPoly, g2: BiPoly) -> Poly:
    """Sylvester resultant of g1, g2 eliminating t, as a polynomial in s.

    Computed by evaluation at integer s, integer Bareiss determinants and
    exact interpolation.  Denominators are cleared first and restored at the
    end, so the result is the true resultant over Q.
    """
    if g1.is_zero() or g2.is_zero():
        raise DegreeZeroInEliminatedVariable("zero input polynomial")
    n1, n2 = g1.degree_in(1), g2.degree_in(1)
    if n1 < 1 or n2 < 1:
        raise DegreeZeroInEliminatedVariable("both inputs need positive degree in t")

    d1 = common_denominator(g1.terms.values())
    d2 = common_denominator(g2.terms.values())
    h1 = g1 * d1 if d1 != 1 else g1
    h2 = g2 * d2 if d2 != 1 else g2

    bound = min(
        h1.total_degree * h2.total_degree,
        n2 * h1.degree_in(0) + n1 * h2.degree_in(0),
    )
    c1 = h1.coeffs_in_t()
    c2 = h2.coeffs_in_t()
    xs = list(range(bound + 1))
    ys = []
    for x in xs:
        f = [c(x) for c in c1]
        g = [c(x) for c in c2]
        ys.append(det_bareiss(sylvester_matrix(f, g)))
    res = interpolate(xs, ys)
    scale = Fraction(d1) ** n2 * Fraction(d2) ** n1
    return res * (1 / scale) if scale != 1 else res
