"""Exact sparse arithmetic in two variables over arbitrary-precision rationals.

A polynomial is a dict mapping exponent pairs ``(i, j)`` -- the powers of
``x`` and ``y`` -- to nonzero ``Fraction`` coefficients.  ``x`` exponents are
always >= 0; ``y`` exponents may be negative (several transfer-matrix entries
need ``1/y`` and ``1/y**2``).  The zero polynomial is the empty dict.  No
floating point is used anywhere.

On top of that the module provides rational generating functions (numerator /
denominator pairs), power-series coefficient extraction, cross-multiplication
equality, and a fraction-free (Bareiss) solver for systems ``t = b + x*M*t``
with polynomial entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionLimitError, SingularSystemError

Key = tuple[int, int]

_MAX_DIV_STEPS = 200_000  # backstop against a non-exact division looping


def _coerce(value: int | Fraction) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class LaurentPoly2:
    """Sparse polynomial in x (exponent >= 0) and y (any integer exponent)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, int | Fraction] | None = None):
        clean: dict[Key, Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0:
                    raise ValueError(f"x exponent must be >= 0, got {i}")
                c = _coerce(c)
                if c:
                    clean[(int(i), int(j))] = c
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict[Key, Fraction]) -> "LaurentPoly2":
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return _ZERO

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return _ONE

    @classmethod
    def const(cls, c: int | Fraction) -> "LaurentPoly2":
        c = _coerce(c)
        return cls._raw({(0, 0): c}) if c else _ZERO

    @classmethod
    def x(cls) -> "LaurentPoly2":
        return _X

    @classmethod
    def y(cls) -> "LaurentPoly2":
        return _Y

    @classmethod
    def monomial(cls, i: int, j: int, c: int | Fraction = 1) -> "LaurentPoly2":
        if i < 0:
            raise ValueError(f"x exponent must be >= 0, got {i}")
        c = _coerce(c)
        return cls._raw({(i, j): c}) if c else _ZERO

    @property
    def terms(self) -> dict[Key, Fraction]:
        """Copy of the term map."""
        return dict(self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly2):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentPoly2.const(other)._terms
        return NotImplemented

    __hash__ = None  # mutable-looking container; equality is by term map

    def __repr__(self) -> str:
        from .polytext import format_poly

        return f"LaurentPoly2[{format_poly(self)}]"

    __str__ = __repr__

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "LaurentPoly2":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly2.const(other)
        elif not isinstance(other, LaurentPoly2):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                del out[k]
        return LaurentPoly2._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly2":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly2.const(other)
        elif not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly2":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly2":
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            if not c:
                return _ZERO
            return LaurentPoly2._raw({k: v * c for k, v in self._terms.items()})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Key, Fraction] = {}
        for (i1, j1), c1 in a.items():
            for (i2, j2), c2 in b.items():
                key = (i1 + i2, j1 + j2)
                s = out.get(key)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return LaurentPoly2._raw(out)

    __rmul__ = __mul__

    def _square(self) -> "LaurentPoly2":
        # symmetric product: half the multiplications of a general multiply
        items = list(self._terms.items())
        out: dict[Key, Fraction] = {}
        get = out.get
        for idx, ((i1, j1), c1) in enumerate(items):
            key = (i1 + i1, j1 + j1)
            term = c1 * c1
            s = get(key)
            s = term if s is None else s + term
            if s:
                out[key] = s
            else:
                del out[key]
            for pos in range(idx + 1, len(items)):
                (i2, j2), c2 = items[pos]
                key = (i1 + i2, j1 + j2)
                term = c1 * c2
                term = term + term
                s = get(key)
                s = term if s is None else s + term
                if s:
                    out[key] = s
                else:
                    del out[key]
        return LaurentPoly2._raw(out)

    def __pow__(self, e: int) -> "LaurentPoly2":
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be an integer >= 0, got {e!r}")
        result = _ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base._square()
        return result

    def shift_y(self, d: int) -> "LaurentPoly2":
        """Multiply by y**d (d may be negative)."""
        if d == 0:
            return self
        return LaurentPoly2._raw({(i, j + d): c for (i, j), c in self._terms.items()})

    def derivative_y(self) -> "LaurentPoly2":
        out = {}
        for (i, j), c in self._terms.items():
            if j:
                out[(i, j - 1)] = c * j
        return LaurentPoly2._raw(out)

    def evaluate(self, x_value: int | Fraction, y_value: int | Fraction) -> Fraction:
        """Exact evaluation; rejects y=0 when negative y exponents are present."""
        x0 = _coerce(x_value)
        y0 = _coerce(y_value)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            if j < 0 and y0 == 0:
                raise ZeroDivisionError("evaluation at y=0 with a negative y exponent")
            total += c * x0**i * y0**j
        return total

    # -- shape queries -----------------------------------------------------

    def x_degree(self) -> int:
        """Largest x exponent, or -1 for the zero polynomial."""
        return max((i for i, _ in self._terms), default=-1)

    def x_coefficient(self, i: int) -> "LaurentPoly2":
        """The coefficient of x**i, as a polynomial in y alone."""
        return LaurentPoly2._raw(
            {(0, j): c for (ii, j), c in self._terms.items() if ii == i}
        )

    def min_y_exponent(self) -> int | None:
        return min((j for _, j in self._terms), default=None)

    def max_y_exponent(self) -> int | None:
        return max((j for _, j in self._terms), default=None)

    def total_degree(self) -> int | None:
        return max((i + j for i, j in self._terms), default=None)

    def has_x(self) -> bool:
        return any(i for i, _ in self._terms)


_ZERO = LaurentPoly2._raw({})
_ONE = LaurentPoly2._raw({(0, 0): Fraction(1)})
_X = LaurentPoly2._raw({(1, 0): Fraction(1)})
_Y = LaurentPoly2._raw({(0, 1): Fraction(1)})


@dataclass(frozen=True, eq=False)
class RationalGF:
    """A generating function num/den.  Never reduced; compare with gf_equal."""

    num: LaurentPoly2
    den: LaurentPoly2

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator in RationalGF")

    def __repr__(self) -> str:
        return f"RationalGF(({self.num!r}) / ({self.den!r}))"


def gf_equal(a: RationalGF, b: RationalGF) -> bool:
    """Equality by cross-multiplication: a.num*b.den == b.num*a.den."""
    return a.num * b.den == b.num * a.den


def series_expand(gf: RationalGF, n_max: int) -> list[LaurentPoly2]:
    """Coefficients of x**0 .. x**n_max of num/den, each a polynomial in y.

    Requires the x**0 coefficient of the denominator to be the constant 1;
    the coefficients then satisfy c_n = p_n - sum_{i>=1} q_i * c_{n-i}.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if gf.den.x_coefficient(0) != _ONE:
        raise ValueError("series_expand requires [x^0] den == 1; normalize first")
    q = [gf.den.x_coefficient(i) for i in range(1, gf.den.x_degree() + 1)]
    coeffs: list[LaurentPoly2] = []
    for n in range(n_max + 1):
        c = gf.num.x_coefficient(n)
        for i, qi in enumerate(q, start=1):
            if i > n:
                break
            if qi:
                c = c - qi * coeffs[n - i]
        coeffs.append(c)
    return coeffs


def scale_to_unit_constant(gf: RationalGF) -> RationalGF:
    """Divide num and den by the constant [x^0] den (which must be a nonzero
    rational constant) so that series_expand's precondition holds."""
    c0 = gf.den.x_coefficient(0)
    terms = c0._terms
    if list(terms) != [(0, 0)]:
        raise ValueError("[x^0] den is not a nonzero constant")
    inv = 1 / terms[(0, 0)]
    return RationalGF(gf.num * inv, gf.den * inv)


# -- fraction-free linear solving -------------------------------------------


def _div_exact(a: LaurentPoly2, b: LaurentPoly2) -> LaurentPoly2:
    """Exact division a/b in the polynomial ring; error if not exact.

    Leading terms are taken in lexicographic (x, y) order, which is
    compatible with multiplication, so for an exact division every emitted
    quotient term is a term of the true quotient and the loop terminates.
    """
    if b is _ONE or b == _ONE:
        return a
    if a.is_zero():
        return a
    bt = b._terms
    if not bt:
        raise ZeroDivisionError("polynomial division by zero")
    blead = max(bt)
    bcoeff = bt[blead]
    rem = dict(a._terms)
    quot: dict[Key, Fraction] = {}
    steps = 0
    while rem:
        steps += 1
        if steps > _MAX_DIV_STEPS:
            raise ArithmeticError("polynomial division did not terminate (not exact?)")
        rlead = max(rem)
        qi = rlead[0] - blead[0]
        qj = rlead[1] - blead[1]
        if qi < 0:
            raise ArithmeticError("polynomial division is not exact")
        qc = rem[rlead] / bcoeff
        quot[(qi, qj)] = qc
        for (bi, bj), bc in bt.items():
            key = (bi + qi, bj + qj)
            s = rem.get(key, Fraction(0)) - qc * bc
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    return LaurentPoly2._raw(quot)


def _pivot_key(p: LaurentPoly2):
    # lowest total degree first, then a deterministic term-map order
    return (p.total_degree(), tuple(sorted(p._terms.items())))


def _bareiss_det(matrix: list[list[LaurentPoly2]]) -> LaurentPoly2:
    """Determinant by fraction-free one-step elimination with pivoting."""
    n = len(matrix)
    m = [row[:] for row in matrix]
    sign = 1
    prev = _ONE
    for col in range(n - 1):
        candidates = [r for r in range(col, n) if m[r][col]]
        if not candidates:
            return _ZERO
        pivot_row = min(candidates, key=lambda r: _pivot_key(m[r][col]))
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        pivot = m[col][col]
        for r in range(col + 1, n):
            mr = m[r]
            mrc = mr[col]
            for c in range(col + 1, n):
                mr[c] = _div_exact(pivot * mr[c] - mrc * m[col][c], prev)
            mr[col] = _ZERO
        prev = pivot
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def bareiss_solve(
    matrix: Sequence[Sequence[LaurentPoly2]],
    rhs: Sequence[LaurentPoly2],
    max_dim: int = 12,
) -> list[RationalGF]:
    """Solve t = b + x*M*t exactly, i.e. (I - x*M) t = b.

    M's entries and b must be polynomials in y alone.  Rows with negative y
    exponents are cleared by a power of y first (this rescales every Cramer
    determinant identically, so the solutions are unchanged).  Each entry of
    the result shares the common denominator det(I - x*M) up to that y-power.
    """
    n = len(matrix)
    if n == 0:
        return []
    if n > max_dim:
        raise DimensionLimitError(f"system dimension {n} exceeds limit {max_dim}")
    if len(rhs) != n or any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square and match the rhs length")
    for row in matrix:
        for entry in row:
            if entry.has_x():
                raise ValueError("matrix entries must be polynomials in y alone")
    x = _X
    a = [
        [
            (LaurentPoly2.const(1 if i == j else 0)) - x * matrix[i][j]
            for j in range(n)
        ]
        for i in range(n)
    ]
    b = [rhs[i] for i in range(n)]
    for i in range(n):
        exps = [p.min_y_exponent() for p in a[i] + [b[i]]]
        low = min((e for e in exps if e is not None), default=0)
        if low < 0:
            a[i] = [p.shift_y(-low) for p in a[i]]
            b[i] = b[i].shift_y(-low)
    den = _bareiss_det(a)
    if den.is_zero():
        raise SingularSystemError("I - x*M is singular")
    solutions = []
    for j in range(n):
        aj = [row[:] for row in a]
        for i in range(n):
            aj[i][j] = b[i]
        solutions.append(RationalGF(_bareiss_det(aj), den))
    return solutions
