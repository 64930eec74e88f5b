"""Exact rational polynomials in several variables and the difference calculus on them.

Scalars are :class:`fractions.Fraction`.  Polynomials are sparse maps from
exponent tuples to nonzero coefficients; variables are positional.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Exps = Tuple[int, ...]
Scalar = Union[int, Fraction]

DEFAULT_NAMES = ("x", "y", "z", "w")


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused so that nothing inexact slips into a computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def rising(value, n: int):
    """Upper factorial ``value (value+1) ... (value+n-1)`` of a scalar.

    Works for ints, Fractions and :class:`MultiPoly` alike; ``n = 0`` gives 1.
    """
    if n < 0:
        raise ValueError(f"upper factorial needs n >= 0, got {n}")
    result = 1
    for i in range(n):
        result = result * (value + i)
    return result


def falling(value, k: int):
    """Lower factorial ``value (value-1) ... (value-k+1)``."""
    if k < 0:
        raise ValueError(f"lower factorial needs k >= 0, got {k}")
    result = 1
    for i in range(k):
        result = result * (value - i)
    return result


def binom_vec(n: Sequence[int], k: Sequence[int]) -> int:
    from math import comb

    out = 1
    for ni, ki in zip(n, k):
        out *= comb(ni, ki)
    return out


def factorial_vec(n: Sequence[int]) -> int:
    out = 1
    for ni in n:
        out *= factorial(ni)
    return out


def box(extent: Sequence[int]) -> Iterator[Exps]:
    """All index vectors ``k`` with ``0 <= k <= extent`` componentwise, graded order."""
    from itertools import product

    pts = list(product(*(range(e + 1) for e in extent)))
    pts.sort(key=lambda k: (sum(k), k))
    return iter(pts)


def precedes(k: Sequence[int], n: Sequence[int]) -> bool:
    """Product order ``k <= n``."""
    return all(a <= b for a, b in zip(k, n))


def graded_lex_key(exps: Exps):
    # descending total degree, then descending lex
    return (-sum(exps), tuple(-e for e in exps))


class MultiPoly:
    """Immutable sparse polynomial with Fraction coefficients in ``arity`` variables."""

    __slots__ = ("arity", "_terms", "_hash")

    def __init__(self, arity: int, terms: Mapping[Exps, Scalar] | None = None):
        if arity < 0:
            raise ValueError("arity must be non-negative")
        clean: Dict[Exps, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity:
                raise ValueError(f"exponent vector {exps} does not have length {arity}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = as_fraction(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self.arity = arity
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, value, arity: int) -> "MultiPoly":
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls(arity)

    @classmethod
    def var(cls, index: int, arity: int) -> "MultiPoly":
        if not 0 <= index < arity:
            raise ValueError(f"variable index {index} out of range for arity {arity}")
        exps = [0] * arity
        exps[index] = 1
        return cls(arity, {tuple(exps): 1})

    @classmethod
    def _raw(cls, arity: int, terms: Dict[Exps, Fraction]) -> "MultiPoly":
        p = cls.__new__(cls)
        p.arity = arity
        p._terms = terms
        p._hash = None
        return p

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> Dict[Exps, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def degree_in(self, var_index: int) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        return max((e[var_index] for e in self._terms), default=-1)

    def coordinate_degree(self) -> Exps:
        return tuple(self.degree_in(v) for v in range(self.arity))

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: graded_lex_key(kv[0]))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.arity != self.arity:
                raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
            return other
        return MultiPoly.constant(as_fraction(other), self.arity)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = as_fraction(other)
            if not c:
                return MultiPoly.zero(self.arity)
            return MultiPoly._raw(self.arity, {e: v * c for e, v in self._terms.items()})
        other = self._coerce(other)
        out: Dict[Exps, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.arity, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = as_fraction(other)
        if not c:
            raise ZeroDivisionError("polynomial divided by zero")
        return self * (1 / c)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self.arity)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self._terms == other._terms
        try:
            c = as_fraction(other)
        except TypeError:
            return NotImplemented
        return self._terms == ({(0,) * self.arity: c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self._terms.items())))
        return self._hash

    def __call__(self, *point):
        return evaluate(self, point)

    def __repr__(self):
        return f"MultiPoly({self.arity}, {to_text(self)!r})"

    def __str__(self):
        return to_text(self)


# -- operators ---------------------------------------------------------------

def _check_var(var_index: int, arity: int) -> None:
    if not 0 <= var_index < arity:
        raise ValueError(f"variable index {var_index} out of range for arity {arity}")


def upper_factorial(var_index: int, n: int, arity: int) -> MultiPoly:
    """``x_v (x_v + 1) ... (x_v + n - 1)`` as a polynomial in ``arity`` variables."""
    if n < 0:
        raise ValueError(f"upper factorial needs n >= 0, got {n}")
    _check_var(var_index, arity)
    out = MultiPoly.constant(1, arity)
    x = MultiPoly.var(var_index, arity)
    for i in range(n):
        out = out * (x + i)
    return out


def upper_factorial_monomial(k: Sequence[int]) -> MultiPoly:
    """Product ``prod_v x_v^{(k_v)}``."""
    arity = len(k)
    out = MultiPoly.constant(1, arity)
    for v, kv in enumerate(k):
        if kv:
            out = out * upper_factorial(v, kv, arity)
    return out


def _binomial_row(e: int):
    from math import comb

    return [comb(e, j) for j in range(e + 1)]


def shift(p: MultiPoly, var_index: int, amount) -> MultiPoly:
    """Substitute ``x_v -> x_v + amount`` and expand."""
    _check_var(var_index, p.arity)
    amount = as_fraction(amount)
    if not amount:
        return p
    out: Dict[Exps, Fraction] = {}
    for exps, c in p.items():
        e = exps[var_index]
        row = _binomial_row(e)
        for j in range(e + 1):
            # C(e, j) x^j amount^(e-j)
            term = c * row[j] * amount ** (e - j)
            new = exps[:var_index] + (j,) + exps[var_index + 1:]
            out[new] = out.get(new, 0) + term
    return MultiPoly._raw(p.arity, {e: c for e, c in out.items() if c})


def shift_vec(p: MultiPoly, amounts: Sequence) -> MultiPoly:
    for v, a in enumerate(amounts):
        p = shift(p, v, a)
    return p


def delta(p: MultiPoly, var_index: int) -> MultiPoly:
    """Backward difference ``p(x) - p(x with x_v -> x_v - 1)``."""
    return p - shift(p, var_index, -1)


def mixed_delta(p: MultiPoly, orders: Sequence[int]) -> MultiPoly:
    if len(orders) != p.arity:
        raise ValueError(f"orders has length {len(orders)}, polynomial arity is {p.arity}")
    for v, k in enumerate(orders):
        if k < 0:
            raise ValueError("difference orders must be non-negative")
        for _ in range(k):
            if not p:
                return p
            p = delta(p, v)
    return p


def evaluate(p: MultiPoly, point: Sequence) -> Fraction:
    """Exact value of ``p`` at ``point`` (Horner would not pay off for sparse terms)."""
    if len(point) != p.arity:
        raise ValueError(f"point has {len(point)} coordinates, polynomial arity is {p.arity}")
    pt = [as_fraction(v) for v in point]
    total = Fraction(0)
    for exps, c in p.items():
        term = c
        for v, e in zip(pt, exps):
            if e:
                term *= v ** e
        total += term
    return total


def to_upper_factorial_basis(p: MultiPoly) -> Dict[Exps, Fraction]:
    """Coefficients ``c_k`` with ``p = sum_k c_k prod_v x_v^{(k_v)}``.

    Uses the Newton-type formula ``c_k = (Delta^k p)(0) / k!`` which is exact
    because ``Delta x^{(n)} = n x^{(n-1)}`` and ``0^{(n)} = 0`` for ``n >= 1``.
    """
    out: Dict[Exps, Fraction] = {}
    zero = (0,) * p.arity
    for k in box(p.coordinate_degree() if p else zero):
        c = evaluate(mixed_delta(p, k), zero) / factorial_vec(k)
        if c:
            out[k] = c
    return dict(sorted(out.items(), key=lambda kv: graded_lex_key(kv[0])))


def from_upper_factorial_basis(coeffs: Mapping[Exps, Scalar], arity: int) -> MultiPoly:
    out = MultiPoly.zero(arity)
    for k, c in coeffs.items():
        out = out + upper_factorial_monomial(k) * as_fraction(c)
    return out


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant of a square matrix by rational Gaussian elimination."""
    a = [[as_fraction(v) for v in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        pv = a[col][col]
        result *= pv
        for r in range(col + 1, n):
            f = a[r][col] / pv
            if f:
                row_r, row_c = a[r], a[col]
                for j in range(col + 1, n):
                    row_r[j] -= f * row_c[j]
    return sign * result


# -- truncated power series --------------------------------------------------

class TruncatedSeries:
    """Power series in ``arity`` formal variables, box-truncated at ``order``.

    Coefficients may be Fractions or MultiPoly values; anything supporting
    ``+``, ``*`` and truthiness works.
    """

    __slots__ = ("arity", "order", "terms")

    def __init__(self, arity: int, order: int, terms: Mapping[Exps, object] | None = None):
        if order < 1:
            raise ValueError("series order must be at least 1")
        self.arity = arity
        self.order = order
        self.terms = {
            tuple(e): c for e, c in (terms or {}).items() if c and all(x < order for x in e)
        }

    @classmethod
    def one(cls, arity: int, order: int) -> "TruncatedSeries":
        return cls(arity, order, {(0,) * arity: Fraction(1)})

    def _check(self, other: "TruncatedSeries"):
        if (self.arity, self.order) != (other.arity, other.order):
            raise ValueError("series shapes differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return TruncatedSeries(self.arity, self.order, out)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.arity, self.order, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: Dict[Exps, object] = {}
        k = self.order
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if any(x >= k for x in e):
                    continue
                prod = c1 * c2
                out[e] = out[e] + prod if e in out else prod
        return TruncatedSeries(self.arity, self.order, out)

    def scale(self, coefficient) -> "TruncatedSeries":
        return TruncatedSeries(self.arity, self.order, {e: coefficient * c for e, c in self.terms.items()})

    def monomial_shift(self, exps: Sequence[int]) -> "TruncatedSeries":
        """Multiply by ``s^exps``."""
        return TruncatedSeries(
            self.arity,
            self.order,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.arity, self.order) == (other.arity, other.order) and self.terms == other.terms

    def __repr__(self):
        return f"TruncatedSeries(arity={self.arity}, order={self.order}, terms={self.terms!r})"


def series_inv_pow(x_value, order: int, var_index: int = 0, arity: int = 1) -> TruncatedSeries:
    """Truncation of ``(1 - s_v)^(-x_value) = sum_m x_value^{(m)} s_v^m / m!``.

    ``x_value`` may be a scalar or a MultiPoly (for a symbolic exponent).
    """
    if order < 1:
        raise ValueError("series order must be at least 1")
    _check_var(var_index, arity)
    if not isinstance(x_value, MultiPoly):
        x_value = as_fraction(x_value)
    terms = {}
    coef = Fraction(1) if not isinstance(x_value, MultiPoly) else MultiPoly.constant(1, x_value.arity)
    for m in range(order):
        e = [0] * arity
        e[var_index] = m
        terms[tuple(e)] = coef
        coef = coef * (x_value + m) * Fraction(1, m + 1)
    return TruncatedSeries(arity, order, terms)


# -- text and JSON formats ---------------------------------------------------

def default_names(arity: int) -> Tuple[str, ...]:
    if arity <= len(DEFAULT_NAMES):
        return DEFAULT_NAMES[:arity]
    return tuple(f"x{i}" for i in range(arity))


def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join_terms(pieces) -> str:
    if not pieces:
        return "0"
    out = []
    for i, (c, factors) in enumerate(pieces):
        neg = c < 0
        a = -c if neg else c
        body = " * ".join(([_fmt_frac(a)] if (a != 1 or not factors) else []) + factors)
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def to_text(p: MultiPoly, names: Sequence[str] | None = None) -> str:
    """``c * x^e * y^f + ...`` in graded-lex order; unit coefficients are elided."""
    names = names or default_names(p.arity)
    pieces = []
    for exps, c in p.sorted_terms():
        factors = [names[v] if e == 1 else f"{names[v]}^{e}" for v, e in enumerate(exps) if e]
        pieces.append((c, factors))
    return _join_terms(pieces)


def upper_basis_text(coeffs: Mapping[Exps, Fraction], arity: int, names: Sequence[str] | None = None) -> str:
    names = names or default_names(arity)
    pieces = []
    for k, c in sorted(coeffs.items(), key=lambda kv: graded_lex_key(kv[0])):
        factors = [f"{names[v]}^({e})" for v, e in enumerate(k) if e]
        pieces.append((c, factors))
    return _join_terms(pieces)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str, names: Sequence[str]) -> MultiPoly:
    """Parse the text form written by :func:`to_text`.

    Raises ValueError whose message carries the character offset of the problem.
    """
    arity = len(names)
    index = {n: i for i, n in enumerate(names)}
    index.update({f"x{i}": i for i in range(arity)})
    src = text.strip()
    if src == "0":
        return MultiPoly.zero(arity)
    terms: Dict[Exps, Fraction] = {}
    pos = 0
    first = True
    while pos < len(src):
        m = _TERM_RE.match(src, pos)
        if not m or (m.group(1) is None and not first):
            raise ValueError(f"unexpected input at position {pos}: {src[pos:pos + 10]!r}")
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2)
        coef = Fraction(1)
        exps = [0] * arity
        offset = m.start(2)
        for factor in body.split("*"):
            f = factor.strip()
            if not f:
                raise ValueError(f"empty factor at position {offset}")
            if "^" in f:
                name, _, e = f.partition("^")
                name = name.strip()
                try:
                    e = int(e)
                except ValueError:
                    raise ValueError(f"bad exponent {e!r} at position {offset}") from None
            else:
                name, e = f, 1
            if name in index:
                exps[index[name]] += e
            else:
                try:
                    coef *= Fraction(f)
                except (ValueError, ZeroDivisionError):
                    raise ValueError(f"unknown symbol {f!r} at position {offset}") from None
            offset += len(factor) + 1
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + sign * coef
        pos = m.end()
        first = False
    return MultiPoly(arity, terms)


def poly_to_json(p: MultiPoly) -> list:
    return [
        {"exps": list(e), "num": str(c.numerator), "den": str(c.denominator)}
        for e, c in p.sorted_terms()
    ]


def poly_from_json(data: Iterable[Mapping], arity: int | None = None) -> MultiPoly:
    data = list(data)
    if arity is None:
        if not data:
            raise ValueError("cannot infer arity of an empty polynomial")
        arity = len(data[0]["exps"])
    return MultiPoly(arity, {tuple(t["exps"]): Fraction(int(t["num"]), int(t["den"])) for t in data})


def dumps_poly(p: MultiPoly) -> str:
    return json.dumps(poly_to_json(p))
