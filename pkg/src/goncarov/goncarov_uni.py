"""Univariate difference Goncarov polynomials.

``g_n(x; a_0, ..., a_{n-1})`` is the degree-n polynomial with
``(Delta^s g_n)(a_s) = n! [s == n]`` for ``0 <= s <= n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, List, Mapping, Sequence, Tuple

from .exact_poly import (
    MultiPoly,
    TruncatedSeries,
    as_fraction,
    delta,
    det,
    evaluate,
    rising,
    series_inv_pow,
    shift,
    to_upper_factorial_basis,
    upper_factorial,
)

X = MultiPoly.var(0, 1)
ONE = MultiPoly.constant(1, 1)


@dataclass(frozen=True)
class GoncarovPolyUni:
    degree: int
    nodes: Tuple[Fraction, ...]
    poly: MultiPoly

    def __call__(self, x) -> Fraction:
        return evaluate(self.poly, (x,))


def _nodes(nodes: Sequence, n: int) -> Tuple[Fraction, ...]:
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    if len(nodes) < n:
        raise ValueError(f"need at least {n} nodes, got {len(nodes)}")
    return tuple(as_fraction(a) for a in nodes)


def goncarov_ladder(nodes: Sequence, n: int) -> List[MultiPoly]:
    """``[g_0, ..., g_n]`` from the linear recursion, solved bottom-up.

    ``x^{(k)} = sum_{i<=k} C(k,i) a_i^{(k-i)} g_i`` rearranged for ``g_k``.
    """
    a = _nodes(nodes, n)
    ladder: List[MultiPoly] = []
    for k in range(n + 1):
        g = upper_factorial(0, k, 1)
        for i in range(k):
            c = comb(k, i) * rising(a[i], k - i)
            if c:
                g = g - ladder[i] * c
        ladder.append(g)
    return ladder


def goncarov_uni_recursion(nodes: Sequence, n: int) -> GoncarovPolyUni:
    a = _nodes(nodes, n)
    return GoncarovPolyUni(n, a[:n], goncarov_ladder(a, n)[n])


def determinant_matrix(nodes: Sequence, n: int) -> List[list]:
    """Rows ``0..n-1`` hold ``a_i^{(j-i)}/(j-i)!``; row ``n`` holds ``x^{(j)}/j!``."""
    a = _nodes(nodes, n)
    rows: List[list] = []
    for i in range(n):
        rows.append([rising(a[i], j - i) / Fraction(factorial(j - i)) if j >= i else Fraction(0)
                     for j in range(n + 1)])
    rows.append([upper_factorial(0, j, 1) / factorial(j) for j in range(n + 1)])
    return rows


def goncarov_uni_determinant(nodes: Sequence, n: int) -> GoncarovPolyUni:
    """``n! det M`` expanded along the polynomial row; every minor is a rational determinant."""
    a = _nodes(nodes, n)
    m = determinant_matrix(a, n)
    top = m[:n]
    poly = MultiPoly.zero(1)
    for j in range(n + 1):
        minor = [row[:j] + row[j + 1:] for row in top]
        cof = det(minor) if n else Fraction(1)
        if cof:
            sign = -1 if (n + j) % 2 else 1
            poly = poly + m[n][j] * (sign * cof)
    return GoncarovPolyUni(n, a[:n], poly * factorial(n))


def abel_uni_closed_form(a, b, n: int) -> MultiPoly:
    """``g_n(x; a, a+b, ..., a+(n-1)b) = (x-a)(x-a-nb+1)^{(n-1)}``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ONE
    a, b = as_fraction(a), as_fraction(b)
    return (X - a) * rising(X - a - n * b + 1, n - 1)


def arithmetic_nodes(a, b, n: int) -> List[Fraction]:
    """Nodes ``a + i b`` for ``i = 0..n-1`` (zero-based: the first node is ``a``)."""
    a, b = as_fraction(a), as_fraction(b)
    return [a + i * b for i in range(n)]


def lattice_path_count(bounds: Sequence[int], n: int | None = None) -> int:
    """Non-decreasing ``(x_0..x_{n-1})`` with ``0 <= x_i < bounds[i]``, via ``g_n(0; -bounds)/n!``."""
    if n is None:
        n = len(bounds)
    if len(bounds) < n:
        raise ValueError(f"need {n} bounds, got {len(bounds)}")
    bounds = list(bounds[:n])
    for b in bounds:
        if isinstance(b, bool) or int(b) != b or b < 1:
            raise ValueError(f"bounds must be positive integers, got {b!r}")
    if any(x > y for x, y in zip(bounds, bounds[1:])):
        raise ValueError(f"bounds must be non-decreasing, got {bounds}")
    value = goncarov_value(0, [-b for b in bounds], n) / factorial(n)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"count {value} is not a non-negative integer; bounds {bounds}")
    return int(value)


def goncarov_value(x, nodes: Sequence, n: int) -> Fraction:
    """``g_n(x; nodes)`` by the linear recursion run on values instead of polynomials."""
    a = _nodes(nodes, n)
    x = as_fraction(x)
    vals: List[Fraction] = []
    for k in range(n + 1):
        v = rising(x, k)
        for i in range(k):
            v -= comb(k, i) * rising(a[i], k - i) * vals[i]
        vals.append(Fraction(v))
    return vals[n]


# -- identity predicates -----------------------------------------------------

def _g(nodes, n):
    return goncarov_ladder(nodes, n)[n]


def check_biorthogonality(poly: MultiPoly, nodes: Sequence, n: int) -> bool:
    a = _nodes(nodes, n)
    p = poly
    for s in range(n + 1):
        want = factorial(n) if s == n else 0
        at = a[s] if s < n else Fraction(0)
        # the s = n condition is a constant, so the node is irrelevant
        if evaluate(p, (at,)) != want:
            return False
        p = delta(p, 0)
    return not p


def _expansion(nodes, n, aux):
    probe: MultiPoly = aux["probe"]
    if probe.degree_in(0) > n:
        raise ValueError("probe degree exceeds n")
    ladder = goncarov_ladder(nodes, n)
    # Delta^n probe is constant, so the n-th node never matters
    a = _nodes(nodes, n) + (Fraction(0),)
    rhs = MultiPoly.zero(1)
    p = probe
    for i in range(n + 1):
        rhs = rhs + ladder[i] * (evaluate(p, (a[i],)) / factorial(i))
        p = delta(p, 0)
    return rhs == probe


def _appell(nodes, n, aux):
    # coefficients of t^k are polynomials in x; compare them symbolically
    order = aux.get("order", 5)
    a = _nodes(nodes, order)
    ladder = goncarov_ladder(a, order - 1)
    lhs = series_inv_pow(X, order)
    rhs = TruncatedSeries(1, order)
    for k in range(order):
        term = series_inv_pow(a[k], order).monomial_shift((k,)).scale(ladder[k] / factorial(k))
        rhs = rhs + term
    return lhs == rhs


def difference_factor_holds(nodes, n: int, factor: Callable[[int], int]) -> bool:
    """``Delta g_n(x; a_0..) == factor(n) * g_{n-1}(x; a_1..)``."""
    a = _nodes(nodes, n)
    if n == 0:
        return not delta(ONE, 0)
    return delta(_g(a, n), 0) == _g(a[1:], n - 1) * factor(n)


def _difference(nodes, n, aux):
    a = _nodes(nodes, n)
    anchored = evaluate(_g(a, n), (a[0] if n else Fraction(0),)) == (1 if n == 0 else 0)
    return anchored and difference_factor_holds(a, n, lambda k: k)


def _shift(nodes, n, aux):
    t = as_fraction(aux.get("t", 1))
    a = _nodes(nodes, n)
    moved = _g([ai + t for ai in a[:n]], n)
    return shift(moved, 0, t) == _g(a, n)


def _perturbation(nodes, n, aux):
    m = aux["m"]
    eps = as_fraction(aux["delta"])
    a = list(_nodes(nodes, n))
    if not 0 <= m < n:
        raise ValueError("perturbation index must satisfy 0 <= m < n")
    bumped = a[:n]
    bumped[m] = a[m] + eps
    lhs = _g(bumped, n)
    corr = comb(n, m) * goncarov_value(a[m] + eps, a[m:n], n - m)
    return lhs == _g(a, n) - _g(a, m) * corr


def _sheffer(nodes, n, aux):
    y = as_fraction(aux.get("y", 0))
    a = _nodes(nodes, n)
    lhs = shift(_g(a, n), 0, y)
    rhs = MultiPoly.zero(1)
    for i in range(n + 1):
        rhs = rhs + upper_factorial(0, i, 1) * (comb(n, i) * goncarov_value(y, a[i:n], n - i))
    if lhs != rhs:
        return False
    if y == 0:
        basis = to_upper_factorial_basis(lhs)
        return all(basis.get((i,), 0) == comb(n, i) * goncarov_value(0, a[i:n], n - i) for i in range(n + 1))
    return True


IDENTITIES: Dict[str, Callable] = {
    "expansion": _expansion,
    "appell": _appell,
    "difference": _difference,
    "shift": _shift,
    "perturbation": _perturbation,
    "sheffer": _sheffer,
}


def verify_identity_uni(which: str, nodes: Sequence, n: int, aux: Mapping | None = None) -> bool:
    """True iff the named identity holds exactly for these nodes and degree.

    ``aux`` keys by identity: expansion ``probe``; appell ``order``; shift ``t``;
    perturbation ``m`` and ``delta``; sheffer ``y``.
    """
    try:
        fn = IDENTITIES[which]
    except KeyError:
        raise ValueError(f"unknown identity {which!r}; choose from {sorted(IDENTITIES)}") from None
    return fn(nodes, n, dict(aux or {}))

