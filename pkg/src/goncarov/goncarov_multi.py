"""Multivariate difference Goncarov polynomials on a node grid.

``g_n(x; Z)`` has coordinate degree ``n`` and satisfies
``(Delta^k g_n)(z_k) = n! [k == n]`` for every ``k <= n``.  It is built from the
linear recursion over the box ``{k : k <= n}``; closed forms for linear grids
and the affine counting formulas live here as well.
"""
from __future__ import annotations

import json
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, List, Mapping, Sequence, Tuple

from .exact_poly import (
    Exps,
    MultiPoly,
    TruncatedSeries,
    as_fraction,
    binom_vec,
    box,
    det,
    evaluate,
    factorial_vec,
    falling,
    mixed_delta,
    precedes,
    rising,
    series_inv_pow,
    shift_vec,
    upper_factorial,
    upper_factorial_monomial,
)
from .goncarov_uni import goncarov_ladder

Node = Tuple[Fraction, ...]


def _vec(n: Sequence[int]) -> Exps:
    out = tuple(int(v) for v in n)
    if any(v < 0 for v in out):
        raise ValueError(f"index vector {out} has a negative entry")
    return out


@dataclass(frozen=True)
class NodeGrid:
    """Nodes ``z_k`` in ``F^d`` for every ``k`` in the box below ``extent``."""

    arity: int
    extent: Exps
    nodes: Mapping[Exps, Node] = field(hash=False)

    def __post_init__(self):
        extent = _vec(self.extent)
        if len(extent) != self.arity:
            raise ValueError(f"extent {extent} does not have length {self.arity}")
        clean: Dict[Exps, Node] = {}
        for k in box(extent):
            if k not in self.nodes:
                raise ValueError(f"grid is missing node {k}")
            z = tuple(as_fraction(c) for c in self.nodes[k])
            if len(z) != self.arity:
                raise ValueError(f"node {k} has {len(z)} coordinates, expected {self.arity}")
            clean[k] = z
        object.__setattr__(self, "extent", extent)
        object.__setattr__(self, "nodes", clean)

    def __getitem__(self, k: Sequence[int]) -> Node:
        return self.nodes[tuple(k)]

    # -- constructors -------------------------------------------------
    @classmethod
    def from_function(cls, extent: Sequence[int], fn: Callable[[Exps], Sequence]) -> "NodeGrid":
        extent = _vec(extent)
        return cls(len(extent), extent, {k: tuple(fn(k)) for k in box(extent)})

    @classmethod
    def zero(cls, extent: Sequence[int]) -> "NodeGrid":
        """The grid ``O`` with every node at the origin."""
        d = len(extent)
        return cls.from_function(extent, lambda k: (0,) * d)

    @classmethod
    def linear(cls, matrix: Sequence[Sequence], extent: Sequence[int], offset: Sequence | None = None) -> "NodeGrid":
        """``z_k = A k + offset``."""
        a = [[as_fraction(v) for v in row] for row in matrix]
        d = len(extent)
        if len(a) != d or any(len(row) != d for row in a):
            raise ValueError(f"matrix must be {d}x{d}")
        off = [as_fraction(v) for v in (offset or [0] * d)]
        return cls.from_function(
            extent, lambda k: tuple(sum(a[i][j] * k[j] for j in range(d)) + off[i] for i in range(d))
        )

    @classmethod
    def product(cls, sequences: Sequence[Sequence]) -> "NodeGrid":
        """``z_k = (alpha^(1)_{k_1}, ..., alpha^(d)_{k_d})``; the extent is one less than each length."""
        extent = tuple(len(s) - 1 for s in sequences)
        return cls.from_function(extent, lambda k: tuple(s[kv] for s, kv in zip(sequences, k)))

    # -- derived grids ------------------------------------------------
    def restrict(self, extent: Sequence[int]) -> "NodeGrid":
        extent = _vec(extent)
        if not precedes(extent, self.extent):
            raise ValueError(f"grid extent {self.extent} does not cover {extent}")
        return NodeGrid(self.arity, extent, {k: self.nodes[k] for k in box(extent)})

    def index_shift(self, by: Sequence[int]) -> "NodeGrid":
        """``w_k = z_{k + by}``: the L/D grid shifts, composed."""
        by = _vec(by)
        extent = tuple(e - b for e, b in zip(self.extent, by))
        if any(e < 0 for e in extent):
            raise ValueError(f"cannot shift grid of extent {self.extent} by {by}")
        return NodeGrid(self.arity, extent, {k: self.nodes[tuple(a + b for a, b in zip(k, by))] for k in box(extent)})

    def translate(self, vector: Sequence) -> "NodeGrid":
        """``Z + vector``."""
        v = [as_fraction(c) for c in vector]
        return NodeGrid(self.arity, self.extent, {k: tuple(a + b for a, b in zip(z, v)) for k, z in self.nodes.items()})

    def negate(self) -> "NodeGrid":
        return NodeGrid(self.arity, self.extent, {k: tuple(-c for c in z) for k, z in self.nodes.items()})

    def with_node(self, k: Sequence[int], z: Sequence) -> "NodeGrid":
        nodes = dict(self.nodes)
        k = _vec(k)
        if k not in nodes:
            raise ValueError(f"{k} is outside the grid")
        nodes[k] = tuple(as_fraction(c) for c in z)
        return NodeGrid(self.arity, self.extent, nodes)

    # -- JSON ---------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "extent": list(self.extent),
            "nodes": [{"index": list(k), "z": [str(c) for c in self.nodes[k]]} for k in box(self.extent)],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "NodeGrid":
        nodes = {tuple(e["index"]): tuple(Fraction(str(c)) for c in e["z"]) for e in data["nodes"]}
        return cls(int(data["arity"]), tuple(data["extent"]), nodes)


@dataclass(frozen=True)
class AffineGridSpec:
    """``k -> A k + offset``; used both for node grids and for weight sets."""

    matrix: Tuple[Tuple[Fraction, ...], ...]
    offset: Tuple[Fraction, ...]

    def __post_init__(self):
        m = tuple(tuple(as_fraction(v) for v in row) for row in self.matrix)
        d = len(m)
        if any(len(row) != d for row in m):
            raise ValueError("affine matrix must be square")
        off = tuple(as_fraction(v) for v in (self.offset if self.offset is not None else [0] * d))
        if len(off) != d:
            raise ValueError(f"offset must have {d} entries")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "offset", off)

    @property
    def arity(self) -> int:
        return len(self.matrix)

    def __call__(self, k: Sequence[int]) -> Node:
        d = self.arity
        return tuple(sum(self.matrix[i][j] * k[j] for j in range(d)) + self.offset[i] for i in range(d))

    def grid(self, extent: Sequence[int]) -> NodeGrid:
        return NodeGrid.from_function(extent, self)

    def to_json(self) -> dict:
        return {"matrix": [[str(v) for v in row] for row in self.matrix], "offset": [str(v) for v in self.offset]}

    @classmethod
    def from_json(cls, data: Mapping) -> "AffineGridSpec":
        mat = tuple(tuple(Fraction(str(v)) for v in row) for row in data["matrix"])
        off = data.get("offset")
        return cls(mat, tuple(Fraction(str(v)) for v in off) if off is not None else None)


@dataclass(frozen=True)
class GoncarovPolyMulti:
    extent: Exps
    grid: NodeGrid
    poly: MultiPoly

    def __call__(self, *point) -> Fraction:
        return evaluate(self.poly, point)


# -- construction ------------------------------------------------------------

def goncarov_multi_ladder(grid: NodeGrid, n: Sequence[int]) -> Dict[Exps, MultiPoly]:
    """Every ``g_k(x; Z)`` for ``k <= n``, computed in graded order.

    ``g_k = prod x^{(k)} - sum_{j < k} C(k, j) prod_v z_{j,v}^{(k_v - j_v)} g_j``.
    """
    n = _vec(n)
    if len(n) != grid.arity:
        raise ValueError(f"extent {n} does not match grid arity {grid.arity}")
    if not precedes(n, grid.extent):
        raise ValueError(f"grid extent {grid.extent} does not cover {n}")
    d = grid.arity
    ladder: Dict[Exps, MultiPoly] = {}
    for k in box(n):
        g = upper_factorial_monomial(k)
        for j, gj in ladder.items():
            if j == k or not precedes(j, k):
                continue
            z = grid[j]
            c = binom_vec(k, j)
            for v in range(d):
                if not c:
                    break
                c *= rising(z[v], k[v] - j[v])
            if c:
                g = g - gj * c
        ladder[k] = g
    return ladder


def interpolation_holds(poly: MultiPoly, grid: NodeGrid, n: Sequence[int]) -> bool:
    n = _vec(n)
    target = factorial_vec(n)
    for k in box(n):
        want = target if k == n else 0
        if evaluate(mixed_delta(poly, k), grid[k]) != want:
            return False
    return True


def goncarov_multi(grid: NodeGrid, n: Sequence[int], check: bool = True) -> GoncarovPolyMulti:
    n = _vec(n)
    poly = goncarov_multi_ladder(grid, n)[n]
    if check and not interpolation_holds(poly, grid, n):
        raise ArithmeticError(f"interpolation conditions failed for extent {n}")
    return GoncarovPolyMulti(n, grid.restrict(n), poly)


@lru_cache(maxsize=None)
def _recursion_plan(n: Exps):
    """For each ``k`` in graded order: ``(k, [(j, C(k, j), k - j) for j < k])``."""
    order = list(box(n))
    plan = []
    for pos, k in enumerate(order):
        below = [(j, binom_vec(k, j), tuple(a - b for a, b in zip(k, j)))
                 for j in order[:pos] if precedes(j, k)]
        plan.append((k, below))
    return plan


def goncarov_value(node: Callable[[Exps], Sequence], n: Sequence[int], point: Sequence):
    """``g_n(point; Z)`` with the recursion run on numbers.

    ``node`` maps an index vector to its node.  With integer nodes and an
    integer point every intermediate stays an ``int``.
    """
    n = _vec(n)
    d = len(n)
    vals: Dict[Exps, object] = {}
    nodes: Dict[Exps, Sequence] = {}
    for k, below in _recursion_plan(n):
        v = 1
        for i in range(d):
            v *= rising(point[i], k[i])
        for j, c, gap in below:
            z = nodes[j]
            for i in range(d):
                c *= rising(z[i], gap[i])
            v -= c * vals[j]
        vals[k] = v
        nodes[k] = node(k)
    return vals[n]


def _gval(grid: NodeGrid, n, point):
    return as_fraction(goncarov_value(grid.__getitem__, n, [as_fraction(c) for c in point]))


# -- identity predicates -----------------------------------------------------

def _expansion(grid, n, aux):
    probe: MultiPoly = aux["probe"]
    if not precedes(probe.coordinate_degree(), n) and probe:
        raise ValueError("probe polynomial exceeds the coordinate degree")
    ladder = goncarov_multi_ladder(grid, n)
    rhs = MultiPoly.zero(grid.arity)
    for k, g in ladder.items():
        c = evaluate(mixed_delta(probe, k), grid[k]) / factorial_vec(k)
        if c:
            rhs = rhs + g * c
    return rhs == probe


def _linear_recursion(grid, n, aux):
    ladder = goncarov_multi_ladder(grid, n)
    rhs = MultiPoly.zero(grid.arity)
    for k, g in ladder.items():
        c = binom_vec(n, k)
        for v in range(grid.arity):
            c *= rising(grid[k][v], n[v] - k[v])
        rhs = rhs + g * c
    return rhs == upper_factorial_monomial(n)


def _appell(grid, n, aux):
    order = aux.get("order", 5)
    d = grid.arity
    top = (order - 1,) * d
    if not precedes(top, grid.extent):
        raise ValueError(f"appell to order {order} needs a grid of extent {top}")
    ladder = goncarov_multi_ladder(grid, top)
    lhs = TruncatedSeries.one(d, order)
    for v in range(d):
        lhs = lhs * series_inv_pow(MultiPoly.var(v, d), order, v, d)
    rhs = TruncatedSeries(d, order)
    for k, g in ladder.items():
        z = grid[k]
        s = TruncatedSeries.one(d, order)
        for v in range(d):
            s = s * series_inv_pow(z[v], order, v, d)
        rhs = rhs + s.monomial_shift(k).scale(g / factorial_vec(k))
    return lhs == rhs


def _general_difference(grid, n, aux):
    k = _vec(aux["orders"])
    if not precedes(k, n):
        return not mixed_delta(goncarov_multi_ladder(grid, n)[n], k)
    lhs = mixed_delta(goncarov_multi_ladder(grid, n)[n], k)
    sub = tuple(a - b for a, b in zip(n, k))
    c = 1
    for nv, kv in zip(n, k):
        c *= falling(nv, kv)
    rhs = goncarov_multi_ladder(grid.index_shift(k), sub)[sub] * c
    return lhs == rhs


def _difference_axis(axis):
    def check(grid, n, aux):
        orders = [0] * grid.arity
        orders[aux.get("axis", axis)] = 1
        if n[orders.index(1)] == 0:
            return not mixed_delta(goncarov_multi_ladder(grid, n)[n], orders)
        return _general_difference(grid, n, {"orders": orders})

    return check


def _shift(grid, n, aux):
    vec = [as_fraction(c) for c in aux.get("vector", [1] * grid.arity)]
    moved = goncarov_multi_ladder(grid.translate(vec), n)[n]
    return shift_vec(moved, vec) == goncarov_multi_ladder(grid, n)[n]


def _perturbation(grid, n, aux):
    k0 = _vec(aux["index"])
    zstar = tuple(as_fraction(c) for c in aux["node"])
    if not precedes(k0, n):
        raise ValueError(f"perturbed index {k0} is outside the box below {n}")
    perturbed = goncarov_multi_ladder(grid.with_node(k0, zstar), n)[n]
    base = goncarov_multi_ladder(grid, n)
    if k0 == n:
        # the corner node never enters g_n
        return perturbed == base[n]
    sub = tuple(a - b for a, b in zip(n, k0))
    corr = binom_vec(n, k0) * _gval(grid.index_shift(k0), sub, zstar)
    return perturbed == base[n] - base[k0] * corr


def _sheffer(grid, n, aux):
    b = [as_fraction(c) for c in aux.get("point", [0] * grid.arity)]
    lhs = shift_vec(goncarov_multi_ladder(grid, n)[n], b)
    rhs = MultiPoly.zero(grid.arity)
    for k in box(n):
        sub = tuple(a - c for a, c in zip(n, k))
        c = binom_vec(n, k) * _gval(grid.index_shift(k), sub, b)
        if c:
            rhs = rhs + upper_factorial_monomial(k) * c
    return lhs == rhs


IDENTITIES: Dict[str, Callable] = {
    "expansion": _expansion,
    "linear_recursion": _linear_recursion,
    "appell": _appell,
    "difference_x": _difference_axis(0),
    "difference_y": _difference_axis(1),
    "difference": _difference_axis(0),
    "general_difference": _general_difference,
    "shift": _shift,
    "perturbation": _perturbation,
    "sheffer": _sheffer,
}


def verify_identity_multi(which: str, grid: NodeGrid, n: Sequence[int], aux: Mapping | None = None) -> bool:
    """True iff the named identity holds exactly.

    ``aux`` keys: expansion ``probe``; appell ``order``; difference ``axis``;
    general_difference ``orders``; shift ``vector``; perturbation ``index`` and
    ``node``; sheffer ``point``.
    """
    try:
        fn = IDENTITIES[which]
    except KeyError:
        raise ValueError(f"unknown identity {which!r}; choose from {sorted(IDENTITIES)}") from None
    return fn(grid, _vec(n), dict(aux or {}))


# -- linear grids: closed forms -------------------------------------------------

def _matrix(a: Sequence[Sequence], d: int | None = None):
    m = [[as_fraction(v) for v in row] for row in a]
    d = d if d is not None else len(m)
    if len(m) != d or any(len(row) != d for row in m):
        raise ValueError(f"expected a {d}x{d} matrix")
    return m


def _drop_zero_axes(a, n, *vectors):
    """Remove the coordinates where ``n_i = 0`` (the polynomial does not involve them)."""
    keep = [i for i, v in enumerate(n) if v]
    sub_a = [[a[i][j] for j in keep] for i in keep]
    return keep, sub_a, [n[i] for i in keep], [[vec[i] for i in keep] for vec in vectors]


def abel_closed_form_2d(a: Sequence[Sequence], n: Sequence[int]) -> MultiPoly:
    """``g_{m,n}`` on ``x_{ij} = a i + b j``, ``y_{ij} = c i + d j``:
    ``(xy - x_{0,n} y - y_{m,0} x)(x - x_{m,n} + 1)^{(m-1)}(y - y_{m,n} + 1)^{(n-1)}``.
    """
    (aa, bb), (cc, dd) = _matrix(a, 2)
    m, k = _vec(n)
    x, y = MultiPoly.var(0, 2), MultiPoly.var(1, 2)
    if m == 0 or k == 0:
        # one-variable Abel case: nodes a*i along x, d*j along y
        from .goncarov_uni import abel_uni_closed_form

        if m == 0 and k == 0:
            return MultiPoly.constant(1, 2)
        if k == 0:
            g = abel_uni_closed_form(0, aa, m)
            return MultiPoly(2, {(e[0], 0): c for e, c in g.items()})
        g = abel_uni_closed_form(0, dd, k)
        return MultiPoly(2, {(0, e[0]): c for e, c in g.items()})
    x0n, ym0 = bb * k, cc * m
    xmn, ymn = aa * m + bb * k, cc * m + dd * k
    return (x * y - y * x0n - x * ym0) * rising(x - xmn + 1, m - 1) * rising(y - ymn + 1, k - 1)


def abel_closed_form_dd(a: Sequence[Sequence], x: Sequence, n: Sequence[int]) -> Fraction:
    """``g_n(x; A N^d) = det(B + C) prod_i (x_i - z_{n,i} + 1)^{(n_i - 1)}``.

    ``B = diag(x_i - z_{n,i})`` and ``C_{ij} = z_{n_i e_i, j}``.  Axes with
    ``n_i = 0`` are dropped first.
    """
    n = _vec(n)
    d = len(n)
    a = _matrix(a, d)
    x = [as_fraction(v) for v in x]
    if len(x) != d:
        raise ValueError(f"point must have {d} coordinates")
    _, a, n, (x,) = _drop_zero_axes(a, n, x)
    d = len(n)
    if d == 0:
        return Fraction(1)
    zn = [sum(a[i][j] * n[j] for j in range(d)) for i in range(d)]
    bc = [[(a[j][i] * n[i]) + (x[i] - zn[i] if i == j else 0) for j in range(d)] for i in range(d)]
    out = det(bc)
    for i in range(d):
        out *= rising(x[i] - zn[i] + 1, n[i] - 1)
    return out


def _nonneg_ints(*values):
    for v in values:
        f = as_fraction(v)
        if f.denominator != 1 or f < 0:
            raise ValueError(f"expected a non-negative integer, got {v}")


def _as_count(value: Fraction, what: str) -> int:
    value = as_fraction(value)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"{what} gave {value}, not a non-negative integer")
    return int(value)


def ipf_count_affine_2d(a, b, c, d, s, t, m: int, n: int) -> int:
    """Increasing U-parking functions for ``u_{ij} = a i + b j + s``, ``v_{ij} = c i + d j + t``.

    ``(st + bnt + scm)(s + am + bn + 1)^{(m-1)}(t + cm + dn + 1)^{(n-1)} / (m! n!)``.
    """
    _nonneg_ints(a, b, c, d, s, t, m, n)
    a, b, c, d, s, t = (as_fraction(v) for v in (a, b, c, d, s, t))
    if m == 0 and n == 0:
        return 1
    if n == 0:
        value = s * rising(s + a * m + 1, m - 1) / factorial(m)
    elif m == 0:
        value = t * rising(t + d * n + 1, n - 1) / factorial(n)
    else:
        value = (s * t + b * n * t + s * c * m) * rising(s + a * m + b * n + 1, m - 1) \
            * rising(t + c * m + d * n + 1, n - 1) / (factorial(m) * factorial(n))
    return _as_count(value, "affine 2-d count")


def ipf_count_affine_dd(a: Sequence[Sequence], s: Sequence, n: Sequence[int]) -> int:
    """``(1/n!) det(B + C) prod_i (s_i + z_{n,i} + 1)^{(n_i - 1)}`` with ``Z = A N^d``.

    Here ``B = diag(s_i + z_{n,i})`` and ``C_{ij} = -z_{n_i e_i, j}``; this is the
    Abel closed form for the grid ``-Z`` evaluated at ``s``.
    """
    n = _vec(n)
    a = _matrix(a, len(n))
    _nonneg_ints(*(v for row in a for v in row), *s)
    neg = [[-v for v in row] for row in a]
    return _as_count(abel_closed_form_dd(neg, s, n) / factorial_vec(n), "affine d-dim count")


def hollow_matrix(alpha: Sequence) -> List[List[Fraction]]:
    """``a_{ij} = alpha_j`` off the diagonal, 0 on it."""
    d = len(alpha)
    return [[Fraction(0) if i == j else as_fraction(alpha[j]) for j in range(d)] for i in range(d)]


def ipf_count_affine_hollow(alpha: Sequence, s: Sequence, n: Sequence[int]) -> int:
    """Closed form for the hollow matrix, ``N = sum alpha_i n_i``:

    ``(1/n!)(1 - sum_j alpha_j n_j/(s_j + N)) prod_i (s_i + N)(s_i + N - alpha_i n_i + 1)^{(n_i - 1)}``.
    """
    n = _vec(n)
    _nonneg_ints(*alpha, *s)
    alpha = [as_fraction(v) for v in alpha]
    s = [as_fraction(v) for v in s]
    if not (len(alpha) == len(s) == len(n)):
        raise ValueError("alpha, s and n must have equal length")
    big_n = sum(al * ni for al, ni in zip(alpha, n))
    keep = [i for i, ni in enumerate(n) if ni]
    if not keep:
        return 1
    if any(s[i] + big_n == 0 for i in keep):
        raise ZeroDivisionError("s_j + N vanishes; the hollow formula is undefined here")
    value = 1 - sum(alpha[j] * n[j] / (s[j] + big_n) for j in keep)
    for i in keep:
        value *= (s[i] + big_n) * rising(s[i] + big_n - alpha[i] * n[i] + 1, n[i] - 1)
    return _as_count(value / factorial_vec(n), "hollow count")


def cori_poulalhon_count(n: Sequence[int]) -> Fraction:
    """``(1/(N+1)) prod_i C(N+1, n_i)`` with ``N = sum n_i``."""
    big_n = sum(n)
    out = Fraction(1, big_n + 1)
    for ni in n:
        out *= comb(big_n + 1, ni)
    return out


# -- counting from weight sets ------------------------------------------------

def count_from_weights(weights: Mapping[Exps, Sequence[int]], n: Sequence[int], x: Sequence[int] | None = None) -> Fraction:
    """``g_n(x; x - U)/n!`` (or ``g_n(0; -U)/n!`` when ``x`` is None).

    ``weights`` maps each ``k <= n`` to ``u_k``.  Returns the exact rational so
    that callers can see a non-integer when hypotheses fail.
    """
    n = _vec(n)
    d = len(n)
    if x is None:
        node = lambda k: tuple(-w for w in weights[k])  # noqa: E731
        point = (0,) * d
    else:
        node = lambda k: tuple(xi - w for xi, w in zip(x, weights[k]))  # noqa: E731
        point = tuple(x)
    return Fraction(goncarov_value(node, n, point), factorial_vec(n))


def weights_grid(weights: Mapping[Exps, Sequence[int]], n: Sequence[int], x: Sequence[int] | None = None) -> NodeGrid:
    """Node grid ``z_k = x - u_k`` (``-u_k`` when ``x`` is None)."""
    n = _vec(n)
    x = x if x is not None else (0,) * len(n)
    return NodeGrid.from_function(n, lambda k: tuple(xi - w for xi, w in zip(x, weights[k])))


def dumps_grid(grid: NodeGrid) -> str:
    return json.dumps(grid.to_json())


def univariate_ladder_embedding(nodes: Sequence, m: int, axis: int, arity: int) -> MultiPoly:
    """``g_m`` in one variable, embedded as a polynomial in ``arity`` variables."""
    g = goncarov_ladder(nodes, m)[m]
    out = {}
    for e, c in g.items():
        exps = [0] * arity
        exps[axis] = e[0]
        out[tuple(exps)] = c
    return MultiPoly(arity, out)


__all__ = [
    "AffineGridSpec",
    "GoncarovPolyMulti",
    "IDENTITIES",
    "NodeGrid",
    "abel_closed_form_2d",
    "abel_closed_form_dd",
    "cori_poulalhon_count",
    "count_from_weights",
    "goncarov_multi",
    "goncarov_multi_ladder",
    "goncarov_value",
    "hollow_matrix",
    "interpolation_holds",
    "ipf_count_affine_2d",
    "ipf_count_affine_dd",
    "ipf_count_affine_hollow",
    "univariate_ladder_embedding",
    "verify_identity_multi",
    "weights_grid",
]
