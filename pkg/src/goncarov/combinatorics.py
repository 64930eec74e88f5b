"""Brute-force enumeration of lattice-path-bounded integer sequences.

Nothing here touches polynomials: this module is the independent oracle the
counting formulas are checked against.

Conventions: a lattice path is a tuple of axis indices (``0`` is an
``e_1``-step).  In two dimensions ``0``/``1`` print as ``E``/``N``.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import comb
from typing import Dict, FrozenSet, Iterator, List, Mapping, Sequence, Tuple

Index = Tuple[int, ...]
Path = Tuple[int, ...]


def _box(extent: Sequence[int]) -> List[Index]:
    return list(product(*(range(e + 1) for e in extent)))


@dataclass(frozen=True)
class WeightSet:
    """Weights ``u_k`` in ``N^d`` for every ``k`` below ``extent``, monotone in ``k``."""

    arity: int
    extent: Index
    weights: Mapping[Index, Tuple[int, ...]] = field(hash=False, compare=False)

    def __post_init__(self):
        extent = tuple(int(e) for e in self.extent)
        if len(extent) != self.arity:
            raise ValueError(f"extent {extent} does not have length {self.arity}")
        clean = {}
        for k in _box(extent):
            if k not in self.weights:
                raise ValueError(f"weight set is missing index {k}")
            u = tuple(self.weights[k])
            if len(u) != self.arity:
                raise ValueError(f"weight at {k} has {len(u)} entries, expected {self.arity}")
            if any(isinstance(w, bool) or int(w) != w or w < 0 for w in u):
                raise ValueError(f"weight at {k} must be non-negative integers, got {u}")
            clean[k] = tuple(int(w) for w in u)
        violation = monotonicity_violation(clean, extent)
        if violation:
            k, k2, i = violation
            raise ValueError(f"weights not monotone: u_{k}[{i}]={clean[k][i]} > u_{k2}[{i}]={clean[k2][i]}")
        object.__setattr__(self, "extent", extent)
        object.__setattr__(self, "weights", clean)

    def __getitem__(self, k: Sequence[int]) -> Tuple[int, ...]:
        return self.weights[tuple(k)]

    @classmethod
    def from_function(cls, extent: Sequence[int], fn) -> "WeightSet":
        extent = tuple(extent)
        return cls(len(extent), extent, {k: tuple(fn(k)) for k in _box(extent)})

    def key(self) -> tuple:
        return tuple(self.weights[k] for k in _box(self.extent))

    def max_weight(self, axis: int) -> int:
        return max(u[axis] for u in self.weights.values())

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "extent": list(self.extent),
            "weights": [{"index": list(k), "u": list(self.weights[k])} for k in _box(self.extent)],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "WeightSet":
        w = {tuple(e["index"]): tuple(e["u"]) for e in data["weights"]}
        return cls(int(data["arity"]), tuple(data["extent"]), w)


def monotonicity_violation(weights: Mapping[Index, Sequence[int]], extent: Sequence[int]):
    """First ``(k, k + e_j, i)`` with ``u_{k,i} > u_{k+e_j,i}``, else None.

    Checking unit steps suffices because the product order is their transitive closure.
    """
    d = len(extent)
    for k in _box(extent):
        for j in range(d):
            if k[j] == extent[j]:
                continue
            k2 = k[:j] + (k[j] + 1,) + k[j + 1:]
            for i in range(d):
                if weights[k][i] > weights[k2][i]:
                    return k, k2, i
    return None


@dataclass(frozen=True)
class SeqTuple:
    """``d`` finite sequences of non-negative integers (not necessarily sorted)."""

    sequences: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        seqs = tuple(tuple(int(v) for v in s) for s in self.sequences)
        if any(v < 0 for s in seqs for v in s):
            raise ValueError("sequence entries must be non-negative")
        object.__setattr__(self, "sequences", seqs)

    @property
    def lengths(self) -> Index:
        return tuple(len(s) for s in self.sequences)

    def is_non_decreasing(self) -> bool:
        return all(all(a <= b for a, b in zip(s, s[1:])) for s in self.sequences)

    def order_statistics(self) -> "SeqTuple":
        return SeqTuple(tuple(tuple(sorted(s)) for s in self.sequences))

    def to_json(self) -> dict:
        return {"sequences": [list(s) for s in self.sequences]}

    @classmethod
    def from_json(cls, data: Mapping) -> "SeqTuple":
        return cls(tuple(tuple(s) for s in data["sequences"]))


# -- paths -------------------------------------------------------------------

STEP_LETTERS = "EN"


def path_from_string(text: str, arity: int = 2) -> Path:
    """``"NNENEEN"`` for two dimensions; digits ``"1231"`` (1-based axes) in general."""
    if arity == 2 and set(text) <= set(STEP_LETTERS):
        return tuple(STEP_LETTERS.index(c) for c in text)
    try:
        steps = tuple(int(c) - 1 for c in text)
    except ValueError:
        raise ValueError(f"cannot read path {text!r}") from None
    if any(not 0 <= s < arity for s in steps):
        raise ValueError(f"path {text!r} uses an axis outside 1..{arity}")
    return steps


def path_to_string(path: Path, arity: int = 2) -> str:
    if arity == 2:
        return "".join(STEP_LETTERS[s] for s in path)
    return "".join(str(s + 1) for s in path)


def enumerate_paths(n: Sequence[int]) -> Iterator[Path]:
    """Every monotone path from the origin to ``n``, once each, in lexicographic order."""
    n = tuple(n)
    steps = sorted(i for i, ni in enumerate(n) for _ in range(ni))
    # distinct permutations of a multiset, generated in lex order
    if not steps:
        yield ()
        return
    cur = list(steps)
    while True:
        yield tuple(cur)
        i = len(cur) - 2
        while i >= 0 and cur[i] >= cur[i + 1]:
            i -= 1
        if i < 0:
            return
        j = len(cur) - 1
        while cur[j] <= cur[i]:
            j -= 1
        cur[i], cur[j] = cur[j], cur[i]
        cur[i + 1:] = reversed(cur[i + 1:])


def _require_sorted(t: SeqTuple) -> None:
    if not t.is_non_decreasing():
        raise ValueError("tuple must be non-decreasing in every coordinate; sort it first")


def is_bounded_by(t: SeqTuple, path: Path, weights: WeightSet) -> bool:
    """Every ``e_i``-step from ``k`` must satisfy ``a^{(i)}_{k_i} < u_{k,i}``."""
    _require_sorted(t)
    if Counter(path) != Counter({i: n for i, n in enumerate(t.lengths) if n}):
        raise ValueError("path does not end at the tuple's length vector")
    if any(a > b for a, b in zip(t.lengths, weights.extent)):
        raise ValueError("weight set does not cover the tuple's lengths")
    k = [0] * weights.arity
    for i in path:
        if not t.sequences[i][k[i]] < weights[k][i]:
            return False
        k[i] += 1
    return True


def reach_vertices(seqs: Sequence[Sequence[int]], weights: Mapping[Index, Sequence[int]], n: Sequence[int]) -> FrozenSet[Index]:
    """Closure from the origin under ``k -> k + e_i`` whenever ``a^{(i)}_{k_i} < u_{k,i}``."""
    d = len(n)
    origin = (0,) * d
    seen = {origin}
    stack = [origin]
    while stack:
        k = stack.pop()
        u = weights[k]
        for i in range(d):
            if k[i] < n[i] and seqs[i][k[i]] < u[i]:
                k2 = k[:i] + (k[i] + 1,) + k[i + 1:]
                if k2 not in seen:
                    seen.add(k2)
                    stack.append(k2)
    return frozenset(seen)


def build_reach_graph(t: SeqTuple, weights: WeightSet) -> Tuple[FrozenSet[Index], Index]:
    """Reached vertices and their unique maximum under the product order."""
    _require_sorted(t)
    n = t.lengths
    verts = reach_vertices(t.sequences, weights.weights, n)
    top = tuple(max(v[i] for v in verts) for i in range(len(n)))
    if top not in verts:
        raise AssertionError(f"reach graph has no unique maximal vertex: {sorted(verts)}")
    return verts, top


def _reach_top(seqs, weights, n) -> Index:
    verts = reach_vertices(seqs, weights, n)
    top = tuple(max(v[i] for v in verts) for i in range(len(n)))
    if top not in verts:
        raise AssertionError(f"reach graph has no unique maximal vertex for {seqs}")
    return top


def _bounded_by_some_path(seqs, weights, n) -> bool:
    for path in enumerate_paths(n):
        k = [0] * len(n)
        for i in path:
            if not seqs[i][k[i]] < weights[tuple(k)][i]:
                break
            k[i] += 1
        else:
            return True
    return False


def increasing_tuples(n: Sequence[int], x: Sequence[int]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """All non-decreasing tuples with ``0 <= a^{(i)}_j < x_i``."""
    per_axis = [list(combinations_with_replacement(range(xi), ni)) for ni, xi in zip(n, x)]
    return product(*per_axis)


def count_increasing_bruteforce(n: Sequence[int], x: Sequence[int], weights: WeightSet, method: str = "reach") -> int:
    """Number of non-decreasing tuples below ``x`` that some path from 0 to ``n`` bounds.

    ``method="reach"`` uses the reach-graph maximum; ``method="paths"`` tests
    every lattice path directly.
    """
    n = tuple(n)
    if len(n) != weights.arity or len(x) != weights.arity:
        raise ValueError("n, x and the weight set must share a dimension")
    if any(a > b for a, b in zip(n, weights.extent)):
        raise ValueError(f"weight set extent {weights.extent} does not cover {n}")
    w = weights.weights
    if method == "reach":
        return sum(1 for seqs in increasing_tuples(n, x) if _reach_top(seqs, w, n) == n)
    if method == "paths":
        return sum(1 for seqs in increasing_tuples(n, x) if _bounded_by_some_path(seqs, w, n))
    raise ValueError(f"unknown method {method!r}")


def reach_fibers(n: Sequence[int], x: Sequence[int], weights: WeightSet) -> Counter:
    """Sizes of ``K_n(k)``: tuples grouped by the maximum of their reach graph."""
    n = tuple(n)
    return Counter(_reach_top(seqs, weights.weights, n) for seqs in increasing_tuples(n, x))


def total_increasing(n: Sequence[int], x: Sequence[int]) -> int:
    out = 1
    for ni, xi in zip(n, x):
        out *= comb(xi + ni - 1, ni)
    return out


def is_U_parking(t: SeqTuple, weights: WeightSet) -> bool:
    """Order statistics of ``t`` bounded by some path from 0 to its length vector."""
    s = t.order_statistics()
    n = s.lengths
    if any(a > b for a, b in zip(n, weights.extent)):
        raise ValueError(f"weight set extent {weights.extent} does not cover {n}")
    return _reach_top(s.sequences, weights.weights, n) == n


def count_U_parking_bruteforce(n: Sequence[int], x: Sequence[int], weights: WeightSet) -> int:
    """All (unsorted) U-parking tuples with entries below ``x``; raw enumeration only."""
    n = tuple(n)
    per_axis = [list(product(range(xi), repeat=ni)) for ni, xi in zip(n, x)]
    return sum(1 for seqs in product(*per_axis) if is_U_parking(SeqTuple(seqs), weights))


def materialize_affine_weights(matrix: Sequence[Sequence[int]], offset: Sequence[int], n: Sequence[int]) -> WeightSet:
    """``u_k = A k + s`` on the box below ``n``; rejects negative or non-monotone results."""
    d = len(n)
    if len(matrix) != d or any(len(row) != d for row in matrix) or len(offset) != d:
        raise ValueError(f"affine spec must be {d}x{d} with a length-{d} offset")
    weights: Dict[Index, Tuple[int, ...]] = {}
    for k in _box(n):
        u = []
        for i in range(d):
            v = sum(matrix[i][j] * k[j] for j in range(d)) + offset[i]
            if int(v) != v:
                raise ValueError(f"weight at {k} is not an integer: {v}")
            u.append(int(v))
        weights[k] = tuple(u)
    violation = monotonicity_violation(weights, n)
    if violation:
        k, k2, i = violation
        raise ValueError(f"affine weights not monotone between {k} and {k2} in coordinate {i}")
    for k, u in weights.items():
        if any(v < 0 for v in u):
            raise ValueError(f"affine weight at {k} is negative: {u}")
    return WeightSet(d, tuple(n), weights)


def bound_saturation_check(n: Sequence[int], weights: WeightSet, x: Sequence[int]) -> bool:
    """True iff raising every ``x_i`` by one leaves the brute-force count unchanged."""
    base = count_increasing_bruteforce(n, x, weights)
    return base == count_increasing_bruteforce(n, [xi + 1 for xi in x], weights)


def saturating_bound(weights: WeightSet) -> List[int]:
    """``x_i = max_k u_{k,i}`` (at least 1): no larger value can ever be bounded."""
    return [max(1, weights.max_weight(i)) for i in range(weights.arity)]


def dumps(obj) -> str:
    return json.dumps(obj.to_json())
