"""Seeded random instance generators and the identity verification suites."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence

from .exact_poly import MultiPoly, box
from .goncarov_multi import IDENTITIES as MULTI_IDS, NodeGrid, verify_identity_multi
from .goncarov_uni import IDENTITIES as UNI_IDS, verify_identity_uni

DEFAULT_SEED = 20240601
UNI_SUITE = ("expansion", "appell", "difference", "shift", "perturbation", "sheffer")
MULTI_SUITE = (
    "expansion",
    "linear_recursion",
    "appell",
    "difference_x",
    "difference_y",
    "general_difference",
    "shift",
    "perturbation",
    "sheffer",
)
APPELL_ORDER = 5


def random_rational(rng: random.Random, span: int = 9, den: int = 5) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_nodes(rng: random.Random, length: int) -> List[Fraction]:
    return [random_rational(rng) for _ in range(length)]


def random_grid(rng: random.Random, extent: Sequence[int]) -> NodeGrid:
    d = len(extent)
    return NodeGrid.from_function(extent, lambda k: tuple(random_rational(rng) for _ in range(d)))


def random_poly(rng: random.Random, degree: Sequence[int], density: float = 0.6) -> MultiPoly:
    terms = {k: rng.randint(-9, 9) for k in box(degree) if rng.random() < density}
    return MultiPoly(len(degree), terms)


def random_extent(rng: random.Random, top: Sequence[int], low: int = 0) -> tuple:
    return tuple(rng.randint(low, t) for t in top)


def uni_instance(which: str, rng: random.Random, max_n: int = 5, appell_order: int = APPELL_ORDER):
    n = rng.randint(2 if which == "perturbation" else 0, max_n)
    nodes = random_nodes(rng, max(n, appell_order) + 1)
    aux: Dict = {}
    if which == "expansion":
        aux["probe"] = random_poly(rng, (n,))
    elif which == "appell":
        aux["order"] = appell_order
    elif which == "shift":
        aux["t"] = random_rational(rng)
    elif which == "perturbation":
        aux["m"] = rng.randint(1, n - 1)
        aux["delta"] = random_rational(rng)
    elif which == "sheffer":
        aux["y"] = random_rational(rng)
    return nodes, n, aux


def multi_instance(which: str, rng: random.Random, top: Sequence[int] = (3, 3), appell_order: int = APPELL_ORDER):
    d = len(top)
    if which == "appell":
        # every g_k with k below the truncation box enters the identity
        extent = (appell_order - 1,) * d
        return random_grid(rng, extent), extent, {"order": appell_order}
    n = random_extent(rng, top)
    grid = random_grid(rng, n)
    aux: Dict = {}
    if which == "expansion":
        aux["probe"] = random_poly(rng, n)
    elif which == "general_difference":
        aux["orders"] = random_extent(rng, n)
    elif which == "shift":
        aux["vector"] = [random_rational(rng) for _ in range(d)]
    elif which == "perturbation":
        aux["index"] = random_extent(rng, n)
        aux["node"] = [random_rational(rng) for _ in range(d)]
    elif which == "sheffer":
        aux["point"] = [random_rational(rng) for _ in range(d)]
    return grid, n, aux


@dataclass
class SuiteResult:
    family: str
    identity: str
    trials: int = 0
    failures: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _describe(value):
    if isinstance(value, MultiPoly):
        return str(value)
    if isinstance(value, NodeGrid):
        return value.to_json()
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_describe(v) for v in value]
    if isinstance(value, dict):
        return {k: _describe(v) for k, v in value.items()}
    return value


def run_uni_suite(
    identities: Sequence[str] = UNI_SUITE,
    count: int = 50,
    seed: int = DEFAULT_SEED,
    appell_order: int = APPELL_ORDER,
) -> List[SuiteResult]:
    results = []
    for which in identities:
        if which not in UNI_IDS:
            raise ValueError(f"unknown univariate identity {which!r}")
        rng = random.Random(f"{seed}:uni:{which}")
        res = SuiteResult("univariate", which)
        for trial in range(count):
            nodes, n, aux = uni_instance(which, rng, appell_order=appell_order)
            res.trials += 1
            if not verify_identity_uni(which, nodes, n, aux):
                res.failures.append({"trial": trial, "n": n, "nodes": _describe(nodes), "aux": _describe(aux)})
        results.append(res)
    return results


def run_multi_suite(
    identities: Sequence[str] = MULTI_SUITE,
    count: int = 50,
    seed: int = DEFAULT_SEED,
    top: Sequence[int] = (3, 3),
    appell_order: int | None = None,
) -> List[SuiteResult]:
    if appell_order is None:
        appell_order = APPELL_ORDER if len(top) <= 2 else 3
    results = []
    family = f"{len(top)}-variate"
    for which in identities:
        if which not in MULTI_IDS:
            raise ValueError(f"unknown multivariate identity {which!r}")
        rng = random.Random(f"{seed}:multi{len(top)}:{which}")
        res = SuiteResult(family, which)
        for trial in range(count):
            grid, n, aux = multi_instance(which, rng, top, appell_order)
            res.trials += 1
            if not verify_identity_multi(which, grid, n, aux):
                res.failures.append(
                    {"trial": trial, "n": list(n), "grid": _describe(grid), "aux": _describe(aux)}
                )
        results.append(res)
    return results
