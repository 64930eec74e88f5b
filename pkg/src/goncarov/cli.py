"""Command-line entry point.

Exit status: 0 success, 1 a verification or oracle comparison failed,
2 unparseable input, 3 input that parses but violates a precondition.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from itertools import combinations_with_replacement
from math import isqrt
from typing import List, Optional, Sequence

from . import combinatorics as comb_mod
from .exact_poly import box, default_names, poly_to_json, to_text, to_upper_factorial_basis, upper_basis_text
from .goncarov_multi import (
    AffineGridSpec,
    NodeGrid,
    count_from_weights,
    goncarov_multi,
    hollow_matrix,
    ipf_count_affine_2d,
    ipf_count_affine_dd,
    ipf_count_affine_hollow,
)
from .goncarov_uni import goncarov_uni_determinant, goncarov_uni_recursion, lattice_path_count
from .suites import DEFAULT_SEED, MULTI_SUITE, UNI_SUITE, run_multi_suite, run_uni_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


class ParseError(Exception):
    pass


# -- argument parsing helpers --------------------------------------------------

def _split(text: str, flag: str, sep: str = ","):
    items, pos = [], 0
    for raw in text.split(sep):
        items.append((raw.strip(), pos))
        pos += len(raw) + 1
    if not text.strip():
        raise ParseError(f"{flag}: empty list")
    return items


def parse_ints(text: str, flag: str) -> List[int]:
    out = []
    for i, (item, pos) in enumerate(_split(text, flag)):
        try:
            out.append(int(item))
        except ValueError:
            raise ParseError(f"{flag}: item {i} at char {pos} ({item!r}) is not an integer") from None
    return out


def parse_rationals(text: str, flag: str) -> List[Fraction]:
    out = []
    for i, (item, pos) in enumerate(_split(text, flag)):
        try:
            out.append(Fraction(item))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"{flag}: item {i} at char {pos} ({item!r}) is not a rational p/q") from None
    return out


def parse_square(text: str, flag: str) -> List[List[Fraction]]:
    flat = parse_rationals(text, flag)
    d = isqrt(len(flat))
    if d * d != len(flat):
        raise ParseError(f"{flag}: {len(flat)} entries do not form a square matrix")
    return [flat[i * d:(i + 1) * d] for i in range(d)]


def load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def parse_affine(text: str, flag: str) -> AffineGridSpec:
    body = text[len("affine:"):]
    mat_txt, _, off_txt = body.partition("@")
    matrix = parse_square(mat_txt, flag)
    offset = parse_rationals(off_txt, flag) if off_txt else [Fraction(0)] * len(matrix)
    if len(offset) != len(matrix):
        raise ParseError(f"{flag}: offset has {len(offset)} entries, matrix is {len(matrix)}x{len(matrix)}")
    return AffineGridSpec(matrix, offset)


def resolve_grid(spec: str, n: Sequence[int]) -> NodeGrid:
    if spec == "O":
        return NodeGrid.zero(n)
    if spec.startswith("affine:"):
        aff = parse_affine(spec, "--grid")
        if aff.arity != len(n):
            raise ValueError(f"affine grid has dimension {aff.arity}, --n has {len(n)} entries")
        return aff.grid(n)
    data = load_json(spec)
    try:
        if "matrix" in data:
            return AffineGridSpec.from_json(data).grid(n)
        return NodeGrid.from_json(data)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"{spec}: not a node grid or affine spec ({exc})") from None


def resolve_weights(spec: str, n: Sequence[int]) -> comb_mod.WeightSet:
    if spec.startswith("affine:"):
        aff = parse_affine(spec, "--weights")
        for v in [*(c for row in aff.matrix for c in row), *aff.offset]:
            if v.denominator != 1:
                raise ValueError("affine weights need integer entries")
        mat = [[int(c) for c in row] for row in aff.matrix]
        return comb_mod.materialize_affine_weights(mat, [int(c) for c in aff.offset], n)
    data = load_json(spec)
    try:
        if "matrix" in data:
            return comb_mod.materialize_affine_weights(data["matrix"], data.get("offset") or [0] * len(n), n)
        return comb_mod.WeightSet.from_json(data)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"{spec}: not a weight set ({exc})") from None


# -- output ----------------------------------------------------------------------

def emit(doc: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    for key, value in doc.items():
        if value is None or isinstance(value, (dict, list, bool)):
            value = json.dumps(value)
        out.write(f"{key}: {value}\n")


def _poly_doc(poly, arity: int) -> dict:
    names = default_names(arity)
    basis = to_upper_factorial_basis(poly)
    return {
        "variables": list(names),
        "monomial": to_text(poly, names),
        "upper_factorial": upper_basis_text(basis, arity, names),
        "terms": poly_to_json(poly),
    }


# -- commands --------------------------------------------------------------------

def cmd_poly_uni(args) -> int:
    nodes = parse_rationals(args.nodes, "--nodes") if args.nodes else []
    n = args.n if args.n is not None else len(nodes)
    build = goncarov_uni_determinant if args.method == "determinant" else goncarov_uni_recursion
    g = build(nodes, n)
    doc = {"command": "poly-uni", "n": n, "nodes": [str(a) for a in g.nodes], "method": args.method}
    doc.update(_poly_doc(g.poly, 1))
    emit(doc, args.format)
    return EXIT_OK


def cmd_poly_multi(args) -> int:
    n = parse_ints(args.n, "--n")
    grid = resolve_grid(args.grid, n)
    g = goncarov_multi(grid, n)
    doc = {"command": "poly-multi", "n": list(n)}
    doc.update(_poly_doc(g.poly, len(n)))
    emit(doc, args.format)
    return EXIT_OK


def cmd_count_lp(args) -> int:
    bounds = parse_ints(args.bounds, "--bounds")
    n = args.n if args.n is not None else len(bounds)
    count = lattice_path_count(bounds, n)
    emit({"command": "count-lp", "bounds": bounds[:n], "n": n, "count": count}, args.format)
    return EXIT_OK


def cmd_count_ipf(args) -> int:
    n = parse_ints(args.n, "--n")
    weights = resolve_weights(args.weights, n)
    x = parse_ints(args.x, "--x") if args.x else None
    value = count_from_weights(weights.weights, n, x)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"formula gave {value}; check monotonicity and the bound x")
    doc = {"command": "count-ipf", "n": list(n), "x": x, "count": int(value)}
    if args.brute:
        bx = x if x is not None else comb_mod.saturating_bound(weights)
        doc["bruteforce"] = comb_mod.count_increasing_bruteforce(n, bx, weights)
        doc["match"] = doc["bruteforce"] == doc["count"]
    emit(doc, args.format)
    return EXIT_OK if doc.get("match", True) else EXIT_FAIL


def cmd_count_affine(args) -> int:
    matrix = parse_square(args.matrix, "--matrix")
    n = parse_ints(args.n, "--n")
    d = len(matrix)
    offset = parse_rationals(args.offset, "--offset") if args.offset else [Fraction(0)] * d
    if len(n) != d or len(offset) != d:
        raise ValueError(f"--matrix is {d}x{d}; --n and --offset need {d} entries")
    if d == 2:
        (a, b), (c, dd) = matrix
        count = ipf_count_affine_2d(a, b, c, dd, offset[0], offset[1], n[0], n[1])
    else:
        count = ipf_count_affine_dd(matrix, offset, n)
    doc = {"command": "count-affine", "n": n, "count": count}
    emit(doc, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    uni = list(UNI_SUITE)
    multi = list(MULTI_SUITE)
    if args.identity:
        uni = [w for w in args.identity if w in uni]
        multi = [w for w in args.identity if w in multi]
        unknown = set(args.identity) - set(uni) - set(multi)
        if unknown:
            raise ParseError(f"--identity: unknown identities {sorted(unknown)}")
    results = run_uni_suite(uni, args.count, args.seed, args.order)
    results += run_multi_suite(multi, args.count, args.seed, appell_order=args.order)
    if args.all:
        results += run_multi_suite(multi, max(1, args.count // 5), args.seed, top=(2, 2, 2), appell_order=3)
    failed = [r for r in results if not r.ok]
    doc = {
        "command": "verify",
        "seed": args.seed,
        "suites": [
            {"family": r.family, "identity": r.identity, "trials": r.trials, "passed": r.ok} for r in results
        ],
        "failures": [{"family": r.family, "identity": r.identity, "instances": r.failures} for r in failed],
        "ok": not failed,
    }
    if args.format == "text":
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'} {r.family:11s} {r.identity:19s} {r.trials} trials")
        for r in failed:
            print(f"failing instances for {r.family} {r.identity}: {json.dumps(r.failures)}")
    else:
        emit(doc, "json")
    return EXIT_OK if not failed else EXIT_FAIL


# -- oracle comparison families -------------------------------------------------------

def _family_lp(rng, count):
    for n in range(1, 6):
        for bounds in combinations_with_replacement(range(1, 7), n):
            ws = comb_mod.WeightSet.from_function((n,), lambda k, b=bounds: (b[min(k[0], n - 1)],))
            formula = lattice_path_count(list(bounds))
            brute = comb_mod.count_increasing_bruteforce((n,), (max(bounds),), ws)
            yield (n, bounds), {"bounds": list(bounds)}, formula, brute


def _family_affine2d(rng, count):
    for _ in range(count):
        a, b, c, d, s, t = (rng.randint(0, 2) for _ in range(6))
        total = rng.randint(0, 5)
        m = rng.randint(0, total)
        n = total - m
        ws = comb_mod.materialize_affine_weights([[a, b], [c, d]], [s, t], (m, n))
        formula = ipf_count_affine_2d(a, b, c, d, s, t, m, n)
        brute = comb_mod.count_increasing_bruteforce((m, n), comb_mod.saturating_bound(ws), ws)
        yield (total, (a, b, c, d, s, t)), {"matrix": [[a, b], [c, d]], "offset": [s, t], "n": [m, n]}, formula, brute


def _family_hollow(rng, count):
    for _ in range(count):
        alpha = [rng.randint(0, 2) for _ in range(3)]
        s = [rng.randint(1, 2) for _ in range(3)]
        n = [rng.randint(0, 2) for _ in range(3)]
        if sum(n) > 4:
            continue
        ws = comb_mod.materialize_affine_weights(hollow_matrix([int(v) for v in alpha]), s, n)
        formula = ipf_count_affine_hollow(alpha, s, n)
        assert formula == ipf_count_affine_dd(hollow_matrix(alpha), s, n)
        brute = comb_mod.count_increasing_bruteforce(n, comb_mod.saturating_bound(ws), ws)
        yield (sum(n), tuple(alpha + s + n)), {"alpha": alpha, "offset": s, "n": n}, formula, brute


def _random_monotone_weights(rng, extent, top):
    """Monotone weights built by taking running maxima of random draws."""
    d = len(extent)
    w = {}
    for k in box(extent):
        u = []
        for i in range(d):
            floor = max((w[k[:j] + (k[j] - 1,) + k[j + 1:]][i] for j in range(d) if k[j]), default=0)
            u.append(rng.randint(floor, max(floor, top)))
        w[k] = tuple(u)
    return comb_mod.WeightSet(d, tuple(extent), w)


def _family_weights(rng, count):
    for _ in range(count):
        d = rng.choice((2, 2, 3))
        extent = tuple(rng.randint(0, 2) for _ in range(d))
        ws = _random_monotone_weights(rng, extent, 3)
        x = [4] * d
        formula = count_from_weights(ws.weights, extent, x)
        brute = comb_mod.count_increasing_bruteforce(extent, x, ws)
        yield (sum(extent), ws.key()), {"weights": ws.to_json(), "x": x}, formula, brute


FAMILIES = {
    "lp": _family_lp,
    "affine2d": _family_affine2d,
    "hollow": _family_hollow,
    "weights": _family_weights,
}


def cmd_oracle_diff(args) -> int:
    names = list(FAMILIES) if args.family == "all" else [args.family]
    report = []
    worst = None
    for name in names:
        rng = random.Random(f"{args.seed}:oracle:{name}")
        checked = 0
        mismatches = []
        for size, instance, formula, brute in FAMILIES[name](rng, args.count):
            checked += 1
            if formula != brute:
                mismatches.append((size, instance, str(formula), brute))
        mismatches.sort(key=lambda m: m[0])
        entry = {"family": name, "checked": checked, "mismatches": len(mismatches)}
        if mismatches:
            size, inst, f, b = mismatches[0]
            entry["minimal_failure"] = {"instance": inst, "formula": f, "bruteforce": b}
            worst = worst or entry
        report.append(entry)
    doc = {"command": "oracle-diff", "seed": args.seed, "families": report, "ok": worst is None}
    emit(doc, args.format)
    return EXIT_OK if worst is None else EXIT_FAIL


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="goncarov", description="Exact difference Goncarov polynomials and counts.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("poly-uni", parents=[common], help="univariate polynomial g_n(x; nodes)")
    s.add_argument("--nodes", default="", help="comma list of rationals a_0,a_1,...")
    s.add_argument("--n", type=int, help="degree (default: number of nodes)")
    s.add_argument("--method", choices=("recursion", "determinant"), default="recursion")
    s.set_defaults(func=cmd_poly_uni)

    s = sub.add_parser("poly-multi", parents=[common], help="multivariate polynomial g_n(x; Z)")
    s.add_argument("--grid", required=True, help="O, affine:MATRIX[@OFFSET], or a JSON file")
    s.add_argument("--n", required=True, help="extent i,j[,k...]")
    s.set_defaults(func=cmd_poly_multi)

    s = sub.add_parser("count-lp", parents=[common], help="lattice paths under a right boundary")
    s.add_argument("--bounds", required=True)
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_count_lp)

    s = sub.add_parser("count-ipf", parents=[common], help="increasing U-parking functions for a weight set")
    s.add_argument("--weights", required=True, help="affine:MATRIX[@OFFSET] or a WeightSet JSON file")
    s.add_argument("--n", required=True)
    s.add_argument("--x", help="value bound per coordinate (default: unbounded)")
    s.add_argument("--brute", action="store_true", help="also count by enumeration")
    s.set_defaults(func=cmd_count_ipf)

    s = sub.add_parser("count-affine", parents=[common], help="closed-form count for affine weights")
    s.add_argument("--matrix", required=True, help="row-major entries")
    s.add_argument("--offset")
    s.add_argument("--n", required=True)
    s.set_defaults(func=cmd_count_affine)

    s = sub.add_parser("verify", parents=[common], help="randomized identity suites")
    s.add_argument("--all", action="store_true", help="every suite, including 3-variable spot checks")
    s.add_argument("--identity", action="append", help="restrict to an identity (repeatable)")
    s.add_argument("--count", type=int, default=50)
    s.add_argument("--order", type=int, default=5, help="Appell truncation order")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle-diff", parents=[common], help="formula vs brute-force comparison")
    s.add_argument("--family", choices=("all", *FAMILIES), default="all")
    s.add_argument("--count", type=int, default=30)
    s.set_defaults(func=cmd_oracle_diff)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, ArithmeticError, AssertionError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
