import sys
from fractions import Fraction

import sympy
from hypothesis import settings, strategies as st

from goncarov.exact_poly import MultiPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SYMBOLS = sympy.symbols("x y z")

rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


def polys(arity=2, max_deg=3, max_terms=6):
    exps = st.tuples(*[st.integers(0, max_deg)] * arity)
    return st.dictionaries(exps, rationals, max_size=max_terms).map(lambda t: MultiPoly(arity, t))


def node_lists(min_size=0, max_size=6):
    return st.lists(rationals, min_size=min_size, max_size=max_size)


def to_sympy(p: MultiPoly):
    out = sympy.Integer(0)
    for exps, c in p.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(SYMBOLS, exps):
            term *= s ** e
        out += term
    return sympy.expand(out)


def same(p: MultiPoly, expr) -> bool:
    return sympy.expand(to_sympy(p) - expr) == 0


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
