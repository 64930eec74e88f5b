from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from goncarov.exact_poly import MultiPoly, evaluate, upper_factorial
from goncarov.goncarov_uni import (
    abel_uni_closed_form,
    arithmetic_nodes,
    check_biorthogonality,
    determinant_matrix,
    goncarov_ladder,
    goncarov_uni_determinant,
    goncarov_uni_recursion,
    goncarov_value,
    lattice_path_count,
    verify_identity_uni,
)

from conftest import SYMBOLS, node_lists, rationals, same

x = SYMBOLS[0]
X = MultiPoly.var(0, 1)


def count_sequences(bounds):
    """Non-decreasing x_0 <= x_1 <= ... with x_i < bounds[i], by enumeration."""
    n = len(bounds)
    top = max(bounds, default=0)
    return sum(
        1
        for seq in combinations_with_replacement(range(top), n)
        if all(v < b for v, b in zip(seq, bounds))
    )


def test_degree_zero_is_one():
    assert goncarov_uni_recursion([], 0).poly == MultiPoly.constant(1, 1)


def test_constant_nodes_give_shifted_upper_factorial():
    a = Fraction(3, 2)
    g = goncarov_uni_recursion([a] * 3, 3).poly
    assert same(g, sympy.expand((x - sympy.Rational(3, 2)) * (x - sympy.Rational(1, 2)) * (x + sympy.Rational(1, 2))))


def test_arithmetic_nodes_example():
    g = goncarov_uni_recursion([0, 1, 2], 3)
    assert same(g.poly, x * (x - 2) * (x - 1))
    assert check_biorthogonality(g.poly, [0, 1, 2], 3)


def test_determinant_examples():
    a0 = Fraction(-4, 3)
    assert goncarov_uni_determinant([a0], 1).poly == X - a0
    assert goncarov_uni_determinant([0, 0], 2).poly == upper_factorial(0, 2, 1)
    assert len(determinant_matrix([1, 2], 2)) == 3


def test_too_few_nodes_rejected():
    with pytest.raises(ValueError):
        goncarov_uni_recursion([1], 2)
    with pytest.raises(ValueError):
        goncarov_uni_recursion([1], -1)


@given(node_lists(max_size=5))
def test_dual_construction(nodes):
    n = len(nodes)
    assert goncarov_uni_determinant(nodes, n).poly == goncarov_uni_recursion(nodes, n).poly


@given(node_lists(max_size=6))
def test_biorthogonality(nodes):
    n = len(nodes)
    ladder = goncarov_ladder(nodes, n)
    for k, g in enumerate(ladder):
        assert check_biorthogonality(g, nodes, k)
        assert g.degree_in(0) == k


@given(node_lists(min_size=1, max_size=5), rationals)
def test_last_node_is_ignored(nodes, extra):
    n = len(nodes)
    assert goncarov_uni_recursion(nodes + [extra], n).poly == goncarov_uni_recursion(nodes, n).poly


@given(node_lists(max_size=5), rationals)
def test_value_matches_polynomial(nodes, point):
    n = len(nodes)
    assert goncarov_value(point, nodes, n) == evaluate(goncarov_uni_recursion(nodes, n).poly, (point,))


@given(rationals, rationals, st.integers(0, 5))
def test_abel_closed_form(a, b, n):
    assert abel_uni_closed_form(a, b, n) == goncarov_uni_recursion(arithmetic_nodes(a, b, n), n).poly


def test_abel_examples():
    assert abel_uni_closed_form(Fraction(2, 3), 0, 4) == goncarov_uni_recursion([Fraction(2, 3)] * 4, 4).poly
    assert evaluate(abel_uni_closed_form(-1, -1, 2), (0,)) / 2 == 2
    assert same(abel_uni_closed_form(0, 1, 3), x * (x - 2) * (x - 1))


def test_lattice_path_examples():
    assert lattice_path_count([1, 2, 3]) == 5
    assert lattice_path_count([1, 3]) == 3
    assert lattice_path_count([4] * 3) == comb(6, 3)
    assert lattice_path_count([], 0) == 1


@given(st.lists(st.integers(1, 6), max_size=5).map(sorted))
def test_lattice_path_count_matches_enumeration(bounds):
    assert lattice_path_count(bounds) == count_sequences(bounds)


@pytest.mark.parametrize("bounds", [[0, 1], [2, 1], [1, "a"], [Fraction(3, 2)]])
def test_lattice_path_count_rejects(bounds):
    with pytest.raises((ValueError, TypeError)):
        lattice_path_count(bounds)


def test_identity_examples():
    assert verify_identity_uni("difference", [3, -1, Fraction(1, 2), 7], 4)
    assert verify_identity_uni("shift", [1, 5, Fraction(-2, 3)], 3, {"t": 7})
    assert verify_identity_uni("appell", [1, 2, 3, 4, 5], 0, {"order": 5})
    with pytest.raises(ValueError):
        verify_identity_uni("nonsense", [], 0)


@given(node_lists(max_size=5), st.data())
def test_every_identity_holds(nodes, data):
    n = len(nodes)
    probe = MultiPoly(1, {(i,): data.draw(rationals) for i in range(n + 1)})
    assert verify_identity_uni("expansion", nodes, n, {"probe": probe})
    assert verify_identity_uni("difference", nodes, n)
    assert verify_identity_uni("shift", nodes, n, {"t": data.draw(rationals)})
    assert verify_identity_uni("sheffer", nodes, n, {"y": data.draw(rationals)})
    assert verify_identity_uni("sheffer", nodes, n, {"y": 0})
    if n >= 1:
        m = data.draw(st.integers(0, n - 1))
        assert verify_identity_uni("perturbation", nodes, n, {"m": m, "delta": data.draw(rationals)})


@given(node_lists(min_size=4, max_size=4))
def test_appell_order_four(nodes):
    assert verify_identity_uni("appell", nodes, 0, {"order": 4})


def test_perturbation_rejects_corner():
    with pytest.raises(ValueError):
        verify_identity_uni("perturbation", [1, 2], 2, {"m": 2, "delta": 1})


@given(node_lists(min_size=1, max_size=5))
def test_difference_with_wrong_factor_fails(nodes):
    n = len(nodes)
    wrong = goncarov_uni_recursion(nodes, n).poly * 2
    assert not check_biorthogonality(wrong, nodes, n)
