from fractions import Fraction

import pytest
import sympy

from tropreal.utils import (
    convex_hull,
    exact_inverse,
    exact_nullspace,
    exact_rank,
    format_fraction,
    homogeneous,
    lattice_length,
    lower_hull,
    moment_combination,
    monomials,
    planar,
    primitive,
    simplex_points,
    to_fraction,
)


@pytest.mark.parametrize(
    "value, expected",
    [
        (3, Fraction(3)),
        ("-2/5", Fraction(-2, 5)),
        (" 7 ", Fraction(7)),
        (Fraction(1, 3), Fraction(1, 3)),
        (sympy.Rational(3, 4), Fraction(3, 4)),
    ],
)
def test_to_fraction(value, expected):
    assert to_fraction(value) == expected


@pytest.mark.parametrize("value", [True, 0.5, None])
def test_to_fraction_rejects(value):
    with pytest.raises(TypeError):
        to_fraction(value)


def test_format_fraction():
    assert format_fraction(Fraction(4, 2)) == 2
    assert format_fraction(Fraction(-1, 2)) == "-1/2"


def test_primitive():
    assert primitive([2, 0, 0, 6]) == ((1, 0, 0, 3), Fraction(2))
    assert primitive([Fraction(1, 2), Fraction(-1, 2)]) == ((1, -1), Fraction(1, 2))
    with pytest.raises(ValueError):
        primitive([0, 0])


def test_lattice_length():
    assert lattice_length((4, -6)) == 2


def test_exact_rank_and_nullspace():
    rows = [[1, 1, 1, 1]]
    assert exact_rank(rows) == 1
    kernel = exact_nullspace(rows, 4)
    assert len(kernel) == 3
    for vector in kernel:
        assert sum(vector) == 0
    assert exact_nullspace([], 2) == [(1, 0), (0, 1)]
    assert exact_rank([]) == 0


def test_exact_inverse():
    assert exact_inverse([[2, 0], [0, 4]]) == [
        (Fraction(1, 2), 0),
        (0, Fraction(1, 4)),
    ]


def test_monomials_order():
    assert monomials(1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    exponents = monomials(2)
    assert exponents[0] == (2, 0, 0)
    assert exponents[-1] == (0, 0, 2)
    assert len(exponents) == 6
    assert len(monomials(5)) == 21


def test_planar_and_homogeneous():
    assert planar((1, 2, 3)) == (2, 3)
    assert homogeneous((2, 3), 6) == (1, 2, 3)
    assert sorted(simplex_points(1)) == [(0, 0), (0, 1), (1, 0)]


def test_moment_combination():
    assert moment_combination([(1, 0), (0, 1)], 3) == (1, 3)
    assert moment_combination([], 2) == ()


def test_convex_hull_counterclockwise_from_smallest():
    points = [(0, 0), (2, 0), (1, 1), (0, 2), (1, 0)]
    assert convex_hull(points) == [(0, 0), (2, 0), (0, 2)]


def test_lower_hull():
    assert lower_hull([(0, 0), (1, 0), (2, 1)]) == [(0, 0), (1, 0), (2, 1)]
    assert lower_hull([(0, 0), (1, 1), (2, 0)]) == [(0, 0), (2, 0)]
