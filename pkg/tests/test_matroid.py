import pytest

from conftest import fan, load
from tropreal.exceptions import IdealError
from tropreal.matroid import (
    PlaneIdeal,
    PlaneMatroid,
    matroid_from_ideal,
    standard_plane,
)


def test_standard_plane(plane):
    matroid = PlaneMatroid(plane)
    assert matroid.enumerate_bases() == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert len(matroid.flats(1)) == 4
    assert len(matroid.flats(2)) == 6
    assert len(matroid.maximal_cones()) == 12
    assert len(matroid.bergman_cones()) == 4 + 6 + 12
    assert matroid.flats(3) == [frozenset(range(4))]
    assert matroid_from_ideal(plane).enumerate_bases() == matroid.enumerate_bases()


def test_rank_and_closure(plane):
    matroid = PlaneMatroid(plane)
    assert matroid.rank({0, 1}) == 2
    assert matroid.rank({0, 1, 2, 3}) == 3
    assert matroid.closure({0, 1, 2}) == frozenset(range(4))
    assert matroid.is_flat({0, 1})
    assert not matroid.is_flat({0, 1, 2})
    assert matroid.is_basis((0, 2, 3))
    assert not matroid.is_basis((0, 0, 1))


def test_parallel_elements():
    matroid = PlaneMatroid(PlaneIdeal([[1, -1, 0, 0]]))
    assert matroid.enumerate_bases() == [(0, 2, 3), (1, 2, 3)]
    assert frozenset({0, 1}) in matroid.flats(1)
    assert len(matroid.maximal_cones()) == 6


def test_cone_of(plane):
    matroid = PlaneMatroid(plane)
    cone = matroid.cone_of([0, 2, 1, 0])
    assert cone.flats == (frozenset({1}), frozenset({1, 2}))
    assert cone.is_maximal()
    assert str(cone) == "cone({1} < {1,2})"
    assert matroid.cone_of([0, 0, 0, 0]).dimension == 0
    assert matroid.cone_of([1, 1, 1, 0]) is None
    assert matroid.in_support([0, 1, 1, 0])


def test_contains_curve(plane, singular):
    matroid = PlaneMatroid(plane)
    assert matroid.contains_curve(singular.curve)

    verdict = matroid.contains_curve(load("outside_plane.json").curve)
    assert not verdict
    assert verdict.edges == (0,)
    assert (1, 1, 1, 0) in verdict.points


def test_contains_curve_dimension_mismatch(plane):
    with pytest.raises(IdealError):
        PlaneMatroid(plane).contains_curve(fan(2, [[0, 1, 0], [1, 0, 1]]))


@pytest.mark.parametrize(
    "matrix, n",
    [
        ([[1, 1, 1, 1], [1, 2, 3, 4]], None),
        ([], 3),
        ([[1, 1, 1]], 3),
        ([[1, 1]], None),
    ],
)
def test_bad_ideals(matrix, n):
    with pytest.raises(IdealError):
        PlaneIdeal(matrix, n)


def test_ideal_with_monomial():
    with pytest.raises(IdealError):
        PlaneMatroid(PlaneIdeal([[1, 0, 0, 0]]))


def test_ideal_text():
    assert str(PlaneIdeal([[1, 1, 1, 1]])) == "(x0+x1+x2+x3)"
    assert str(PlaneIdeal([[1, -1, 0, 0]])) == "(x0-x1)"
    assert str(PlaneIdeal([[2, 1, 1, 1]])) == "(2*x0+x1+x2+x3)"
    assert PlaneIdeal([[1, 1, 1, 1]]) == standard_plane(3)


def test_projective_plane():
    ideal = PlaneIdeal([], 2)
    matroid = PlaneMatroid(ideal)
    assert matroid.enumerate_bases() == [(0, 1, 2)]
    assert matroid.contains_curve(fan(2, [[0, 1, 0], [1, 0, 1]]))


def test_larger_standard_plane():
    matroid = PlaneMatroid(standard_plane(4))
    assert matroid.n == 4
    assert len(matroid.enumerate_bases()) == 10


def test_two_block_ideal():
    matroid = PlaneMatroid(PlaneIdeal([[1, 1, 1, 0, 0], [0, 0, 0, 1, 1]]))
    assert matroid.enumerate_bases() == [
        (0, 1, 3),
        (0, 1, 4),
        (0, 2, 3),
        (0, 2, 4),
        (1, 2, 3),
        (1, 2, 4),
    ]


def test_support_membership(plane):
    matroid = PlaneMatroid(plane)
    assert matroid.in_support([0, 1, 0, 1])
    assert not matroid.in_support([0, 3, 1, 2])


@pytest.mark.parametrize("coefficient", [0.5, "sqrt(2)", None])
def test_ideal_needs_rational_coefficients(coefficient):
    with pytest.raises(IdealError):
        PlaneIdeal([[1, 1, 1, coefficient]])
