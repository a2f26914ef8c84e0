from fractions import Fraction

import pytest

from conftest import fan
from tropreal.curve import (
    Cell,
    TropicalCurve,
    WeightedFan,
    assemble_curve,
    from_chart,
    normalize,
    to_chart,
)
from tropreal.exceptions import CurveError, UnbalancedCurveError


def test_normalize():
    assert normalize([1, 2, 3]) == (0, 1, 2)
    assert normalize(["1/2", 1, "3/2"]) == (0, Fraction(1, 2), 1)
    assert normalize([2, 4, 2], direction=True) == (0, 1, 0)
    with pytest.raises(CurveError):
        normalize([1, 1], direction=True)


def test_chart():
    assert to_chart([1, 2, 3]) == (1, 2)
    assert from_chart((1, 2)) == (0, 1, 2)
    assert from_chart((-1, 0)) == (1, 0, 1)


@pytest.mark.parametrize(
    "vertices, rays, edges, weights",
    [
        ([[0, 0, 0]], [[0, 2, 0]], [(0, 1)], [1]),
        ([[0, 0, 0]], [[0, 1, 0]], [(0, 1)], [0]),
        ([[0, 0, 0]], [[0, 1, 0]], [(0, 2)], [1]),
        ([[0, 0, 0], [1, 1, 1]], [], [(0, 1)], [1]),
        ([[0, 0, 0]], [[0, 1, 0]], [(0, 1)], []),
    ],
)
def test_malformed_curves(vertices, rays, edges, weights):
    with pytest.raises(CurveError):
        TropicalCurve(2, vertices, rays, edges, weights)


def test_star_at(singular):
    star = singular.curve.star_at(0)
    assert set(star.rays) == {(0, 1, 0, 0), (0, 0, 1, 0), (1, 0, 0, 1)}
    assert star.is_balanced()
    assert star.degree() == 1
    with pytest.raises(CurveError):
        singular.curve.star_at(5)


def test_check_balanced(singular, weight3, ex_empty):
    assert singular.curve.check_balanced()
    assert weight3.curve.check_balanced()
    assert ex_empty.curve.check_balanced()

    verdict = fan(3, [[0, 1, 0, 0], [0, 0, 1, 0]]).check_balanced()
    assert not verdict
    assert verdict.violations == (0,)


def test_recession_fan(weight3):
    recession = weight3.curve.recession_fan()
    assert recession.rays == (
        (0, 1, 0, 0),
        (0, 2, 3, 0),
        (1, 0, 0, 0),
        (1, 0, 0, 3),
    )
    assert recession.weights == (1, 1, 2, 1)
    assert recession.degree() == 3


def test_recession_fan_weights(intro):
    recession = intro.curve.recession_fan()
    assert dict(zip(recession.rays, recession.weights))[(0, 1, 0, 0)] == 2
    assert recession.degree() == 4


def test_degree(singular, ex_empty):
    assert singular.curve.degree() == 1
    assert ex_empty.curve.degree() == 5
    with pytest.raises(UnbalancedCurveError):
        fan(3, [[0, 1, 0, 0], [0, 0, 1, 0]]).degree()


def test_fan_to_curve():
    weighted = WeightedFan(((0, 1, 0), (0, 1, 0), (1, 0, 1)), (1, 1, 2))
    curve = weighted.to_curve()
    assert curve.is_fan()
    assert curve.rays == ((0, 1, 0), (1, 0, 1))
    assert curve.weights == (2, 2)
    with pytest.raises(CurveError):
        WeightedFan(((0, 1, 0),), ())


def test_rescale(singular):
    rescaled = singular.curve.rescale(2)
    assert rescaled.vertices == ((0, 2, 2, 0), (2, 0, 0, 2))
    assert rescaled.rays == singular.curve.rays
    assert rescaled.weights == singular.curve.weights
    with pytest.raises(CurveError):
        singular.curve.rescale(0)


def test_integral_scale():
    rational = fan(2, [[0, 1, 0], [1, 0, 1]]).rescale(Fraction(1, 3))
    assert rational.integral_scale() == 1
    curve = TropicalCurve(
        2, [["1/2", 0, 0], [0, "1/3", 0]], [], [(0, 1)], [1]
    )
    assert curve.integral_scale() == 6


def test_vem(singular):
    data = singular.curve.to_vem()
    assert data["n"] == 3
    assert data["V"][0] == {"kind": "vertex", "coords": [0, 1, 1, 0]}
    assert data["V"][2] == {"kind": "ray", "coords": [0, 1, 0, 0]}
    assert data["E"] == [[1, 2], [1, 3], [1, 4], [2, 5], [2, 6]]
    assert data["M"] == [1, 1, 1, 1, 1]
    assert TropicalCurve.from_vem(data) == singular.curve


def test_vem_rational_coordinates():
    curve = TropicalCurve(2, [["1/2", 0, 0], [0, 0, 0]], [], [(0, 1)], [1])
    assert curve.to_vem()["V"][0]["coords"] == ["1/2", 0, 0]


def test_vem_errors():
    with pytest.raises(CurveError):
        TropicalCurve.from_vem({"V": [], "E": []}, 2)
    with pytest.raises(CurveError):
        TropicalCurve.from_vem(
            {"V": [{"kind": "point", "coords": [0, 0, 0]}], "E": [], "M": []}, 2
        )
    data = {
        "V": [
            {"kind": "ray", "coords": [0, 1, 0]},
            {"kind": "vertex", "coords": [0, 0, 0]},
        ],
        "E": [[1, 2]],
        "M": [1],
    }
    with pytest.raises(CurveError):
        TropicalCurve.from_vem(data, 2)


def test_canonical_merges_straight_vertices():
    subdivided = TropicalCurve(
        2,
        [[0, 0, 0], [0, 1, 0]],
        [[0, 1, 0], [1, 0, 1]],
        [(0, 1), (1, 2), (0, 3)],
        [1, 1, 1],
    )
    line = fan(2, [[0, 1, 0], [1, 0, 1]])
    assert subdivided == line
    assert hash(subdivided) == hash(line)
    assert subdivided.canonical().vertices == ((0, 0, 0),)


def test_contains_point(singular):
    curve = singular.curve
    assert curve.contains_point([0, 1, 1, 0])
    assert curve.contains_point([0, 0, 0, 0])
    assert curve.contains_point([0, 5, 1, 0])
    assert not curve.contains_point([0, 5, 5, 0])


def test_cells(singular):
    cells = singular.curve.cells()
    bounded = [cell for cell in cells if not cell.is_ray]
    assert len(bounded) == 1
    assert bounded[0].start == (1, 1, 0)
    assert bounded[0].direction == (-1, -1, 0)
    assert bounded[0].length == 2
    assert bounded[0].end == (-1, -1, 0)
    assert bounded[0].contains((0, 0, 0))
    assert not bounded[0].contains((-2, -2, 0))


def test_assemble_overlapping_cells():
    cells = [
        Cell((Fraction(0), Fraction(0)), (1, 0), None, 1),
        Cell((Fraction(1), Fraction(0)), (1, 0), None, -1),
    ]
    curve = assemble_curve(cells, 2)
    assert curve.vertices == ((0, 0, 0), (0, 1, 0))
    assert curve.edges == ((0, 1),)
    assert curve.weights == (1,)


def test_assemble_cancellation():
    cells = [
        Cell((Fraction(0), Fraction(0)), (1, 0), None, 1),
        Cell((Fraction(0), Fraction(0)), (1, 0), None, -1),
    ]
    assert not assemble_curve(cells, 2).edges


def test_assemble_negative_weight():
    with pytest.raises(CurveError):
        assemble_curve([Cell((Fraction(0), Fraction(0)), (1, 0), None, -1)], 2)
