import pytest

from conftest import FOUR_VARIABLES, poly
from tropreal.curve import TropicalCurve
from tropreal.exceptions import IdealError, PolynomialError
from tropreal.matroid import PlaneMatroid
from tropreal.newton import LatticePolytope, PuiseuxPolynomial, newton_polytope
from tropreal.projection import (
    coeff_map,
    project_point,
    project_polynomial,
    pushforward,
    substitution,
)


def test_project_point():
    assert project_point([0, 1, 1, 0], (0, 2, 3)) == (0, 1, 0)
    assert project_point([2, 0, 0, 2], (1, 2, 3)) == (0, 0, 2)


def test_pushforward_singular(singular):
    image = pushforward(singular.curve, (0, 1, 2))
    expected = TropicalCurve(
        2,
        [[0, 1, 1]],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        [(0, 1), (0, 2), (0, 3)],
        [1, 1, 1],
    )
    assert image == expected
    assert image.vertices == ((0, 1, 1),)
    assert image.degree() == 1


def test_pushforward_weights(weight3):
    p3 = newton_polytope(pushforward(weight3.curve, (0, 1, 2)))
    p1 = newton_polytope(pushforward(weight3.curve, (0, 2, 3)))
    assert p3 == LatticePolytope([(0, 2), (0, 3), (3, 0)])
    assert p1 == LatticePolytope([(0, 0), (2, 1), (0, 3)])


def test_pushforward_keeps_degree(intro, plane):
    for basis in PlaneMatroid(plane).enumerate_bases():
        assert pushforward(intro.curve, basis).degree() == 4


def test_substitution(plane):
    forms = substitution(PlaneMatroid(plane), (0, 1, 2))
    assert forms[0] == (1, 0, 0)
    assert forms[3] == (-1, -1, -1)
    with pytest.raises(IdealError):
        substitution(PlaneMatroid(plane), (0, 1, 1))


def test_coeff_map(plane):
    mapping = coeff_map(plane, (0, 1, 2), (0, 2, 3), 1)
    assert mapping.matrix == ((1, -1, 0), (0, -1, 1), (0, -1, 0))
    assert mapping.row((0, 0, 1)) == (0, -1, 0)
    assert mapping.apply([1, 1, 0]) == (0, -1, -1)
    assert mapping.apply_polynomial(poly("x0+x1")) == poly("-x1-x2")


def test_coeff_map_compose(plane):
    forward = coeff_map(plane, (0, 1, 2), (0, 2, 3), 2)
    backward = coeff_map(plane, (0, 2, 3), (0, 1, 2), 2)
    identity = backward.compose(forward)
    assert identity.source == identity.target == (0, 1, 2)
    assert identity.matrix == tuple(
        tuple(int(i == j) for j in range(6)) for i in range(6)
    )
    with pytest.raises(IdealError):
        forward.compose(forward)


def test_coeff_map_rejects_non_basis(plane):
    with pytest.raises(IdealError):
        coeff_map(plane, (0, 1, 1), (0, 2, 3), 1)


def test_apply_polynomial_degree_mismatch(plane):
    mapping = coeff_map(plane, (0, 1, 2), (0, 2, 3), 1)
    with pytest.raises(PolynomialError):
        mapping.apply_polynomial(poly("x0^2"))


def test_project_polynomial(plane):
    source = PuiseuxPolynomial.from_text("(t)*x0+x1+(t+1)*x2", FOUR_VARIABLES)
    image = project_polynomial(plane, source, (0, 2, 3))
    assert image == poly("(t-1)*x0+t*x1-x2")


def test_project_polynomial_variable_count(plane):
    with pytest.raises(PolynomialError):
        project_polynomial(plane, poly("x0+x1"), (0, 2, 3))


@pytest.mark.parametrize("name", ["singular", "weight3", "intro", "ex_rec", "ex_empty"])
@pytest.mark.parametrize("basis", [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
def test_pushforward_commutes_with_recession(request, name, basis):
    curve = request.getfixturevalue(name).curve
    fan = curve.recession_fan().to_curve()
    image = pushforward(curve, basis)
    assert pushforward(fan, basis) == image.recession_fan().to_curve()
