import random
from fractions import Fraction
from itertools import product

import pytest

from conftest import FOUR_VARIABLES, poly
from tropreal import l32, realizability
from tropreal.exceptions import IdealError, PolytopeError, ProjectionError
from tropreal.l32 import (
    P1_BASIS,
    P3_BASIS,
    PolytopePair,
    RowStats,
    Side,
    build_fmu,
    check_binomial_identities,
    decide_one_edge,
    fan_realizable_opposite,
    gen_binom,
    generic_fmu_sum,
    in_lambda1,
    in_lambda3,
    length_interval,
    length_necessary,
    lift_curve_l32,
    one_edge_curve,
    opposite_cone_fans,
    relation_coeffs,
    require_plane,
    row_stats,
    substitute_b_from_a,
)
from tropreal.matroid import PlaneIdeal
from tropreal.newton import LatticePolytope, tropicalize_poly
from tropreal.projection import project_polynomial, pushforward
from tropreal.utils import planar


@pytest.fixture
def weight3_pair(weight3):
    return PolytopePair.from_curve(weight3.curve)


@pytest.mark.parametrize(
    "n, k, expected", [(5, 2, 10), (-3, 2, 6), (4, -1, 0), (2, 3, 0), (0, 0, 1)]
)
def test_gen_binom(n, k, expected):
    assert gen_binom(n, k) == expected


@pytest.mark.parametrize("a, b, c", [(0, 4, 2), (1, 3, 2), (2, 4, 3), (2, 6, 4)])
def test_binomial_identities(a, b, c):
    assert check_binomial_identities(a, b, c)


def test_substitute_b_from_a():
    b = substitute_b_from_a({(0, 0): 5, (1, 0): 2, (0, 1): 3}, 1)
    assert b == {(0, 0): 3, (1, 0): 1, (0, 1): -2}


def test_substitute_matches_projection():
    text = "x0^2 + 3*x0*x1 - x1*x2 + 2*x2^2"
    a = {planar(e): c for e, c in poly(text).level(0).items()}
    b = substitute_b_from_a(a, 2)
    image = project_polynomial(l32.plane(), poly(text, FOUR_VARIABLES), P1_BASIS)
    assert {planar(e): c for e, c in image.level(0).items()} == {
        k: v for k, v in b.items() if v
    }


def test_relation_coeffs():
    beta, alpha = relation_coeffs(1, 0, 0, 1, 0)
    assert beta == {(0, 0): 1, (1, 0): -1}
    assert alpha == {(0, 0): 1, (0, 1): -1}

    beta, _ = relation_coeffs(2, 1, 0, 1, 0)
    assert beta == {(1, 0): 1, (2, 0): -2}

    with pytest.raises(ValueError):
        relation_coeffs(1, 1, 1, 0, 0)


def test_polytope_pair(weight3_pair):
    assert weight3_pair.d == 3
    assert weight3_pair.p3 == LatticePolytope([(0, 2), (0, 3), (3, 0)])
    assert weight3_pair.p1 == LatticePolytope([(0, 0), (2, 1), (0, 3)])


def test_polytope_pair_errors():
    triangle = LatticePolytope([(0, 0), (1, 0), (0, 1)])
    with pytest.raises(PolytopeError):
        PolytopePair(LatticePolytope([(0, 0), (1, 0)]), triangle, 1)
    with pytest.raises(PolytopeError):
        PolytopePair(triangle, LatticePolytope([(0, 0), (2, 0), (0, 2)]), 1)


def test_row_stats(weight3_pair):
    assert row_stats(weight3_pair, (0, 2), Side.P3) == RowStats(1, 2, 1, 1)
    assert row_stats(weight3_pair, (2, 1), Side.P1) == RowStats(2, 1, 1, 1)
    with pytest.raises(PolytopeError):
        row_stats(weight3_pair, (1, 1), Side.P3)


@pytest.mark.parametrize(
    "name, interval",
    [
        ("weight3", "[2, 2]"),
        ("intro", "[1/2, 1]"),
        ("ex_rec", "[1, 1]"),
        ("ex_empty", "empty"),
    ],
)
def test_length_interval(request, name, interval):
    parsed = request.getfixturevalue(name)
    assert str(length_interval(PolytopePair.from_curve(parsed.curve))) == interval


def test_fan_realizable_opposite(weight3, ex_rec, ex_empty):
    assert fan_realizable_opposite(PolytopePair.from_curve(weight3.curve))
    assert fan_realizable_opposite(PolytopePair.from_curve(ex_empty.curve))
    verdict = fan_realizable_opposite(PolytopePair.from_curve(ex_rec.curve))
    assert not verdict
    assert (Side.P3, (1, 1)) in verdict.obstructions


@pytest.mark.parametrize(
    "q, q_prime, expected",
    [
        (2, 1, True),
        (0, 0, True),
        (1, 1, False),
        (1, 2, False),
        (3, 1, False),
        (1, 0, False),
    ],
)
def test_decide_one_edge_weight3(weight3_pair, q, q_prime, expected):
    assert decide_one_edge(weight3_pair, q, q_prime) is expected


def test_decide_one_edge_other_curves(ex_rec, ex_empty):
    rec = PolytopePair.from_curve(ex_rec.curve)
    assert not any(decide_one_edge(rec, q, 1) for q in (0, Fraction(1, 2), 1, 2))
    empty = PolytopePair.from_curve(ex_empty.curve)
    assert decide_one_edge(empty, 0, 0)
    assert not decide_one_edge(empty, 1, 1)


def test_length_necessary(weight3_pair):
    p3, p1 = weight3_pair.p3, weight3_pair.p1
    assert length_necessary(p3, p1, (0, 2), 2, 1)
    assert not length_necessary(p3, p1, (0, 2), 1, 1)
    with pytest.raises(PolytopeError):
        length_necessary(p3, p1, (1, 1), 1, 1)


def test_build_fmu(weight3_pair):
    cube = poly("x0^3 + 3*x0^2*x3 + 3*x0*x3^2 + x3^3", FOUR_VARIABLES)
    assert build_fmu(weight3_pair, (3, 0), Side.P3) == cube
    assert build_fmu(weight3_pair, (0, 2), Side.P3) == poly(
        "x2^2*x3", FOUR_VARIABLES
    )


def test_build_fmu_obstructed(ex_rec):
    pair = PolytopePair.from_curve(ex_rec.curve)
    with pytest.raises(PolytopeError):
        build_fmu(pair, (1, 1), Side.P3)


def test_generic_fmu_sum(weight3_pair):
    total = generic_fmu_sum(weight3_pair)
    for basis, polytope in ((P3_BASIS, weight3_pair.p3), (P1_BASIS, weight3_pair.p1)):
        image = project_polynomial(l32.plane(), total, basis)
        assert LatticePolytope([planar(e) for e in image.support()]) == polytope


def test_one_edge_curve(weight3, weight3_pair):
    assert one_edge_curve(weight3_pair, 2, 1) == weight3.curve
    fan = one_edge_curve(weight3_pair, 0, 0)
    assert fan.is_fan()
    assert fan == weight3.curve.recession_fan().to_curve()
    with pytest.raises(ValueError):
        one_edge_curve(weight3_pair, -1, 1)


def test_opposite_cone_fans():
    fans = list(opposite_cone_fans(1))
    assert len(fans) == 4
    assert all(f.is_fan() and f.degree() == 1 for f in fans)
    assert all(f.check_balanced() for f in opposite_cone_fans(2))


def test_lift_curve(singular):
    c3 = pushforward(singular.curve, P3_BASIS)
    c1 = pushforward(singular.curve, P1_BASIS)
    assert lift_curve_l32(c3, c1) == singular.curve


def test_lift_curve_errors(singular, weight3):
    c3 = pushforward(singular.curve, P3_BASIS)
    with pytest.raises(ProjectionError):
        lift_curve_l32(c3, pushforward(weight3.curve, P1_BASIS))
    with pytest.raises(ProjectionError):
        lift_curve_l32(c3, singular.curve)


def test_engine_agrees_on_realizable_curve(weight3):
    assert realizability.decide(weight3.ideal, weight3.curve)


def test_engine_agrees_on_obstructed_curve(ex_rec):
    assert not realizability.decide(ex_rec.ideal, ex_rec.curve)


def test_binomial_identities_exhaustive():
    assert all(
        check_binomial_identities(a, b, c) for a, b, c in product(range(13), repeat=3)
    )


def test_relation_coeffs_on_random_coefficients():
    rng = random.Random(20)
    for _ in range(40):
        d = rng.randint(1, 6)
        k = rng.randint(0, d)
        n = rng.randint(0, d - k)
        l, m = rng.randint(0, n + 1), rng.randint(0, k + 1)
        beta, alpha = relation_coeffs(d, k, n, l, m)
        assert all(in_lambda1(point, d, k, n, l) for point in beta)
        assert all(in_lambda3(point, d, k, n, m) for point in alpha)

        a = {
            (i, j): rng.randint(-9, 9) for i in range(d + 1) for j in range(d - i + 1)
        }
        b = substitute_b_from_a(a, d)
        assert sum(c * b[point] for point, c in beta.items()) == sum(
            c * a[point] for point, c in alpha.items()
        )


def test_require_plane(weight3):
    require_plane(l32.plane())
    require_plane(PlaneIdeal([[2, 2, 2, 2]]))
    for matrix in ([[2, 1, 1, 1]], [[1, 2, 3, 4]], [[1, 1, 1, 1, 1], [1, 2, 3, 4, 5]]):
        with pytest.raises(IdealError):
            require_plane(PlaneIdeal(matrix))
    with pytest.raises(IdealError):
        PolytopePair.from_curve(weight3.curve, PlaneIdeal([[1, 2, 3, 4]]))
    assert PolytopePair.from_curve(weight3.curve, weight3.ideal).d == 3


def test_lift_curve_rejects_unbalanced_lift():
    # meets the open cone(e1, e3), so the two projections do not determine it
    quadric = poly("(-2*t^2)*x0^2+(t^2)*x0*x2+x1*x2-t*x2^2", FOUR_VARIABLES)
    c3 = tropicalize_poly(project_polynomial(l32.plane(), quadric, P3_BASIS))
    c1 = tropicalize_poly(project_polynomial(l32.plane(), quadric, P1_BASIS))
    with pytest.raises(ProjectionError, match="unbalanced"):
        lift_curve_l32(c3, c1)


def test_lift_fan_of_generic_sum(weight3_pair):
    total = generic_fmu_sum(weight3_pair)
    c3 = tropicalize_poly(project_polynomial(l32.plane(), total, P3_BASIS))
    c1 = tropicalize_poly(project_polynomial(l32.plane(), total, P1_BASIS))
    fan = lift_curve_l32(c3, c1)
    assert fan.is_fan()
    assert fan == one_edge_curve(weight3_pair, 0, 0)

    assert realizability.decide(l32.plane(), fan)
    found = realizability.certificate(l32.plane(), fan)
    assert found is not None
    assert realizability.verify_certificate(l32.plane(), fan, found.polynomial)


@pytest.mark.parametrize("q, q_prime", [(2, 1), (0, 0), (1, 1), (1, 2), (3, 1)])
def test_engine_matches_one_edge_criterion(weight3_pair, q, q_prime):
    curve = one_edge_curve(weight3_pair, q, q_prime)
    decision = realizability.decide(l32.plane(), curve)
    assert bool(decision) is decide_one_edge(weight3_pair, q, q_prime)


@pytest.mark.parametrize("q, q_prime", [(1, 1), (1, 2), (3, 1)])
def test_engine_rejects_wrong_lengths(weight3_pair, q, q_prime):
    assert not realizability.decide(
        l32.plane(), one_edge_curve(weight3_pair, q, q_prime)
    )


def test_engine_on_empty_interval(ex_empty):
    assert not realizability.decide(ex_empty.ideal, ex_empty.curve)
    recession = ex_empty.curve.recession_fan().to_curve()
    assert realizability.decide(ex_empty.ideal, recession)


@pytest.mark.parametrize(
    "q, admitted",
    [
        (Fraction(1, 4), False),
        (Fraction(1, 2), True),
        (Fraction(3, 4), True),
        (1, True),
        (Fraction(3, 2), False),
        (2, False),
    ],
)
def test_intro_ratio_grid(intro, q, admitted):
    interval = length_interval(PolytopePair.from_curve(intro.curve))
    assert interval.admits(q, 1) is admitted
    assert interval.admits(2 * q, 2) is admitted


@pytest.mark.parametrize("q", [Fraction(1, 4), Fraction(1, 2), 1, 2])
def test_engine_on_intro_ratios(intro, q):
    pair = PolytopePair.from_curve(intro.curve)
    curve = one_edge_curve(pair, q, 1)
    assert bool(realizability.decide(intro.ideal, curve)) is decide_one_edge(pair, q, 1)
