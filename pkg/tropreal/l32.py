"""
    Closed-form realizability criteria for curves in the tropical plane of
    x0 + x1 + x2 + x3 = 0.

    P3 is the Newton polytope of the push-forward onto (x0, x1, x2), with
    rows along the diagonals (row number = exponent of x0); P1 is the Newton
    polytope of the push-forward onto (x0, x2, x3), with rows along the
    columns (row number = exponent of x2).
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import factorial, gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from tropreal.curve import Cell, TropicalCurve, assemble_curve
from tropreal.exceptions import (
    CurveError,
    IdealError,
    PolytopeError,
    ProjectionError,
)
from tropreal.matroid import PlaneIdeal, standard_plane
from tropreal.newton import LatticePolytope, PuiseuxPolynomial, newton_polytope
from tropreal.projection import project_polynomial, pushforward
from tropreal.utils import (
    Point2,
    exact_rank,
    planar,
    primitive,
    simplex_points,
    to_fraction,
)

logger = logging.getLogger(__name__)

P3_BASIS = (0, 1, 2)
P1_BASIS = (0, 2, 3)
MAX_GENERIC_ATTEMPTS = 16


def plane() -> PlaneIdeal:
    return standard_plane(3)


def require_plane(ideal: PlaneIdeal) -> None:
    """
    Reject any ideal other than the one generated by x0 + x1 + x2 + x3, up to
    scaling.

    :param ideal: PlaneIdeal
    """
    expected = plane()
    if ideal.n != expected.n or exact_rank(ideal.matrix + expected.matrix) != 1:
        raise IdealError(f"expected the plane {expected}, got {ideal}")


def gen_binom(n: int, k: int) -> int:
    """
    Binomial coefficient for any integer n: n(n-1)...(n-k+1)/k!, and 0 for
    negative k.

    :param n: Any integer.
    :param k: Any integer.

    :return: int
    """
    if k < 0:
        return 0
    numerator = 1
    for factor in range(n, n - k, -1):
        numerator *= factor
    return numerator // factorial(k)


def check_binomial_identities(a: int, b: int, c: int) -> bool:
    """
    Check the two alternating binomial sums
    sum_j (-1)^j C(a,j) C(b+j,c) = (-1)^a C(b,c-a) and
    sum_j (-1)^j C(a,j) C(b-j,c) = C(b-a,c-a).

    :return: True when both hold
    """
    first = sum((-1) ** j * gen_binom(a, j) * gen_binom(b + j, c) for j in range(a + 1))
    second = sum(
        (-1) ** j * gen_binom(a, j) * gen_binom(b - j, c) for j in range(a + 1)
    )
    holds = (
        first == (-1) ** a * gen_binom(b, c - a)
        and second == gen_binom(b - a, c - a)
    )
    if not holds:
        logger.debug("binomial identities fail for a=%d b=%d c=%d", a, b, c)
    return holds


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _b_row(i: int, j: int, d: int) -> Dict[Point2, int]:
    """
    Coefficient b_(i,j) of f1 as a combination of the coefficients a of f3.
    """
    row: Dict[Point2, int] = {}
    for s in range(i + 1):
        for t in range(d - i - j + 1):
            value = (
                _sign(d - t - s)
                * gen_binom(d - t - s, i - s)
                * gen_binom(d - i - t, j)
            )
            if value:
                key = (d - t - s, s)
                row[key] = row.get(key, 0) + value
    return row


def substitute_b_from_a(a: Dict[Point2, object], d: int) -> Dict[Point2, Fraction]:
    """
    Coefficients of f1(x0, x2, x3) = f3(x0, -x0-x2-x3, x2).

    :param a: {(i, j): coefficient of x0^(d-i-j) x1^i x2^j}, missing means 0.
    :param d: The degree.

    :return: {(i, j): coefficient of x0^(d-i-j) x2^i x3^j} for every lattice
        point of the degree d simplex
    """
    values = {tuple(k): to_fraction(v) for k, v in a.items()}
    result = {}
    for i, j in sorted(simplex_points(d)):
        row = _b_row(i, j, d)
        result[(i, j)] = sum(
            (c * values.get(point, Fraction(0)) for point, c in row.items()),
            Fraction(0),
        )
    return result


def in_lambda1(point: Sequence[int], d: int, k: int, n: int, l: int) -> bool:
    i, j = point
    return k <= i <= d - n and (j < l or j >= d - i - n + l)


def in_lambda3(point: Sequence[int], d: int, k: int, n: int, m: int) -> bool:
    s = point[1]
    t = d - point[0] - point[1]
    return n <= t <= d - k and (s < m or s >= d - t - k + m)


def relation_coeffs(
    d: int, k: int, n: int, l: int, m: int
) -> Tuple[Dict[Point2, int], Dict[Point2, int]]:
    """
    The linear relation sum beta_nu b_nu = sum alpha_nu a_nu between the
    coefficients of f1 and f3, with beta supported on Lambda1, alpha on
    Lambda3 and beta_(k, l-1) = 1.

    :return: (beta, alpha) with zero entries left out
    """
    if min(d, k, n, l, m) < 0 or k + n > d or l > n + 1 or m > k + 1:
        raise ValueError(f"invalid relation parameters d={d} k={k} n={n} l={l} m={m}")
    beta: Dict[Point2, int] = {}
    for i in range(k, d - n + 1):
        for j in range(d - i + 1):
            value = (
                _sign(i - k + l - 1 - j)
                * gen_binom(i - m, i - k)
                * gen_binom(d - i - n + l - 1 - j, d - i - n)
            )
            if value:
                beta[(i, j)] = value
    alpha: Dict[Point2, int] = {}
    for (i, j), factor in beta.items():
        for point, value in _b_row(i, j, d).items():
            alpha[point] = alpha.get(point, 0) + factor * value
    return beta, {point: value for point, value in alpha.items() if value}


class Side(Enum):
    P3 = "P3"
    P1 = "P1"


@dataclass(frozen=True)
class RowStats:
    s: int
    n: int
    r: int
    l: int

    @property
    def obstructed(self) -> bool:
        return self.l < self.r


@dataclass(frozen=True)
class PolytopePair:
    """
    Newton polytopes of the two push-forwards of a curve of degree d.
    """

    p3: LatticePolytope
    p1: LatticePolytope
    d: int

    def __post_init__(self):
        simplex = LatticePolytope([(0, 0), (self.d, 0), (0, self.d)])
        for side, polytope in ((Side.P3, self.p3), (Side.P1, self.p1)):
            if not all(simplex.contains(v) for v in polytope.vertices):
                raise PolytopeError(f"{side.value} is not inside the simplex")
        if not (self.p3.contains((self.d, 0)) and self.p3.contains((0, self.d))):
            raise PolytopeError("row 0 of P3 is not complete")
        if not (self.p1.contains((0, 0)) and self.p1.contains((0, self.d))):
            raise PolytopeError("row 0 of P1 is not complete")

    @classmethod
    def from_curve(
        cls, curve: TropicalCurve, ideal: Optional[PlaneIdeal] = None
    ) -> "PolytopePair":
        """
        :param curve: A curve in the tropical plane of x0 + x1 + x2 + x3.
        :param ideal: The ideal the curve came with, checked when given.

        :return: PolytopePair of its two push-forwards
        """
        if curve.n != 3:
            raise CurveError(f"expected a curve in n=3, got n={curve.n}")
        if ideal is not None:
            require_plane(ideal)
        return cls(
            newton_polytope(pushforward(curve, P3_BASIS)),
            newton_polytope(pushforward(curve, P1_BASIS)),
            curve.degree(),
        )

    def polytope(self, side: Side) -> LatticePolytope:
        return self.p3 if side is Side.P3 else self.p1

    def other(self, side: Side) -> LatticePolytope:
        return self.p1 if side is Side.P3 else self.p3

    def diagonal(self, total: int) -> List[Point2]:
        """P3 row with exponent sum ``total`` of x1 and x2."""
        return [(i, total - i) for i in range(total + 1)]

    def column(self, index: int) -> List[Point2]:
        """P1 row with x2 exponent ``index``."""
        return [(index, j) for j in range(self.d - index + 1)]


def row_stats(pair: PolytopePair, vertex: Sequence[int], side: Side) -> RowStats:
    """
    Row statistics of a vertex of P3 or P1.

    :param pair: The polytopes.
    :param vertex: A vertex of the polytope on ``side``.
    :param side: Side.P3 or Side.P1.

    :return: RowStats
    """
    vertex = tuple(vertex)
    polytope = pair.polytope(side)
    if vertex not in polytope.vertices:
        raise PolytopeError(f"{vertex} is not a vertex of {side.value}")
    d = pair.d
    if side is Side.P3:
        s = d - vertex[0] - vertex[1]
        row = pair.diagonal(vertex[0] + vertex[1])
        missing = sum(not polytope.contains(p) for p in row)
        other_row = pair.column(missing)
    else:
        s = vertex[0]
        row = pair.column(vertex[0])
        missing = sum(not polytope.contains(p) for p in row)
        other_row = pair.diagonal(d - missing)
    present = sum(pair.other(side).contains(p) for p in other_row)
    return RowStats(s, missing, d + 1 - s - missing, present)


def row_statistics(pair: PolytopePair) -> List[Tuple[Side, Point2, RowStats]]:
    return [
        (side, vertex, row_stats(pair, vertex, side))
        for side in (Side.P3, Side.P1)
        for vertex in pair.polytope(side).vertices
    ]


@dataclass(frozen=True)
class OppositeConeVerdict:
    realizable: bool
    obstructions: Tuple[Tuple[Side, Point2], ...] = ()

    def __bool__(self):
        return self.realizable


def fan_realizable_opposite(pair: PolytopePair) -> OppositeConeVerdict:
    """
    Realizability of a fan curve lying in cone(e1, e2) and cone(e0, e3):
    every vertex of P3 and P1 needs l >= r.

    :param pair: The polytopes of the fan.

    :return: OppositeConeVerdict listing the obstructing vertices
    """
    obstructions = tuple(
        (side, vertex)
        for side, vertex, stats in row_statistics(pair)
        if stats.obstructed
    )
    return OppositeConeVerdict(not obstructions, obstructions)


@dataclass(frozen=True)
class LengthInterval:
    """
    The admissible ratios q/q'. ``upper`` None means unbounded.
    """

    lower: Fraction
    upper: Optional[Fraction]

    @property
    def empty(self) -> bool:
        return self.upper is not None and self.lower > self.upper

    def admits(self, q, q_prime) -> bool:
        """
        :param q: Length on the side of [0,q,q,0], at least 0.
        :param q_prime: Length on the side of [q',0,0,q'], at least 0.

        :return: True when the lengths satisfy every length condition
        """
        q, q_prime = to_fraction(q), to_fraction(q_prime)
        if q < 0 or q_prime < 0:
            raise ValueError("lengths must be non-negative")
        if q == 0 and q_prime == 0:
            return True
        if self.empty:
            return False
        if q_prime == 0:
            return self.upper is None
        ratio = q / q_prime
        return self.lower <= ratio and (self.upper is None or ratio <= self.upper)

    def __str__(self):
        if self.empty:
            return "empty"
        if self.upper is None:
            return f"[{self.lower}, inf)"
        return f"[{self.lower}, {self.upper}]"


def length_interval(pair: PolytopePair) -> LengthInterval:
    """
    The interval of ratios q/q' allowed by the length conditions.

    :param pair: The polytopes.

    :return: LengthInterval
    """
    lower, upper = Fraction(0), None
    for side, _, stats in row_statistics(pair):
        if side is Side.P3 and stats.s:
            lower = max(lower, Fraction(stats.n, stats.s))
        if side is Side.P1 and stats.n:
            bound = Fraction(stats.s, stats.n)
            upper = bound if upper is None else min(upper, bound)
    return LengthInterval(lower, upper)


def decide_one_edge(pair: PolytopePair, q, q_prime) -> bool:
    """
    Realizability of the curve with one bounded edge between [0,q,q,0] and
    [q',0,0,q'] whose push-forwards have the Newton polytopes of ``pair``.

    :param pair: The polytopes.
    :param q: Non-negative rational.
    :param q_prime: Non-negative rational.

    :return: bool
    """
    if not fan_realizable_opposite(pair):
        return False
    return length_interval(pair).admits(q, q_prime)


def length_necessary(
    polytope: LatticePolytope, other: LatticePolytope, vertex: Sequence[int], q, q_prime
) -> bool:
    """
    The necessary length condition (n - u) * q' <= s * q for a vertex of a
    cell dual to [0,q,q] next to a classical line, where s is its diagonal
    distance to the top of the cell, n the number of lattice points missing
    from the cell on its diagonal and u the distance of ``other`` to the
    vertical axis.

    :param polytope: The cell of the (x0, x1, x2) subdivision.
    :param other: The cell of the (x0, x2, x3) subdivision dual to [q',0,q'].
    :param vertex: A vertex of ``polytope``.

    :return: bool
    """
    vertex = tuple(vertex)
    if vertex not in polytope.vertices:
        raise PolytopeError(f"{vertex} is not a vertex")
    total = vertex[0] + vertex[1]
    s = max(v[0] + v[1] for v in polytope.vertices) - total
    n = sum(not polytope.contains((i, total - i)) for i in range(total + 1))
    u = min(v[0] for v in other.vertices)
    return (n - u) * to_fraction(q_prime) <= s * to_fraction(q)


def _binomial_power(
    base: Tuple[int, int, int, int], first: int, second: int, power: int
) -> Dict[Tuple[int, ...], int]:
    terms = {}
    for k in range(power + 1):
        exponent = list(base)
        exponent[first] += power - k
        exponent[second] += k
        terms[tuple(exponent)] = gen_binom(power, k)
    return terms


def build_fmu(
    pair: PolytopePair, vertex: Sequence[int], side: Side
) -> PuiseuxPolynomial:
    """
    The polynomial x0^a0 x1^a1 x2^a2 x3^a3 (x0+x3)^a for a vertex of P3, or
    x0^a0 x1^a1 x2^a2 x3^a3 (x1+x2)^a for a vertex of P1, whose push-forwards
    stay inside P3 and P1 and hit the vertex. The window of the binomial
    factor sits at the lowest admissible position of the other polytope's
    row.

    :param pair: The polytopes.
    :param vertex: A vertex of the polytope on ``side``.
    :param side: Side.P3 or Side.P1.

    :return: PuiseuxPolynomial in x0, x1, x2, x3
    """
    vertex = tuple(vertex)
    stats = row_stats(pair, vertex, side)
    if stats.obstructed:
        raise PolytopeError(
            f"no window for {side.value} vertex {vertex}: l={stats.l} < r={stats.r}"
        )
    a = stats.r - 1
    polytope, other = pair.polytope(side), pair.other(side)
    if side is Side.P3:
        total = vertex[0] + vertex[1]
        a1 = min(i for i, j in pair.diagonal(total) if polytope.contains((i, j)))
        a2 = stats.n - a1
        a3 = min(j for _, j in pair.column(stats.n) if other.contains((stats.n, j)))
        a0 = stats.s - a3
        terms = _binomial_power((a0, a1, a2, a3), 0, 3, a)
    else:
        column = pair.column(vertex[0])
        a3 = min(j for i, j in column if polytope.contains((i, j)))
        a0 = stats.n - a3
        diagonal = pair.diagonal(pair.d - stats.n)
        a1 = min(i for i, j in diagonal if other.contains((i, j)))
        a2 = stats.s - a1
        terms = _binomial_power((a0, a1, a2, a3), 1, 2, a)
    if min(a0, a1, a2, a3) < 0:
        raise PolytopeError(f"no window for {side.value} vertex {vertex}")
    return PuiseuxPolynomial(terms, 4)


def _projections_match(pair: PolytopePair, poly: PuiseuxPolynomial) -> bool:
    for side, basis in ((Side.P3, P3_BASIS), (Side.P1, P1_BASIS)):
        image = project_polynomial(plane(), poly, basis)
        if not image.terms:
            return False
        support = LatticePolytope([planar(e) for e in image.support()])
        if support != pair.polytope(side):
            return False
    return True


def generic_fmu_sum(pair: PolytopePair) -> PuiseuxPolynomial:
    """
    Sum of the polynomials of build_fmu over all vertices of P3 and P1 with
    multipliers 1, x, x^2, ... for x = 2, 3, ... until both push-forwards
    have exactly the Newton polytopes of the pair.

    :param pair: A pair with l >= r at every vertex.

    :return: PuiseuxPolynomial in x0, x1, x2, x3
    """
    parts = [
        build_fmu(pair, vertex, side)
        for side in (Side.P3, Side.P1)
        for vertex in pair.polytope(side).vertices
    ]
    for base in range(2, MAX_GENERIC_ATTEMPTS + 2):
        total = PuiseuxPolynomial({}, 4)
        for power, part in enumerate(parts):
            total = total + part * base**power
        if _projections_match(pair, total):
            return total
        logger.debug("multiplier %d cancels a vertex, trying the next", base)
    raise PolytopeError("no generic combination found")


def _normals(polytope: LatticePolytope) -> List[Tuple[Tuple[int, ...], int]]:
    result = []
    for start, end in polytope.edges():
        normal, length = primitive((start[1] - end[1], end[0] - start[0]))
        result.append((normal, int(length)))
    return result


def one_edge_curve(pair: PolytopePair, q, q_prime) -> TropicalCurve:
    """
    The curve with vertices [0,q,q,0] and [q',0,0,q'] joined by an edge of
    weight d, with the rays dual to the edges of P3 at the first and those
    dual to the edges of P1 at the second vertex. For q = q' = 0 this is the
    fan with all rays at the origin.

    :param pair: Two-dimensional polytopes of a curve in two opposite cones.
    :param q: Non-negative rational.
    :param q_prime: Non-negative rational.

    :return: TropicalCurve in n=3
    """
    q, q_prime = to_fraction(q), to_fraction(q_prime)
    if q < 0 or q_prime < 0:
        raise ValueError("lengths must be non-negative")
    if pair.p3.dimension < 2 or pair.p1.dimension < 2:
        raise PolytopeError("both polytopes must be two dimensional")
    rays, owners, weights = [], [], []
    for normal, length in _normals(pair.p3):
        if normal == (-1, -1):
            continue
        if min(normal) < 0:
            raise PolytopeError(f"P3 edge normal {normal} leaves cone(e1, e2)")
        rays.append((0, normal[0], normal[1], 0))
        owners.append(0)
        weights.append(length)
    for normal, length in _normals(pair.p1):
        if normal == (1, 0):
            continue
        c, e = -normal[0], normal[1] - normal[0]
        if c < 0 or e < 0:
            raise PolytopeError(f"P1 edge normal {normal} leaves cone(e0, e3)")
        rays.append((c, 0, 0, e))
        owners.append(1)
        weights.append(length)

    if q == 0 and q_prime == 0:
        vertices = [(0, 0, 0, 0)]
        owners = [0] * len(owners)
        edges = []
    else:
        vertices = [(0, q, q, 0), (q_prime, 0, 0, q_prime)]
        edges = [(0, 1)]
        weights = [pair.d] + weights
    edges += [(owner, len(vertices) + i) for i, owner in enumerate(owners)]
    return TropicalCurve(3, vertices, rays, edges, weights)


def _splits(target: Tuple[int, int], vectors: Sequence[Tuple[int, int]]):
    if target == (0, 0):
        yield ()
        return
    if not vectors:
        return
    first, rest = vectors[0], vectors[1:]
    most = min(target[i] // first[i] for i in range(2) if first[i])
    for weight in range(most, -1, -1):
        remaining = (target[0] - weight * first[0], target[1] - weight * first[1])
        for tail in _splits(remaining, rest):
            yield (((first, weight),) if weight else ()) + tail


def opposite_cone_fans(d: int) -> Iterator[TropicalCurve]:
    """
    All fan curves of degree d lying in cone(e1, e2) and cone(e0, e3).

    :param d: The degree.

    :return: Iterator of TropicalCurve
    """
    vectors = [
        (a, b) for a in range(d + 1) for b in range(d + 1) if gcd(a, b) == 1
    ]
    sides = list(_splits((d, d), vectors))
    for upper in sides:
        for lower in sides:
            rays = [(0, a, b, 0) for (a, b), _ in upper]
            rays += [(c, 0, 0, e) for (c, e), _ in lower]
            weights = [w for _, w in upper] + [w for _, w in lower]
            edges = [(0, 1 + i) for i in range(len(rays))]
            yield TropicalCurve(3, [(0, 0, 0, 0)], rays, edges, weights)


def _crossings(cell: Cell) -> List[Fraction]:
    """
    Parameters inside a plane cell where two of 0, y1, y2 cross.
    """
    values = [(Fraction(0), 0)] + list(zip(cell.start, cell.direction))
    found = set()
    for (a, da), (b, db) in combinations(values, 2):
        if da != db:
            parameter = (b - a) / (da - db)
            if parameter > 0 and (cell.length is None or parameter < cell.length):
                found.add(parameter)
    return sorted(found)


def _pieces(cell: Cell) -> List[Cell]:
    marks = [Fraction(0)] + _crossings(cell)
    ends = marks[1:] + [cell.length]
    return [
        Cell(
            cell.point_at(low),
            cell.direction,
            None if high is None else high - low,
            cell.weight,
        )
        for low, high in zip(marks, ends)
    ]


def _lift(piece: Cell, hidden: int) -> Tuple[Cell, frozenset]:
    """
    Lift a plane piece on which one projection is injective: the hidden
    coordinate (3 for P3_BASIS, 1 for P1_BASIS) equals the smallest of the
    other three.

    :return: (cell in chart coordinates of n=3, coordinates above the minimum)
    """
    middle = piece.point_at(1 if piece.length is None else piece.length / 2)
    values = (Fraction(0),) + tuple(middle)
    slot = values.index(min(values))
    low = ((Fraction(0),) + tuple(piece.start))[slot]
    step = ((0,) + tuple(piece.direction))[slot]
    if hidden == 3:
        start = tuple(piece.start) + (low,)
        direction = tuple(piece.direction) + (step,)
        point = (Fraction(0),) + tuple(middle) + (min(values),)
    else:
        start = (low,) + tuple(piece.start)
        direction = (step,) + tuple(piece.direction)
        point = (Fraction(0), min(values)) + tuple(middle)
    bottom = min(point)
    support = frozenset(i for i, v in enumerate(point) if v > bottom)
    return Cell(start, direction, piece.length, piece.weight), support


def _shadow(cell: Cell, axis: int) -> Optional[Cell]:
    """
    The image under P3_BASIS of a cell in cone(e_axis, e3), lifted back onto
    the ray e_axis, with negated weight.
    """
    index = 0 if axis == 0 else 1
    step = cell.direction[index]
    if not step:
        return None
    if axis == 0:
        start = (cell.start[0],) * 3
        direction = (1 if step > 0 else -1,) * 3
    else:
        start = (Fraction(0), cell.start[1], Fraction(0))
        direction = (0, 1 if step > 0 else -1, 0)
    factor = abs(step)
    return Cell(
        start,
        direction,
        None if cell.length is None else cell.length * factor,
        -cell.weight * factor,
    )


def lift_curve_l32(c3: TropicalCurve, c1: TropicalCurve) -> TropicalCurve:
    """
    Reconstruct a curve in the tropical plane of x0 + x1 + x2 + x3 from its
    push-forwards onto (x0, x1, x2) and (x0, x2, x3). The curve must avoid
    the open cone(e1, e3).

    :param c3: Plane curve, the push-forward onto P3_BASIS.
    :param c1: Plane curve, the push-forward onto P1_BASIS.

    :return: TropicalCurve in n=3
    """
    if c3.n != 2 or c1.n != 2:
        raise ProjectionError("both projections must be plane curves")
    if c3.degree() != c1.degree():
        raise ProjectionError(
            f"projections have degrees {c3.degree()} and {c1.degree()}"
        )
    cells = []
    for cell in c3.canonical().cells():
        for piece in _pieces(cell):
            lifted, _ = _lift(piece, 3)
            cells.append(lifted)
    for cell in c1.canonical().cells():
        for piece in _pieces(cell):
            lifted, support = _lift(piece, 1)
            if 3 not in support:
                continue
            cells.append(lifted)
            for axis in (0, 2):
                if support == frozenset((axis, 3)):
                    shadow = _shadow(lifted, axis)
                    if shadow is not None:
                        cells.append(shadow)
    try:
        curve = assemble_curve(cells, 3)
    except CurveError as err:
        raise ProjectionError(f"inconsistent projections: {err}") from err
    verdict = curve.check_balanced()
    if not verdict:
        raise ProjectionError(
            f"the lifted curve is unbalanced at vertices {list(verdict.violations)}"
        )
    if pushforward(curve, P3_BASIS) != c3 or pushforward(curve, P1_BASIS) != c1:
        raise ProjectionError(
            "the projections do not come from a curve avoiding cone(e1, e3)"
        )
    logger.debug("lifted %d plane cells to %d edges", len(cells), len(curve.edges))
    return curve
