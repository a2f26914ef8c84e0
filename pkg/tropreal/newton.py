"""
    Newton polytopes, marked subdivisions and tropicalization of plane curves.
"""
import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from tropreal.curve import Cell, TropicalCurve, assemble_curve, to_chart
from tropreal.exceptions import (
    ClassicalLineError,
    CurveError,
    PolynomialError,
    ProjectionError,
    UnbalancedCurveError,
)
from tropreal.utils import (
    Point2,
    Vector,
    convex_hull,
    cross,
    dot,
    lower_hull,
    planar,
    primitive,
    to_fraction,
)

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]


class PuiseuxPolynomial:
    """
    A homogeneous polynomial whose coefficients are finite sums of rational
    powers of t with rational coefficients.
    """

    def __init__(self, terms: Dict, nvars: Optional[int] = None):
        """
        :param terms: Maps exponent tuples to either a number (a constant
            coefficient) or a dictionary {t-exponent: coefficient}.
        :param nvars: Number of variables, needed for the zero polynomial.
        """
        self.terms: Dict[Exponent, Dict[Fraction, Fraction]] = {}
        for exponent, coefficient in terms.items():
            exponent = tuple(int(e) for e in exponent)
            if any(e < 0 for e in exponent):
                raise PolynomialError(f"negative exponent in {exponent}")
            if not isinstance(coefficient, dict):
                coefficient = {0: coefficient}
            levels = {}
            for power, value in coefficient.items():
                value = to_fraction(value)
                if value:
                    levels[to_fraction(power)] = value
            if levels:
                self.terms[exponent] = levels
        if nvars is None:
            if not terms:
                raise PolynomialError("nvars is required for the zero polynomial")
            nvars = len(next(iter(terms)))
        self.nvars = int(nvars)
        if any(len(exponent) != self.nvars for exponent in self.terms):
            raise PolynomialError(f"all exponents need {self.nvars} entries")
        degrees = {sum(exponent) for exponent in self.terms}
        if len(degrees) > 1:
            raise PolynomialError(f"polynomial is not homogeneous: degrees {degrees}")
        self.degree: Optional[int] = degrees.pop() if degrees else None

    @classmethod
    def from_levels(cls, levels: Dict, nvars: int) -> "PuiseuxPolynomial":
        """
        Assemble a polynomial from its t-levels.

        :param levels: {t-exponent: {exponent: coefficient}}
        :param nvars: Number of variables.

        :return: PuiseuxPolynomial
        """
        terms: Dict = {}
        for power, coefficients in levels.items():
            for exponent, value in coefficients.items():
                terms.setdefault(tuple(exponent), {})[power] = value
        return cls(terms, nvars)

    @classmethod
    def from_text(
        cls, text: str, variables: Sequence[str], parameter: str = "t"
    ) -> "PuiseuxPolynomial":
        """
        Parse text such as ``(t)*x0+x1+(t+1)*x2`` or ``x1^2 - t^(1/2)*x0*x2``.

        :param text: The polynomial.
        :param variables: Names of the variables, in order.
        :param parameter: Name of the Puiseux parameter.

        :return: PuiseuxPolynomial
        """
        symbols = {name: sympy.Symbol(name) for name in list(variables) + [parameter]}
        try:
            expression = sympy.expand(
                sympy.sympify(text.replace("^", "**"), locals=symbols)
            )
        except (sympy.SympifyError, SyntaxError, TypeError) as err:
            raise PolynomialError(f"cannot parse {text!r}: {err}") from err

        terms: Dict = {}
        for term in sympy.Add.make_args(expression):
            if term == 0:
                continue
            coefficient, rest = term.as_coeff_Mul()
            if not coefficient.is_Rational:
                raise PolynomialError(f"coefficient {coefficient} is not rational")
            exponent = [0] * len(variables)
            power = Fraction(0)
            for base, exp in rest.as_powers_dict().items():
                if base == 1:
                    continue
                name = str(base)
                if not exp.is_Rational:
                    raise PolynomialError(f"exponent {exp} of {name} is not rational")
                if name == parameter:
                    power += to_fraction(exp)
                elif name in variables and exp.is_Integer and exp >= 0:
                    exponent[list(variables).index(name)] += int(exp)
                else:
                    raise PolynomialError(
                        f"unexpected factor {base}**{exp} in {text!r}"
                    )
            levels = terms.setdefault(tuple(exponent), {})
            levels[power] = levels.get(power, Fraction(0)) + to_fraction(coefficient)
        return cls(terms, len(variables))

    def to_text(
        self, variables: Optional[Sequence[str]] = None, parameter: str = "t"
    ) -> str:
        """
        Text in the style ``(t)*x0+x1+(t+1)*x2``: terms by decreasing
        exponent, coefficients that involve t in parentheses.

        :param variables: Names of the variables, x0, x1, ... by default.
        :param parameter: Name of the Puiseux parameter.

        :return: str
        """
        if variables is None:
            variables = [f"x{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        pieces = []
        for exponent in self.support():
            monomial = "*".join(
                name if power == 1 else f"{name}^{power}"
                for name, power in zip(variables, exponent)
                if power
            )
            levels = self.terms[exponent]
            if set(levels) == {0}:
                value = levels[0]
                if not monomial:
                    pieces.append(str(value))
                elif value in (1, -1):
                    pieces.append(("-" if value < 0 else "") + monomial)
                else:
                    pieces.append(f"{value}*{monomial}")
                continue
            series = "+".join(
                _t_term(value, power, parameter)
                for power, value in sorted(levels.items(), reverse=True)
            ).replace("+-", "-")
            pieces.append(f"({series})*{monomial}" if monomial else f"({series})")
        return "+".join(pieces).replace("+-", "-")

    def support(self) -> List[Exponent]:
        return sorted(self.terms, reverse=True)

    def valuation(self, exponent: Sequence[int]) -> Optional[Fraction]:
        """
        Valuation of a coefficient.

        :param exponent: The monomial.

        :return: The least t-exponent, None for a zero coefficient.
        """
        levels = self.terms.get(tuple(exponent))
        return min(levels) if levels else None

    def valuations(self) -> Dict[Exponent, Fraction]:
        return {exponent: min(levels) for exponent, levels in self.terms.items()}

    def t_exponents(self) -> List[Fraction]:
        return sorted({power for levels in self.terms.values() for power in levels})

    def level(self, power) -> Dict[Exponent, Fraction]:
        power = to_fraction(power)
        return {
            exponent: levels[power]
            for exponent, levels in self.terms.items()
            if power in levels
        }

    def substitute_t_power(self, factor) -> "PuiseuxPolynomial":
        """
        Replace t by t^factor.

        :param factor: A positive rational.

        :return: PuiseuxPolynomial
        """
        factor = to_fraction(factor)
        if factor <= 0:
            raise PolynomialError(
                f"t can only be replaced by a positive power, not {factor}"
            )
        return PuiseuxPolynomial(
            {
                exponent: {power * factor: value for power, value in levels.items()}
                for exponent, levels in self.terms.items()
            },
            self.nvars,
        )

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __add__(self, other):
        if not isinstance(other, PuiseuxPolynomial):
            return NotImplemented
        terms = {e: dict(levels) for e, levels in self.terms.items()}
        for exponent, levels in other.terms.items():
            target = terms.setdefault(exponent, {})
            for power, value in levels.items():
                target[power] = target.get(power, Fraction(0)) + value
        return PuiseuxPolynomial(terms, self.nvars)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PuiseuxPolynomial(
                {
                    e: {p: v * other for p, v in levels.items()}
                    for e, levels in self.terms.items()
                },
                self.nvars,
            )
        if not isinstance(other, PuiseuxPolynomial):
            return NotImplemented
        terms: Dict = {}
        for left, left_levels in self.terms.items():
            for right, right_levels in other.terms.items():
                exponent = tuple(a + b for a, b in zip(left, right))
                target = terms.setdefault(exponent, {})
                for p, v in left_levels.items():
                    for q, w in right_levels.items():
                        target[p + q] = target.get(p + q, Fraction(0)) + v * w
        return PuiseuxPolynomial(terms, self.nvars)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PuiseuxPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash(
            (
                self.nvars,
                tuple(
                    (exponent, tuple(sorted(levels.items())))
                    for exponent, levels in sorted(self.terms.items())
                ),
            )
        )

    def __repr__(self):
        return f"PuiseuxPolynomial('{self.to_text()}')"

    def __str__(self):
        return self.to_text()


def _t_term(value: Fraction, power: Fraction, parameter: str) -> str:
    if power == 0:
        return str(value)
    if power == 1:
        symbol = parameter
    elif power.denominator == 1 and power > 0:
        symbol = f"{parameter}^{power}"
    else:
        symbol = f"{parameter}^({power})"
    if value == 1:
        return symbol
    if value == -1:
        return f"-{symbol}"
    return f"{value}*{symbol}"


class LatticePolytope:
    """
    A lattice polygon, segment or point in Z^2, stored by its vertices in
    counterclockwise order from the lexicographically smallest.
    """

    def __init__(self, points):
        self.vertices: Tuple[Point2, ...] = tuple(
            (int(x), int(y)) for x, y in convex_hull(points)
        )
        if not self.vertices:
            raise CurveError("a polytope needs at least one point")

    @classmethod
    def from_points(cls, points) -> "LatticePolytope":
        return cls(points)

    @property
    def dimension(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def edges(self) -> List[Tuple[Point2, Point2]]:
        if self.dimension < 2:
            return [tuple(self.vertices)] if self.dimension == 1 else []
        count = len(self.vertices)
        return [
            (self.vertices[i], self.vertices[(i + 1) % count]) for i in range(count)
        ]

    def contains(self, point: Sequence) -> bool:
        """
        Test membership of a point, boundary included.

        :param point: A planar point.

        :return: bool
        """
        if self.dimension == 0:
            return tuple(point) == self.vertices[0]
        if self.dimension == 1:
            first, second = self.vertices
            if cross(first, second, point):
                return False
            return dot(
                [p - f for p, f in zip(point, first)],
                [p - s for p, s in zip(point, second)],
            ) <= 0
        return all(cross(start, end, point) >= 0 for start, end in self.edges())

    def lattice_points(self) -> List[Point2]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return [
            (x, y)
            for x in range(min(xs), max(xs) + 1)
            for y in range(min(ys), max(ys) + 1)
            if self.contains((x, y))
        ]

    def area(self) -> Fraction:
        if self.dimension < 2:
            return Fraction(0)
        return Fraction(sum(cross((0, 0), a, b) for a, b in self.edges()), 2)

    def translated(self, shift: Sequence[int]) -> "LatticePolytope":
        return LatticePolytope([(x + shift[0], y + shift[1]) for x, y in self.vertices])

    def __eq__(self, other):
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolytope({list(self.vertices)})"


@dataclass(frozen=True)
class MarkedCell:
    """
    A cell of a marked subdivision: the vertex set of the cell and the
    point of the curve dual to it.
    """

    points: Tuple[Point2, ...]
    marking: Vector

    def polytope(self) -> LatticePolytope:
        return LatticePolytope(self.points)


@dataclass(frozen=True)
class MarkedSubdivision:
    cells: Tuple[MarkedCell, ...]
    degree: int

    def polytope(self) -> LatticePolytope:
        return LatticePolytope([p for cell in self.cells for p in cell.points])

    def markings(self) -> List[Vector]:
        return [cell.marking for cell in self.cells]


@dataclass(frozen=True)
class ClassicalLine:
    """
    A plane curve that is a single line: Newton segment conv(nu, mu) of
    lattice length ``multiplicity`` and a ``point`` on the line.
    """

    nu: Point2
    mu: Point2
    multiplicity: int
    point: Vector


def _angle_order(first, second) -> int:
    def half(vector):
        return 0 if vector[1] > 0 or (vector[1] == 0 and vector[0] > 0) else 1

    if half(first) != half(second):
        return half(first) - half(second)
    turn = cross((0, 0), first, second)
    return -1 if turn > 0 else (1 if turn < 0 else 0)


def _walk(
    directions: Sequence[Tuple[Sequence[int], int]]
) -> List[Tuple[Point2, Point2]]:
    """
    Walk the edge vectors w * (u_2, -u_1) of weighted directions in angular
    order from the origin.

    :return: (start, end) of the polygon edge of each direction, in input order
    """
    vectors = [(w * u[1], -w * u[0]) for u, w in directions]
    order = sorted(
        range(len(vectors)),
        key=cmp_to_key(lambda i, j: _angle_order(vectors[i], vectors[j])),
    )
    result: List = [None] * len(vectors)
    position = (0, 0)
    for index in order:
        end = (position[0] + vectors[index][0], position[1] + vectors[index][1])
        result[index] = (position, end)
        position = end
    if position != (0, 0):
        raise UnbalancedCurveError("weighted directions do not close up")
    return result


def _require_plane(curve: TropicalCurve) -> None:
    if curve.n != 2:
        raise CurveError(f"expected a plane curve (n=2), got n={curve.n}")


def _fan_directions(curve: TropicalCurve) -> List[Tuple[Tuple[int, int], int]]:
    fan = curve.recession_fan()
    return [(primitive(to_chart(ray))[0], w) for ray, w in zip(fan.rays, fan.weights)]


def newton_polytope(curve: TropicalCurve) -> LatticePolytope:
    """
    The Newton polytope of a plane curve: inner normal fan equal to the
    recession fan, edge lengths equal to its weights, touching both axes.

    :param curve: A balanced plane curve of positive degree.

    :return: LatticePolytope
    """
    _require_plane(curve)
    fan = curve.recession_fan()
    if not fan.is_balanced():
        raise UnbalancedCurveError("the recession fan is not balanced")
    if fan.degree() < 1:
        raise CurveError("a curve of degree 0 has no Newton polytope")
    points = [start for start, _ in _walk(_fan_directions(curve))]
    low_x = min(p[0] for p in points)
    low_y = min(p[1] for p in points)
    return LatticePolytope([(x - low_x, y - low_y) for x, y in points])


def marked_subdivision(curve: TropicalCurve) -> MarkedSubdivision:
    """
    The marked Newton subdivision dual to a plane curve.

    :param curve: A balanced plane curve whose Newton polytope is 2 dimensional.

    :return: MarkedSubdivision with cells ordered by marking
    """
    _require_plane(curve)
    canonical = curve.canonical()
    polytope = newton_polytope(canonical)
    if polytope.dimension < 2:
        raise ClassicalLineError("the Newton polytope is a segment")
    verdict = canonical.check_balanced()
    if not verdict:
        raise UnbalancedCurveError(f"unbalanced at vertices {list(verdict.violations)}")

    vertex_count = len(canonical.vertices)
    stars: List[List] = [[] for _ in range(vertex_count)]
    for (first, second), cell in zip(canonical.edges, canonical.cells()):
        stars[first].append((cell.direction, cell.weight, second))
        if second < vertex_count:
            backward = tuple(-u for u in cell.direction)
            stars[second].append((backward, cell.weight, first))
    local = [_walk([(u, w) for u, w, _ in star]) for star in stars]

    shifts: List[Optional[Point2]] = [None] * vertex_count
    root = min(range(vertex_count), key=lambda i: canonical.vertices[i])
    shifts[root] = (0, 0)
    queue = deque([root])
    while queue:
        current = queue.popleft()
        for (_, _, other), (start, _) in zip(stars[current], local[current]):
            if other >= vertex_count or shifts[other] is not None:
                continue
            back = next(
                end
                for (_, _, target), (_, end) in zip(stars[other], local[other])
                if target == current
            )
            shifts[other] = (
                shifts[current][0] + start[0] - back[0],
                shifts[current][1] + start[1] - back[1],
            )
            queue.append(other)
    if any(shift is None for shift in shifts):
        raise ProjectionError("the plane curve is not connected")

    placed = [
        [(x + shift[0], y + shift[1]) for (x, y), _ in polygon]
        for polygon, shift in zip(local, shifts)
    ]
    low_x = min(x for cell in placed for x, _ in cell)
    low_y = min(y for cell in placed for _, y in cell)
    cells = [
        MarkedCell(
            tuple(sorted({(x - low_x, y - low_y) for x, y in points})),
            to_chart(vertex),
        )
        for points, vertex in zip(placed, canonical.vertices)
    ]
    if sum(cell.polytope().area() for cell in cells) != polytope.area():
        raise CurveError("the dual cells do not tile the Newton polytope")
    cells.sort(key=lambda cell: cell.marking)
    return MarkedSubdivision(tuple(cells), canonical.degree())


def segment_cells(curve: TropicalCurve) -> MarkedSubdivision:
    """
    Dual cells of a plane curve made of parallel lines: consecutive pieces of
    its Newton segment, each marked by a point of the dual line.

    :param curve: A balanced plane curve with a 1 dimensional Newton polytope.

    :return: MarkedSubdivision of segments
    """
    canonical = curve.canonical()
    polytope = newton_polytope(canonical)
    if polytope.dimension != 1:
        raise CurveError("the Newton polytope is not a segment")
    low, high = polytope.vertices
    step, _ = primitive([b - a for a, b in zip(low, high)])
    lines = []
    for cell in canonical.cells():
        if cell.is_ray and dot(cell.direction, (step[1], -step[0])) > 0:
            lines.append((dot(cell.start, step), cell.start, cell.weight))
    lines.sort(reverse=True)
    cells, index = [], 0
    for _, point, weight in lines:
        start = (low[0] + index * step[0], low[1] + index * step[1])
        index += weight
        end = (low[0] + index * step[0], low[1] + index * step[1])
        cells.append(MarkedCell((start, end), point))
    cells.sort(key=lambda cell: cell.marking)
    return MarkedSubdivision(tuple(cells), canonical.degree())


def is_classical_line(curve: TropicalCurve) -> Optional[ClassicalLine]:
    """
    Detect a plane curve that is a single straight line.

    :param curve: A balanced plane curve.

    :return: ClassicalLine or None
    """
    _require_plane(curve)
    canonical = curve.canonical()
    if len(canonical.vertices) != 1 or len(canonical.rays) != 2:
        return None
    if len(canonical.edges) != 2 or canonical.weights[0] != canonical.weights[1]:
        return None
    first, second = (primitive(to_chart(ray))[0] for ray in canonical.rays)
    if any(a != -b for a, b in zip(first, second)):
        return None
    mu, nu = newton_polytope(canonical).vertices
    return ClassicalLine(
        nu, mu, canonical.weights[0], to_chart(canonical.vertices[0])
    )


def _plane_points(poly: PuiseuxPolynomial) -> Dict[Point2, Fraction]:
    if poly.nvars != 3:
        raise PolynomialError(f"expected 3 variables, got {poly.nvars}")
    if len(poly.terms) < 2:
        raise PolynomialError("a monomial or zero polynomial has no tropical curve")
    return {planar(exponent): value for exponent, value in poly.valuations().items()}


def _marking(heights: Dict[Point2, Fraction], a: Point2, b: Point2, c: Point2):
    """
    The point y with h_a + a.y = h_b + b.y = h_c + c.y for affinely
    independent a, b, c.
    """
    r1, r2 = heights[a] - heights[b], heights[a] - heights[c]
    d1 = (b[0] - a[0], b[1] - a[1])
    d2 = (c[0] - a[0], c[1] - a[1])
    det = d1[0] * d2[1] - d1[1] * d2[0]
    return (
        Fraction(r1 * d2[1] - r2 * d1[1], det),
        Fraction(d1[0] * r2 - d2[0] * r1, det),
    )


def _face_across(
    heights: Dict[Point2, Fraction], p: Point2, q: Point2, side: int
) -> Optional[Tuple[Fraction, Fraction]]:
    """
    Marking of the lower face on one side of the lifted lower edge pq: the
    plane through the edge is rotated until it first meets a lifted point.

    :param side: +1 for the points left of p -> q, -1 for those right of it.

    :return: The marking, or None when no point lies on that side.
    """
    span = (q[0] - p[0], q[1] - p[1])
    norm = dot(span, span)
    rise = heights[q] - heights[p]
    best, pivot = None, None
    for r in heights:
        distance = side * cross(p, q, r)
        if distance <= 0:
            continue
        along = Fraction(dot((r[0] - p[0], r[1] - p[1]), span), norm)
        ratio = (heights[r] - heights[p] - along * rise) / distance
        if best is None or ratio < best:
            best, pivot = ratio, r
    if pivot is None:
        return None
    return _marking(heights, p, q, pivot)


def _lower_faces(heights: Dict[Point2, Fraction]) -> List[MarkedCell]:
    """
    Lower faces of the lifted points, each marked by the point y where
    height(p) + p.y is minimal exactly on the face. The faces are found by
    walking across their edges, starting from a boundary edge of the
    Newton polygon.
    """
    points = sorted(heights)
    a, b = convex_hull(points)[:2]
    span = (b[0] - a[0], b[1] - a[1])
    boundary = {
        dot((p[0] - a[0], p[1] - a[1]), span): p
        for p in points
        if not cross(a, b, p)
    }
    (first, _), (second, _) = lower_hull(
        [(s, heights[p]) for s, p in boundary.items()]
    )[:2]

    faces: Dict = {}
    queue = deque([_face_across(heights, boundary[first], boundary[second], 1)])
    while queue:
        y = queue.popleft()
        if y in faces:
            continue
        values = {p: heights[p] + dot(p, y) for p in points}
        level = min(values.values())
        polygon = convex_hull([p for p in points if values[p] == level])
        faces[y] = MarkedCell(tuple(sorted(polygon)), y)
        for start, end in zip(polygon, polygon[1:] + polygon[:1]):
            neighbour = _face_across(heights, start, end, -1)
            if neighbour is not None and neighbour not in faces:
                queue.append(neighbour)
    return [faces[y] for y in sorted(faces)]


def _line_cells(heights: Dict[Point2, Fraction]):
    """
    Lower hull of collinear lifted points.

    :return: (base point, step, [(start index, end index, slope)])
    """
    points = sorted(heights)
    base = points[0]
    step, _ = primitive([b - a for a, b in zip(base, points[-1])])
    pivot = 0 if step[0] else 1
    indexed = [((p[pivot] - base[pivot]) // step[pivot], heights[p]) for p in points]
    hull = lower_hull(indexed)
    pieces = [
        (i, j, Fraction(h - g) / (j - i)) for (i, g), (j, h) in zip(hull, hull[1:])
    ]
    return base, step, pieces


def tropicalize_poly(poly: PuiseuxPolynomial) -> TropicalCurve:
    """
    The tropical curve of a homogeneous polynomial in 3 variables.

    :param poly: PuiseuxPolynomial with at least two terms.

    :return: The canonical plane curve
    """
    heights = _plane_points(poly)
    points = list(heights)
    if all(not cross(points[0], points[1], p) for p in points[2:]):
        _, step, pieces = _line_cells(heights)
        norm = dot(step, step)
        along = (-step[1], step[0])
        cells = []
        for first, last, slope in pieces:
            anchor = tuple(-slope * s / norm for s in step)
            cells.append(Cell(anchor, along, None, last - first))
            cells.append(Cell(anchor, tuple(-u for u in along), None, last - first))
        return assemble_curve(cells, 2)

    faces = _lower_faces(heights)
    owners: Dict = {}
    for face in faces:
        for start, end in LatticePolytope(face.points).edges():
            owners.setdefault(frozenset((start, end)), []).append((face, start, end))
    cells = []
    for shared in owners.values():
        face, start, end = shared[0]
        weight = gcd(end[0] - start[0], end[1] - start[1])
        if len(shared) == 2:
            other = shared[1][0]
            direction, length = primitive(
                [b - a for a, b in zip(face.marking, other.marking)]
            )
            cells.append(Cell(face.marking, direction, length, weight))
        else:
            normal, _ = primitive((start[1] - end[1], end[0] - start[0]))
            cells.append(Cell(face.marking, normal, None, weight))
    logger.debug("tropicalized %d terms into %d cells", len(heights), len(cells))
    return assemble_curve(cells, 2)


def extended_newton_cells(poly: PuiseuxPolynomial) -> MarkedSubdivision:
    """
    The marked Newton subdivision read off the extended Newton polytope.

    :param poly: PuiseuxPolynomial in 3 variables with at least two terms.

    :return: MarkedSubdivision
    """
    heights = _plane_points(poly)
    points = list(heights)
    if all(not cross(points[0], points[1], p) for p in points[2:]):
        base, step, pieces = _line_cells(heights)
        norm = dot(step, step)
        cells = [
            MarkedCell(
                (
                    (base[0] + first * step[0], base[1] + first * step[1]),
                    (base[0] + last * step[0], base[1] + last * step[1]),
                ),
                tuple(-slope * s / norm for s in step),
            )
            for first, last, slope in pieces
        ]
    else:
        cells = _lower_faces(heights)
    cells.sort(key=lambda cell: cell.marking)
    return MarkedSubdivision(tuple(cells), poly.degree)
