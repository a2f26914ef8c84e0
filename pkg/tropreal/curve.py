"""
    Weighted rational polyhedral curves in R^{n+1}/R1.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from tropreal.exceptions import CurveError, UnbalancedCurveError
from tropreal.mixins import VEMMixin
from tropreal.utils import Vector, dot, primitive, to_fraction

logger = logging.getLogger(__name__)


def normalize(vector: Sequence, direction: bool = False) -> Vector:
    """
    Canonical representative of a vector modulo the all-ones vector.

    :param vector: n+1 rationals.
    :param direction: Also scale to the primitive integral vector.

    :return: The representative with minimum coordinate 0.
    """
    values = [to_fraction(v) for v in vector]
    if not values:
        raise CurveError("empty coordinate vector")
    lowest = min(values)
    shifted = [v - lowest for v in values]
    if not direction:
        return tuple(shifted)
    if not any(shifted):
        raise CurveError(f"{list(vector)} is zero modulo the all-ones vector")
    integers, _ = primitive(shifted)
    return tuple(Fraction(i) for i in integers)


def to_chart(vector: Sequence) -> Vector:
    """
    Affine chart (y_1 - y_0, ..., y_n - y_0) of a homogeneous vector.

    :param vector: n+1 rationals.

    :return: n rationals
    """
    values = [to_fraction(v) for v in vector]
    return tuple(v - values[0] for v in values[1:])


def from_chart(point: Sequence) -> Vector:
    return normalize((Fraction(0),) + tuple(point))


def _chart_direction(vector: Sequence) -> Tuple[Tuple[int, ...], Fraction]:
    return primitive(to_chart(vector))


@dataclass(frozen=True)
class Cell:
    """
    One cell of a curve in chart coordinates: the segment from ``start`` of
    lattice length ``length`` in the primitive ``direction``, or the ray from
    ``start`` when ``length`` is None.
    """

    start: Vector
    direction: Tuple[int, ...]
    length: Optional[Fraction]
    weight: int

    @property
    def is_ray(self) -> bool:
        return self.length is None

    @property
    def end(self) -> Optional[Vector]:
        if self.length is None:
            return None
        return self.point_at(self.length)

    def point_at(self, parameter) -> Vector:
        return tuple(s + parameter * u for s, u in zip(self.start, self.direction))

    def contains(self, point: Sequence) -> bool:
        """
        Test whether a chart point lies on the cell.

        :param point: Chart coordinates.

        :return: bool
        """
        offset = [to_fraction(p) - s for p, s in zip(point, self.start)]
        pivot = next(i for i, u in enumerate(self.direction) if u)
        parameter = offset[pivot] / self.direction[pivot]
        if any(o != parameter * u for o, u in zip(offset, self.direction)):
            return False
        if parameter < 0:
            return False
        return self.length is None or parameter <= self.length

    def scaled(self, factor) -> "Cell":
        factor = to_fraction(factor)
        return Cell(
            tuple(s * factor for s in self.start),
            self.direction,
            None if self.length is None else self.length * factor,
            self.weight,
        )


@dataclass(frozen=True)
class BalanceVerdict:
    balanced: bool
    violations: Tuple[int, ...] = ()

    def __bool__(self):
        return self.balanced


@dataclass(frozen=True)
class WeightedFan:
    """
    A weighted one dimensional fan: primitive rays (min-0 representatives)
    with positive weights.
    """

    rays: Tuple[Vector, ...]
    weights: Tuple[int, ...]

    def __post_init__(self):
        if len(self.rays) != len(self.weights):
            raise CurveError("a fan needs one weight per ray")

    @property
    def n(self) -> int:
        return len(self.rays[0]) - 1 if self.rays else 0

    def weighted_sum(self) -> Vector:
        total = [Fraction(0)] * (self.n + 1)
        for ray, weight in zip(self.rays, self.weights):
            for index, value in enumerate(ray):
                total[index] += weight * value
        return tuple(total)

    def is_balanced(self) -> bool:
        return len(set(self.weighted_sum())) <= 1

    def degree(self) -> int:
        """
        The d with weighted ray sum d * (1, ..., 1).

        :return: The degree.
        """
        total = self.weighted_sum()
        if len(set(total)) > 1:
            raise UnbalancedCurveError(
                f"weighted ray sum {[str(t) for t in total]} is not a multiple of 1"
            )
        return int(total[0]) if total else 0

    def merged(self) -> "WeightedFan":
        """
        Sum the weights of equal rays.

        :return: A fan with distinct rays in lexicographic order.
        """
        totals: Dict[Vector, int] = {}
        for ray, weight in zip(self.rays, self.weights):
            totals[ray] = totals.get(ray, 0) + weight
        rays = tuple(sorted(totals))
        return WeightedFan(rays, tuple(totals[ray] for ray in rays))

    def to_curve(self) -> "TropicalCurve":
        fan = self.merged()
        n = fan.n
        edges = [(0, 1 + index) for index in range(len(fan.rays))]
        return TropicalCurve(n, [(0,) * (n + 1)], fan.rays, edges, fan.weights)


class TropicalCurve(VEMMixin):
    """
    A weighted one dimensional rational polyhedral complex in R^{n+1}/R1,
    described by vertices, primitive rays, edges and weights. An edge (i, j)
    with j < len(vertices) is bounded; otherwise it is the ray
    rays[j - len(vertices)] anchored at vertex i.
    """

    def __init__(
        self,
        n: int,
        vertices: Iterable[Sequence],
        rays: Iterable[Sequence],
        edges: Iterable[Sequence[int]],
        weights: Iterable[int],
    ):
        if n is None or int(n) < 1:
            raise CurveError(f"ambient dimension must be at least 1, got {n}")
        self.n = int(n)
        self.vertices: Tuple[Vector, ...] = tuple(normalize(v) for v in vertices)
        self.rays: Tuple[Vector, ...] = tuple(self._check_ray(r) for r in rays)
        self.edges: Tuple[Tuple[int, int], ...] = tuple(
            (int(first), int(second)) for first, second in edges
        )
        self.weights: Tuple[int, ...] = tuple(self._check_weight(w) for w in weights)
        self._validate()
        self._canonical = None

    def _check_ray(self, ray: Sequence) -> Vector:
        values = normalize(ray)
        if len(values) != self.n + 1:
            raise CurveError(f"ray {list(ray)} does not have {self.n + 1} coordinates")
        if not any(values):
            raise CurveError("a ray direction must be nonzero")
        if normalize(values, direction=True) != values:
            raise CurveError(
                f"ray {[str(v) for v in values]} is not primitive integral"
            )
        return values

    @staticmethod
    def _check_weight(weight) -> int:
        if isinstance(weight, bool) or int(weight) != weight or weight < 1:
            raise CurveError(f"weight {weight!r} is not a positive integer")
        return int(weight)

    def _validate(self) -> None:
        for vertex in self.vertices:
            if len(vertex) != self.n + 1:
                raise CurveError(
                    f"vertex {[str(v) for v in vertex]} does not have "
                    f"{self.n + 1} coordinates"
                )
        if len(self.edges) != len(self.weights):
            raise CurveError(
                f"{len(self.edges)} edges but {len(self.weights)} weights"
            )
        vertex_count = len(self.vertices)
        for number, (first, second) in enumerate(self.edges):
            if not 0 <= first < vertex_count:
                raise CurveError(f"edge {number} starts outside the vertex list")
            if not 0 <= second < vertex_count + len(self.rays):
                raise CurveError(f"edge {number} ends outside the vertex and ray list")
            if first == second:
                raise CurveError(f"edge {number} joins vertex {first} to itself")
            if second < vertex_count and self.vertices[first] == self.vertices[second]:
                raise CurveError(f"edge {number} has length zero")

    def is_ray_edge(self, edge: Tuple[int, int]) -> bool:
        return edge[1] >= len(self.vertices)

    def cells(self) -> List[Cell]:
        """
        The cells of the curve in chart coordinates.

        :return: One Cell per edge, in edge order.
        """
        result = []
        for (first, second), weight in zip(self.edges, self.weights):
            start = to_chart(self.vertices[first])
            if self.is_ray_edge((first, second)):
                direction, _ = _chart_direction(self.rays[second - len(self.vertices)])
                result.append(Cell(start, direction, None, weight))
            else:
                end = to_chart(self.vertices[second])
                direction, length = primitive([e - s for e, s in zip(end, start)])
                result.append(Cell(start, direction, length, weight))
        return result

    def star_at(self, vertex: int) -> WeightedFan:
        """
        The star of the curve at one of its vertices.

        :param vertex: Index into the vertex list.

        :return: The weighted fan of outgoing primitive directions.
        """
        if not 0 <= vertex < len(self.vertices):
            raise CurveError(f"{vertex} is not a vertex index")
        rays, weights = [], []
        for (first, second), weight in zip(self.edges, self.weights):
            if first != vertex and second != vertex:
                continue
            if self.is_ray_edge((first, second)):
                rays.append(self.rays[second - len(self.vertices)])
            else:
                other = second if first == vertex else first
                rays.append(
                    normalize(
                        [
                            b - a
                            for a, b in zip(
                                self.vertices[vertex], self.vertices[other]
                            )
                        ],
                        direction=True,
                    )
                )
            weights.append(weight)
        if not rays:
            raise CurveError(f"vertex {vertex} is isolated")
        return WeightedFan(tuple(rays), tuple(weights))

    def check_balanced(self) -> BalanceVerdict:
        """
        Check the balancing condition at every vertex.

        :return: A verdict listing the unbalanced vertices.
        """
        violations = []
        for index in range(len(self.vertices)):
            try:
                star = self.star_at(index)
            except CurveError:
                continue
            if not star.is_balanced():
                violations.append(index)
        if violations:
            logger.debug("unbalanced at vertices %s", violations)
        return BalanceVerdict(not violations, tuple(violations))

    def recession_fan(self) -> WeightedFan:
        """
        Recession fan: the ray directions with the weights of all unbounded
        cells in that direction summed up.

        :return: WeightedFan
        """
        rays, weights = [], []
        for edge, weight in zip(self.edges, self.weights):
            if self.is_ray_edge(edge):
                rays.append(self.rays[edge[1] - len(self.vertices)])
                weights.append(weight)
        return WeightedFan(tuple(rays), tuple(weights)).merged()

    def degree(self) -> int:
        return self.recession_fan().degree()

    def rescale(self, factor) -> "TropicalCurve":
        """
        Scale all vertices, keeping rays and weights.

        :param factor: A positive rational.

        :return: The rescaled curve.
        """
        factor = to_fraction(factor)
        if factor <= 0:
            raise CurveError(f"scale factor must be positive, got {factor}")
        return TropicalCurve(
            self.n,
            [[c * factor for c in vertex] for vertex in self.vertices],
            self.rays,
            self.edges,
            self.weights,
        )

    def integral_scale(self) -> int:
        """
        Smallest positive integer m making every vertex integral.

        :return: m
        """
        return lcm(1, *(c.denominator for v in self.vertices for c in v))

    def is_fan(self) -> bool:
        return all(not any(vertex) for vertex in self.vertices)

    def canonical(self) -> "TropicalCurve":
        """
        Canonical form as a tropical cycle: overlapping cells summed, two
        valent straight vertices removed, sorted lists.

        :return: TropicalCurve
        """
        if self._canonical is None:
            self._canonical = assemble_curve(self.cells(), self.n)
        return self._canonical

    def contains_point(self, point: Sequence) -> bool:
        """
        Test whether a homogeneous point lies on the support of the curve.

        :param point: n+1 rationals.

        :return: bool
        """
        chart = to_chart(point)
        if any(to_chart(v) == chart for v in self.vertices):
            return True
        return any(cell.contains(chart) for cell in self.cells())

    def _key(self):
        canonical = self.canonical()
        return (
            canonical.n,
            canonical.vertices,
            canonical.rays,
            tuple(zip(canonical.edges, canonical.weights)),
        )

    def __eq__(self, other):
        if not isinstance(other, TropicalCurve):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (
            f"TropicalCurve(n={self.n}, vertices={len(self.vertices)}, "
            f"rays={len(self.rays)}, edges={len(self.edges)})"
        )

    def __str__(self):
        return self.__repr__()


def _line_of(cell: Cell):
    """
    Group key and parameter interval of a cell on its supporting line.

    :return: (direction, anchor, low, high) with None for an infinite end
    """
    direction = cell.direction
    sign = 1
    if next(u for u in direction if u) < 0:
        sign = -1
        direction = tuple(-u for u in direction)
    norm = dot(direction, direction)
    parameter = dot(cell.start, direction) / norm
    anchor = tuple(s - parameter * u for s, u in zip(cell.start, direction))
    if cell.length is None:
        if sign > 0:
            return direction, anchor, parameter, None
        return direction, anchor, None, parameter
    other = parameter + sign * cell.length
    return direction, anchor, min(parameter, other), max(parameter, other)


def _intersection(first, second) -> Optional[Vector]:
    """
    Intersection point of two non-parallel lines given as (direction, anchor).
    """
    (u, a), (v, b) = first, second
    rhs = [bi - ai for ai, bi in zip(a, b)]
    for i, j in combinations(range(len(u)), 2):
        determinant = -u[i] * v[j] + u[j] * v[i]
        if determinant:
            s = (-rhs[i] * v[j] + rhs[j] * v[i]) / determinant
            t = (u[i] * rhs[j] - u[j] * rhs[i]) / determinant
            point = tuple(ai + s * ui for ai, ui in zip(a, u))
            if point == tuple(bi + t * vi for bi, vi in zip(b, v)):
                return point
            return None
    return None


def _covers(low, high, piece_low, piece_high) -> bool:
    if low is not None and (piece_low is None or piece_low < low):
        return False
    if high is not None and (piece_high is None or piece_high > high):
        return False
    return True


def assemble_curve(cells: Iterable[Cell], n: int) -> TropicalCurve:
    """
    Assemble weighted cells into a curve: overlapping collinear cells add
    their weights, crossings become vertices and straight two valent
    vertices disappear. Weights that cancel drop the piece; a negative total
    weight is an error.

    :param cells: Chart cells, possibly overlapping.
    :param n: Ambient dimension marker.

    :return: The canonical TropicalCurve
    """
    lines: Dict[Tuple, List] = {}
    for cell in cells:
        if cell.weight == 0:
            continue
        direction, anchor, low, high = _line_of(cell)
        lines.setdefault((direction, anchor), []).append((low, high, cell.weight))

    keys = sorted(lines)
    breaks = {
        key: {p for low, high, _ in lines[key] for p in (low, high) if p is not None}
        for key in keys
    }
    for first, second in combinations(keys, 2):
        if first[0] == second[0]:
            continue
        point = _intersection(first, second)
        if point is None:
            continue
        for key in (first, second):
            breaks[key].add(dot(point, key[0]) / dot(key[0], key[0]))

    def at(key, parameter) -> Vector:
        direction, anchor = key
        return tuple(a + parameter * u for a, u in zip(anchor, direction))

    pieces: Dict[Tuple, List] = {}
    star: Dict[Vector, List] = {}
    for key in keys:
        points = sorted(breaks[key])
        bounds = [None] + points + [None]
        weighted = []
        for piece_low, piece_high in zip(bounds, bounds[1:]):
            weight = sum(
                w
                for low, high, w in lines[key]
                if _covers(low, high, piece_low, piece_high)
            )
            if weight < 0:
                raise CurveError(
                    f"negative total weight {weight} on a piece of the line "
                    f"through {[str(a) for a in key[1]]}"
                )
            weighted.append((piece_low, piece_high, weight))
            if weight == 0:
                continue
            backward = tuple(-u for u in key[0])
            if piece_low is not None:
                star.setdefault(at(key, piece_low), []).append((key[0], weight))
            if piece_high is not None:
                star.setdefault(at(key, piece_high), []).append((backward, weight))
        pieces[key] = weighted

    def removable(point: Vector) -> bool:
        entries = star.get(point, [])
        if len(entries) != 2:
            return False
        (u, w), (v, x) = entries
        return w == x and all(a == -b for a, b in zip(u, v))

    segments = []
    for key in keys:
        merged: List = []
        for piece_low, piece_high, weight in pieces[key]:
            if weight == 0:
                continue
            if (
                merged
                and merged[-1][1] == piece_low
                and merged[-1][2] == weight
                and removable(at(key, piece_low))
            ):
                merged[-1] = (merged[-1][0], piece_high, weight)
            else:
                merged.append((piece_low, piece_high, weight))
        segments += [(key, low, high, weight) for low, high, weight in merged]

    vertices = set()
    for key, low, high, _ in segments:
        if low is None and high is None:
            vertices.add(from_chart(key[1]))
        for parameter in (low, high):
            if parameter is not None:
                vertices.add(from_chart(at(key, parameter)))
    vertex_list = sorted(vertices)
    vertex_index = {v: i for i, v in enumerate(vertex_list)}

    def vertex_at(key, parameter) -> int:
        return vertex_index[from_chart(at(key, parameter))]

    ray_weights: List = []
    for key, low, high, weight in segments:
        direction = from_chart(key[0])
        backward = from_chart(tuple(-u for u in key[0]))
        if low is None and high is None:
            origin = vertex_index[from_chart(key[1])]
            ray_weights += [(origin, direction, weight), (origin, backward, weight)]
        elif low is None:
            ray_weights.append((vertex_at(key, high), backward, weight))
        elif high is None:
            ray_weights.append((vertex_at(key, low), direction, weight))
    ray_list = sorted({normalize(ray, direction=True) for _, ray, _ in ray_weights})
    ray_index = {r: len(vertex_list) + i for i, r in enumerate(ray_list)}

    edges = []
    for key, low, high, weight in segments:
        if low is not None and high is not None:
            ends = sorted((vertex_at(key, low), vertex_at(key, high)))
            edges.append((tuple(ends), weight))
    for origin, ray, weight in ray_weights:
        edges.append(((origin, ray_index[normalize(ray, direction=True)]), weight))
    edges.sort()

    logger.debug(
        "assembled %d vertices, %d rays, %d edges",
        len(vertex_list),
        len(ray_list),
        len(edges),
    )
    curve = TropicalCurve(
        n, vertex_list, ray_list, [e for e, _ in edges], [w for _, w in edges]
    )
    curve._canonical = curve  # pylint: disable=protected-access
    return curve
