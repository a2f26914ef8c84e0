"""
    The matroid of a linear plane and its Bergman fan.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from tropreal.curve import TropicalCurve, normalize
from tropreal.exceptions import IdealError
from tropreal.utils import Vector, exact_nullspace, exact_rank, to_fraction

logger = logging.getLogger(__name__)

Basis = Tuple[int, int, int]


class PlaneIdeal:
    """
    A linear ideal L in K[x_0, ..., x_n] whose zero set is a plane, given by
    the coefficient matrix of its generators.
    """

    def __init__(self, matrix: Sequence[Sequence], n: Optional[int] = None):
        try:
            rows = tuple(tuple(to_fraction(c) for c in row) for row in matrix)
        except (TypeError, ValueError, ZeroDivisionError) as err:
            raise IdealError(f"generator coefficients must be rational: {err}") from err
        if n is None:
            if not rows:
                raise IdealError("n is required for an ideal without generators")
            n = len(rows[0]) - 1
        self.n = int(n)
        if self.n < 2:
            raise IdealError(f"a plane needs n >= 2, got {self.n}")
        for row in rows:
            if len(row) != self.n + 1:
                raise IdealError(
                    f"generator {[str(c) for c in row]} does not have "
                    f"{self.n + 1} coefficients"
                )
        self.matrix = tuple(row for row in rows if any(row))
        rank = exact_rank(self.matrix)
        if rank != self.n - 2:
            raise IdealError(
                f"generators have rank {rank}, a plane in P^{self.n} needs {self.n - 2}"
            )

    def __eq__(self, other):
        if not isinstance(other, PlaneIdeal):
            return NotImplemented
        return self.n == other.n and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.n, self.matrix))

    def __repr__(self):
        return f"PlaneIdeal(n={self.n}, generators={len(self.matrix)})"

    def __str__(self):
        terms = []
        for row in self.matrix:
            parts = [
                {1: "", -1: "-"}.get(c, f"{c}*") + f"x{i}"
                for i, c in enumerate(row)
                if c
            ]
            terms.append("+".join(parts).replace("+-", "-"))
        return f"({', '.join(terms)})"


@dataclass(frozen=True)
class BergmanCone:
    """
    The cone of a chain of proper nonempty flats, spanned by the vectors
    v_F = sum of e_i over F.
    """

    flats: Tuple[FrozenSet[int], ...]
    n: int

    @property
    def generators(self) -> Tuple[Vector, ...]:
        return tuple(
            tuple(Fraction(int(i in flat)) for i in range(self.n + 1))
            for flat in self.flats
        )

    @property
    def dimension(self) -> int:
        return len(self.flats)

    def is_maximal(self) -> bool:
        return len(self.flats) == 2

    def __str__(self):
        chain = " < ".join(
            "{" + ",".join(map(str, sorted(flat))) + "}" for flat in self.flats
        )
        return f"cone({chain})"


@dataclass(frozen=True)
class ContainmentVerdict:
    contained: bool
    points: Tuple[Vector, ...] = ()
    edges: Tuple[int, ...] = ()

    def __bool__(self):
        return self.contained


class PlaneMatroid:
    """
    The rank 3 matroid M(L) of a plane: the columns of a kernel basis of the
    generator matrix form its point configuration.
    """

    def __init__(self, ideal: PlaneIdeal):
        self.ideal = ideal
        self.n = ideal.n
        kernel = exact_nullspace(ideal.matrix, self.n + 1)
        self.points: Tuple[Vector, ...] = tuple(
            tuple(vector[i] for vector in kernel) for i in range(self.n + 1)
        )
        loops = [i for i, point in enumerate(self.points) if not any(point)]
        if loops:
            raise IdealError(f"x{loops[0]} lies in the ideal")
        self._ranks: Dict[FrozenSet[int], int] = {}
        self._bases: Optional[List[Basis]] = None
        self._flats: Dict[int, List[FrozenSet[int]]] = {}

    @property
    def ground_set(self) -> range:
        return range(self.n + 1)

    def rank(self, subset) -> int:
        """
        Rank of a subset of the ground set.

        :param subset: Indices.

        :return: The rank of the corresponding points.
        """
        key = frozenset(subset)
        if key not in self._ranks:
            self._ranks[key] = exact_rank([self.points[i] for i in sorted(key)])
        return self._ranks[key]

    def closure(self, subset) -> FrozenSet[int]:
        rank = self.rank(subset)
        return frozenset(
            i for i in self.ground_set if self.rank(set(subset) | {i}) == rank
        )

    def is_flat(self, subset) -> bool:
        return self.closure(subset) == frozenset(subset)

    def is_basis(self, subset) -> bool:
        return len(set(subset)) == 3 and self.rank(subset) == 3

    def enumerate_bases(self) -> List[Basis]:
        """
        All bases, in lexicographic order.

        :return: List of index triples
        """
        if self._bases is None:
            self._bases = [
                triple
                for triple in combinations(self.ground_set, 3)
                if self.rank(triple) == 3
            ]
            logger.debug("matroid has %d bases", len(self._bases))
        return list(self._bases)

    def flats(self, rank: int) -> List[FrozenSet[int]]:
        """
        All flats of a given rank.

        :param rank: 0 to 3.

        :return: Flats ordered by their sorted elements.
        """
        if rank not in self._flats:
            found = {
                self.closure(subset)
                for subset in combinations(self.ground_set, rank)
                if self.rank(subset) == rank
            }
            self._flats[rank] = sorted(found, key=sorted)
        return list(self._flats[rank])

    def bergman_cones(self) -> List[BergmanCone]:
        """
        The cones of the Bergman fan: rays of rank 1 and rank 2 flats, then
        the maximal cones of the chains F1 < F2.

        :return: List of BergmanCone
        """
        ones, twos = self.flats(1), self.flats(2)
        cones = [BergmanCone((flat,), self.n) for flat in ones]
        cones += [BergmanCone((flat,), self.n) for flat in twos]
        cones += [
            BergmanCone((first, second), self.n)
            for first in ones
            for second in twos
            if first < second
        ]
        return cones

    def maximal_cones(self) -> List[BergmanCone]:
        return [cone for cone in self.bergman_cones() if cone.is_maximal()]

    def cone_of(self, point: Sequence) -> Optional[BergmanCone]:
        """
        Smallest Bergman cone containing a point.

        :param point: Homogeneous coordinates.

        :return: The cone, or None when the point is outside the fan.
        """
        values = normalize(point)
        levels = sorted({v for v in values if v > 0}, reverse=True)
        chain = []
        for level in levels:
            superlevel = frozenset(i for i, v in enumerate(values) if v >= level)
            if not self.is_flat(superlevel):
                return None
            chain.append(superlevel)
        return BergmanCone(tuple(chain), self.n)

    def in_support(self, point: Sequence) -> bool:
        return self.cone_of(point) is not None

    def _samples(self, start: Vector, direction: Vector, length) -> List[Vector]:
        """
        Points of a cell that decide its membership: endpoints, the points
        where two coordinates cross, and one point inside each piece between.
        """
        crossings = set()
        for i, j in combinations(range(len(start)), 2):
            slope = direction[i] - direction[j]
            if slope:
                parameter = (start[j] - start[i]) / slope
                if parameter > 0 and (length is None or parameter < length):
                    crossings.add(parameter)
        marks = [Fraction(0)] + sorted(crossings)
        if length is not None:
            marks.append(length)
        parameters = list(marks)
        parameters += [(a + b) / 2 for a, b in zip(marks, marks[1:])]
        if length is None:
            parameters.append(marks[-1] + 1)
        return [
            tuple(s + t * u for s, u in zip(start, direction))
            for t in sorted(parameters)
        ]

    def contains_curve(self, curve: TropicalCurve) -> ContainmentVerdict:
        """
        Test whether a curve lies in the Bergman fan of the matroid.

        :param curve: A curve with the same n.

        :return: A verdict with the offending sample points and edges.
        """
        if curve.n != self.n:
            raise IdealError(f"curve lives in n={curve.n}, the plane in n={self.n}")
        points, edges = [], []
        for vertex in curve.vertices:
            if not self.in_support(vertex):
                points.append(vertex)
        for index, cell in enumerate(curve.cells()):
            start = (Fraction(0),) + cell.start
            direction = (Fraction(0),) + tuple(Fraction(u) for u in cell.direction)
            bad = [
                sample
                for sample in self._samples(start, direction, cell.length)
                if not self.in_support(sample)
            ]
            if bad:
                edges.append(index)
                points += [normalize(sample) for sample in bad]
        verdict = ContainmentVerdict(
            not points and not edges, tuple(dict.fromkeys(points)), tuple(edges)
        )
        if not verdict:
            logger.debug("curve leaves the Bergman fan on edges %s", verdict.edges)
        return verdict


def matroid_from_ideal(ideal: PlaneIdeal) -> PlaneMatroid:
    return PlaneMatroid(ideal)


def standard_plane(n: int = 3) -> PlaneIdeal:
    """
    The plane x_0 + ... + x_n = 0 for n = 3; for larger n the first
    generator is followed by generic independent ones.

    :param n: Ambient dimension marker.

    :return: PlaneIdeal
    """
    rows = [[1] * (n + 1)]
    for extra in range(1, n - 2):
        rows.append([(i + 1) ** extra for i in range(n + 1)])
    return PlaneIdeal(rows, n)
