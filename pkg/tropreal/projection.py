"""
    Tropical push-forwards onto coordinate triples and the matching linear
    maps on polynomial coefficients.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

import sympy

from tropreal.curve import Cell, TropicalCurve, assemble_curve, normalize
from tropreal.exceptions import IdealError, PolynomialError
from tropreal.matroid import Basis, PlaneIdeal, PlaneMatroid
from tropreal.newton import PuiseuxPolynomial
from tropreal.utils import (
    Vector,
    exact_inverse,
    monomials,
    primitive,
    to_fraction,
    to_sympy,
)

logger = logging.getLogger(__name__)


def project_point(point: Sequence, basis: Sequence[int]) -> Vector:
    return normalize([to_fraction(point[j]) for j in basis])


def project_cells(curve: TropicalCurve, basis: Sequence[int]) -> List[Cell]:
    """
    Images of the cells of a curve under the coordinate projection onto a
    basis, in the plane chart. Cells mapping to a point are dropped and the
    weight of a cell picks up the lattice index of its image direction.

    :param curve: The curve.
    :param basis: Three coordinate indices.

    :return: Plane cells, possibly overlapping
    """
    first, second, third = basis
    images = []
    for cell in curve.cells():
        start = (Fraction(0),) + cell.start
        direction = (0,) + tuple(cell.direction)
        image_start = (start[second] - start[first], start[third] - start[first])
        image = (
            direction[second] - direction[first],
            direction[third] - direction[first],
        )
        if not any(image):
            continue
        image_direction, factor = primitive(image)
        index = int(factor)
        images.append(
            Cell(
                image_start,
                image_direction,
                None if cell.length is None else cell.length * index,
                cell.weight * index,
            )
        )
    return images


def pushforward(curve: TropicalCurve, basis: Sequence[int]) -> TropicalCurve:
    """
    The tropical push-forward of a curve onto the coordinates of a basis.

    :param curve: A curve in the Bergman fan.
    :param basis: Three coordinate indices.

    :return: The canonical plane curve
    """
    image = assemble_curve(project_cells(curve, basis), 2)
    logger.debug("push-forward onto %s has %d edges", tuple(basis), len(image.edges))
    return image


def substitution(matroid: PlaneMatroid, basis: Sequence[int]) -> Dict[int, Vector]:
    """
    Every variable modulo L as a linear form in the variables of a basis.

    :param matroid: The matroid of the plane.
    :param basis: A basis of the matroid.

    :return: {i: (c_0, c_1, c_2)} with x_i = sum of c_k x_{basis[k]} on the plane
    """
    if not matroid.is_basis(basis):
        raise IdealError(f"{tuple(basis)} is not a basis")
    inverse = exact_inverse([matroid.points[j] for j in basis])
    return {
        i: tuple(
            sum((point[r] * inverse[r][k] for r in range(3)), Fraction(0))
            for k in range(3)
        )
        for i, point in enumerate(matroid.points)
    }


def _expansions(
    rows: Sequence[Vector], sources: Sequence[Tuple[int, ...]]
) -> List[Dict[Tuple[int, ...], Fraction]]:
    """
    Expand the monomials ``sources`` after substituting variable i by the
    linear form rows[i] in three new variables.
    """
    targets = sympy.symbols("y0:3")
    forms = [sum(to_sympy(c) * y for c, y in zip(row, targets)) for row in rows]
    result = []
    for exponent in sources:
        product = sympy.Integer(1)
        for form, power in zip(forms, exponent):
            product *= form**power
        expanded = sympy.Poly(product, *targets).as_dict()
        result.append(
            {tuple(e): to_fraction(c) for e, c in expanded.items() if c != 0}
        )
    return result


@dataclass(frozen=True)
class CoeffMap:
    """
    Linear map from the coefficients of a degree d form in the variables of
    ``source`` to those of the same form, modulo L, in the variables of
    ``target``. Rows and columns follow the monomial order of
    :func:`tropreal.utils.monomials`.
    """

    source: Basis
    target: Basis
    degree: int
    matrix: Tuple[Tuple[Fraction, ...], ...]

    @property
    def exponents(self) -> List[Tuple[int, ...]]:
        return monomials(self.degree)

    def row(self, exponent: Sequence[int]) -> Tuple[Fraction, ...]:
        return self.matrix[self.exponents.index(tuple(exponent))]

    def apply(self, vector: Sequence) -> Tuple[Fraction, ...]:
        values = [to_fraction(v) for v in vector]
        return tuple(
            sum((a * b for a, b in zip(row, values)), Fraction(0))
            for row in self.matrix
        )

    def apply_polynomial(self, poly: PuiseuxPolynomial) -> PuiseuxPolynomial:
        """
        Map a polynomial in the source variables level by level.

        :param poly: Homogeneous of degree ``self.degree`` in 3 variables.

        :return: The polynomial in the target variables.
        """
        if poly.nvars != 3 or (poly.degree not in (None, self.degree)):
            raise PolynomialError(
                f"expected a ternary form of degree {self.degree}, got {poly}"
            )
        exponents = self.exponents
        levels = {}
        for power in poly.t_exponents():
            coefficients = poly.level(power)
            image = self.apply([coefficients.get(e, 0) for e in exponents])
            levels[power] = dict(zip(exponents, image))
        return PuiseuxPolynomial.from_levels(levels, 3)

    def compose(self, inner: "CoeffMap") -> "CoeffMap":
        """
        The map ``self`` after ``inner``.

        :param inner: A map whose target is the source of this one.

        :return: CoeffMap from inner.source to self.target
        """
        if inner.target != self.source or inner.degree != self.degree:
            raise IdealError("coefficient maps do not compose")
        columns = list(zip(*inner.matrix))
        matrix = tuple(
            tuple(
                sum((a * b for a, b in zip(row, column)), Fraction(0))
                for column in columns
            )
            for row in self.matrix
        )
        return CoeffMap(inner.source, self.target, self.degree, matrix)


def _as_matroid(plane: Union[PlaneIdeal, PlaneMatroid]) -> PlaneMatroid:
    return plane if isinstance(plane, PlaneMatroid) else PlaneMatroid(plane)


def coeff_map(
    plane: Union[PlaneIdeal, PlaneMatroid],
    source: Sequence[int],
    target: Sequence[int],
    degree: int,
) -> CoeffMap:
    """
    The coefficient map of the algebraic projection between two bases.

    :param plane: The ideal or its matroid.
    :param source: Basis whose variables carry the master coefficients.
    :param target: Basis to project to.
    :param degree: Degree of the forms.

    :return: CoeffMap
    """
    matroid = _as_matroid(plane)
    if not matroid.is_basis(source):
        raise IdealError(f"{tuple(source)} is not a basis")
    forms = substitution(matroid, target)
    sources = monomials(degree)
    expanded = _expansions([forms[j] for j in source], sources)
    matrix = tuple(
        tuple(column.get(exponent, Fraction(0)) for column in expanded)
        for exponent in sources
    )
    return CoeffMap(tuple(source), tuple(target), degree, matrix)


def project_polynomial(
    plane: Union[PlaneIdeal, PlaneMatroid],
    poly: PuiseuxPolynomial,
    basis: Sequence[int],
) -> PuiseuxPolynomial:
    """
    Rewrite a polynomial in all variables, modulo L, in the variables of a
    basis.

    :param plane: The ideal or its matroid.
    :param poly: Homogeneous polynomial in n+1 variables.
    :param basis: A basis of the matroid.

    :return: PuiseuxPolynomial in 3 variables
    """
    matroid = _as_matroid(plane)
    if poly.nvars != matroid.n + 1:
        raise PolynomialError(
            f"expected {matroid.n + 1} variables, got {poly.nvars}"
        )
    forms = substitution(matroid, basis)
    support = poly.support()
    expanded = _expansions([forms[i] for i in range(matroid.n + 1)], support)
    levels: Dict = {}
    for exponent, image in zip(support, expanded):
        for power, value in poly.terms[exponent].items():
            level = levels.setdefault(power, {})
            for target, coefficient in image.items():
                level[target] = level.get(target, Fraction(0)) + value * coefficient
    return PuiseuxPolynomial.from_levels(levels, 3)
