"""
    Utility Functions
"""
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd, lcm
from typing import List, Sequence, Tuple, Union

import sympy

Vector = Tuple[Fraction, ...]
Point2 = Tuple[int, int]


def to_fraction(value) -> Fraction:
    """
    Read an exact rational.

    :param value: An int, a Fraction, a string such as "3" or "-2/5", or a
        sympy rational.

    :return: The value as a Fraction.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"cannot read {value!r} as an exact rational")


def format_fraction(value) -> Union[int, str]:
    """
    JSON friendly form of a rational: an int when integral, "p/q" otherwise.

    :param value: The rational.

    :return: int or string
    """
    value = to_fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def to_sympy(value) -> sympy.Rational:
    value = to_fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def dot(left: Sequence, right: Sequence):
    return sum((a * b for a, b in zip(left, right)), Fraction(0))


def primitive(vector: Sequence) -> Tuple[Tuple[int, ...], Fraction]:
    """
    Split a nonzero rational vector into a primitive integral vector and a
    positive factor.

    :param vector: The vector.

    :return: (primitive vector, factor) with vector = factor * primitive vector
    """
    values = [to_fraction(v) for v in vector]
    if not any(values):
        raise ValueError("the zero vector has no primitive direction")
    denominator = lcm(*(v.denominator for v in values))
    integers = [int(v * denominator) for v in values]
    divisor = gcd(*integers)
    return tuple(i // divisor for i in integers), Fraction(divisor, denominator)


def lattice_length(vector: Sequence[int]) -> int:
    return gcd(*(int(v) for v in vector))


def exact_rank(rows: Sequence[Sequence]) -> int:
    """
    Rank of a rational matrix.

    :param rows: The rows.

    :return: The rank over the rationals.
    """
    if not rows:
        return 0
    return sympy.Matrix([[to_sympy(v) for v in row] for row in rows]).rank()


def exact_nullspace(rows: Sequence[Sequence], columns: int) -> List[Vector]:
    """
    Basis of the right kernel of a rational matrix.

    :param rows: The rows.
    :param columns: The number of columns, needed when there are no rows.

    :return: A list of kernel vectors.
    """
    if not rows:
        return [
            tuple(Fraction(int(i == j)) for j in range(columns))
            for i in range(columns)
        ]
    matrix = sympy.Matrix([[to_sympy(v) for v in row] for row in rows])
    return [tuple(to_fraction(x) for x in vector) for vector in matrix.nullspace()]


def exact_inverse(rows: Sequence[Sequence]) -> List[Vector]:
    matrix = sympy.Matrix([[to_sympy(v) for v in row] for row in rows])
    inverse = matrix.inv()
    return [
        tuple(to_fraction(inverse[i, j]) for j in range(inverse.cols))
        for i in range(inverse.rows)
    ]


def monomials(degree: int, variables: int = 3) -> List[Tuple[int, ...]]:
    """
    Exponent vectors of all monomials of a given degree, ordered
    lexicographically decreasing, so x0^d comes first.

    :param degree: The degree.
    :param variables: The number of variables.

    :return: List of exponent tuples
    """
    exponents = []
    for combination in combinations_with_replacement(range(variables), degree):
        exponent = [0] * variables
        for index in combination:
            exponent[index] += 1
        exponents.append(tuple(exponent))
    return sorted(exponents, reverse=True)


def planar(exponent: Sequence[int]) -> Point2:
    return (exponent[1], exponent[2])


def homogeneous(point: Sequence[int], degree: int) -> Tuple[int, int, int]:
    return (degree - point[0] - point[1], point[0], point[1])


def simplex_points(degree: int) -> List[Point2]:
    return [planar(exponent) for exponent in monomials(degree)]


def moment_combination(vectors: Sequence[Sequence], parameter) -> Vector:
    """
    Combine vectors with the powers 1, x, x^2, ... of a parameter x.

    :param vectors: The vectors, all of the same length.
    :param parameter: The parameter x.

    :return: sum of x^i * vectors[i]
    """
    if not vectors:
        return ()
    parameter = to_fraction(parameter)
    total = [Fraction(0)] * len(vectors[0])
    for power, vector in enumerate(vectors):
        factor = parameter**power
        for index, value in enumerate(vector):
            total[index] += factor * value
    return tuple(total)


def cross(origin: Sequence, first: Sequence, second: Sequence):
    return (first[0] - origin[0]) * (second[1] - origin[1]) - (
        first[1] - origin[1]
    ) * (second[0] - origin[0])


def convex_hull(points) -> List[Point2]:
    """
    Vertices of the convex hull of planar points, counterclockwise, starting
    at the lexicographically smallest one. Collinear boundary points are
    dropped.

    :param points: Planar points.

    :return: The hull vertices.
    """
    unique = sorted(set(tuple(p) for p in points))
    if len(unique) <= 2:
        return unique

    lower: List = []
    for point in unique:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], point) <= 0:
            lower.pop()
        lower.append(point)
    upper: List = []
    for point in reversed(unique):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], point) <= 0:
            upper.pop()
        upper.append(point)
    return lower[:-1] + upper[:-1]


def lower_hull(points) -> List:
    """
    Lower convex hull of points (x, h), sorted by x, without collinear points.

    :param points: Pairs (x, h).

    :return: The hull vertices from left to right.
    """
    hull: List = []
    for point in sorted(points):
        while len(hull) >= 2 and cross(hull[-2], hull[-1], point) <= 0:
            hull.pop()
        hull.append(point)
    return hull
