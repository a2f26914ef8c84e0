import os

import pytest

from tropreal.cli import ParsedCurve, parse_curve
from tropreal.curve import TropicalCurve
from tropreal.matroid import standard_plane
from tropreal.newton import PuiseuxPolynomial

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

FOUR_VARIABLES = ["x0", "x1", "x2", "x3"]
THREE_VARIABLES = ["x0", "x1", "x2"]


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


def load(name: str) -> ParsedCurve:
    return parse_curve(data_path(name))


def fan(n, rays, weights=None) -> TropicalCurve:
    weights = weights or [1] * len(rays)
    edges = [(0, 1 + i) for i in range(len(rays))]
    return TropicalCurve(n, [[0] * (n + 1)], rays, edges, weights)


def poly(text: str, variables=None) -> PuiseuxPolynomial:
    return PuiseuxPolynomial.from_text(text, variables or THREE_VARIABLES)


@pytest.fixture
def plane():
    return standard_plane(3)


@pytest.fixture
def singular():
    return load("singular_example.json")


@pytest.fixture
def weight3():
    return load("weight3.json")


@pytest.fixture
def intro():
    return load("intro.json")


@pytest.fixture
def ex_rec():
    return load("ex_rec.json")


@pytest.fixture
def ex_empty():
    return load("ex_empty.json")


@pytest.fixture
def square_fan():
    """Degree 2 plane fan with rays (1,0), (-1,0), (0,1), (0,-1)."""
    return fan(2, [[0, 1, 0], [1, 0, 1], [0, 0, 1], [1, 1, 0]])


@pytest.fixture
def three_cell_poly():
    return poly("t^2*x0^2 + t*x0*x1 - 2*t*x0*x2 + t*x1^2 - 2*t*x2^2 + x1*x2")
