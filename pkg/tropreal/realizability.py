"""
    Decide whether a tropical curve in a tropical plane is relatively
    realizable, and extract a realizing polynomial.

    The coefficients a_nu of a degree d form in the variables of an initial
    basis A0 are the unknowns. Every basis B contributes one condition per
    monomial of f_B: the coefficient vanishes, has a prescribed valuation, or
    has valuation at least a bound. Splitting the unknowns by powers of t
    turns these into one linear system with disequalities per t-level.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import eventlet

from tropreal.curve import TropicalCurve
from tropreal.exceptions import (
    CertificateError,
    ContainmentError,
    CurveError,
    IdealError,
    OffsetError,
    PolynomialError,
    ProjectionError,
    UnbalancedCurveError,
)
from tropreal.matroid import Basis, PlaneIdeal, PlaneMatroid
from tropreal.mixins import BasisCacheMixin
from tropreal.newton import (
    MarkedCell,
    PuiseuxPolynomial,
    is_classical_line,
    marked_subdivision,
    newton_polytope,
    segment_cells,
    tropicalize_poly,
)
from tropreal.projection import (
    CoeffMap,
    coeff_map,
    project_point,
    project_polynomial,
    pushforward,
)
from tropreal.utils import (
    Point2,
    Vector,
    dot,
    exact_nullspace,
    homogeneous,
    moment_combination,
    monomials,
    planar,
    simplex_points,
)

logger = logging.getLogger(__name__)

MAX_CERTIFICATE_ATTEMPTS = 32
OFFSET_SCALES = (1, 2, 3, 5, 7, 11, Fraction(1, 2), Fraction(1, 3))
OFFSET_RATIOS = (
    (1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2), (1, 4), (4, 1),
    (3, 4), (4, 3), (1, 5), (5, 1), (2, 5), (5, 2), (3, 5), (5, 3), (4, 5),
    (5, 4),
)  # fmt: skip


class ConditionKind(Enum):
    ZERO = "= 0"
    VAL_EQ = "val ="
    VAL_GEQ = "val >="


@dataclass(frozen=True)
class ValuationCondition:
    """
    Condition on the coefficient of x^exponent in f_B; ``form`` writes that
    coefficient as a linear form in the master coefficients.
    """

    basis: Basis
    exponent: Tuple[int, int, int]
    kind: ConditionKind
    value: Optional[Fraction]
    form: Tuple[Fraction, ...]

    def __str__(self):
        coefficient = f"a{self.exponent}"
        if self.kind is ConditionKind.ZERO:
            return f"{self.basis} {coefficient} = 0"
        relation = "=" if self.kind is ConditionKind.VAL_EQ else ">="
        return f"{self.basis} val({coefficient}) {relation} {self.value}"


@dataclass(frozen=True)
class ConditionSystem:
    initial_basis: Basis
    anchor: Point2
    degree: int
    conditions: Tuple[ValuationCondition, ...]
    offsets: Dict[Basis, Fraction] = field(default_factory=dict)

    @property
    def nvars(self) -> int:
        return len(monomials(self.degree))

    @property
    def rhs(self) -> List[Fraction]:
        return sorted({c.value for c in self.conditions if c.value is not None})


@dataclass(frozen=True)
class LevelSystem:
    """
    The conditions on the t^level coefficients: the forms in ``equalities``
    vanish, the forms in ``disequalities`` do not.
    """

    level: Fraction
    equalities: Tuple[Tuple[Fraction, ...], ...]
    disequalities: Tuple[Tuple[Fraction, ...], ...]
    nvars: int


@dataclass(frozen=True)
class LevelVerdict:
    level: Fraction
    solvable: bool
    witness: Optional[Vector] = None
    multiplier: Optional[int] = None
    blocking: Tuple[int, ...] = ()

    def __bool__(self):
        return self.solvable


@dataclass(frozen=True)
class Decision:
    realizable: bool
    levels: Tuple[LevelVerdict, ...]
    system: ConditionSystem

    @property
    def code(self) -> int:
        return 1 if self.realizable else -1

    def __bool__(self):
        return self.realizable


@dataclass(frozen=True)
class Certificate:
    polynomial: PuiseuxPolynomial
    initial_basis: Basis

    @property
    def variables(self) -> List[str]:
        return [f"x{j}" for j in self.initial_basis]

    def to_text(self) -> str:
        return self.polynomial.to_text(self.variables)


@dataclass(frozen=True)
class CertificateVerdict:
    passed: bool
    failures: Tuple[Basis, ...] = ()

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class ValidationReport:
    balanced: bool
    unbalanced_vertices: Tuple[int, ...]
    contained: bool
    offending_edges: Tuple[int, ...]
    offending_points: Tuple[Vector, ...]
    degree: Optional[int]

    def __bool__(self):
        return self.balanced and self.contained


def _dual_cells(curve: TropicalCurve) -> List[MarkedCell]:
    line = is_classical_line(curve)
    if line is not None:
        return [MarkedCell((line.mu, line.nu), line.point)]
    if newton_polytope(curve).dimension == 1:
        return list(segment_cells(curve).cells)
    return list(marked_subdivision(curve).cells)


def local_valuations(
    curve: TropicalCurve, degree: int
) -> Dict[Point2, Tuple[ConditionKind, Optional[Fraction]]]:
    """
    Conditions on the valuations of a plane polynomial tropicalizing to a
    curve, up to one common additive constant.

    :param curve: A plane curve.
    :param degree: Its degree.

    :return: {lattice point of the degree simplex: (kind, value)}
    """
    if curve.degree() != degree:
        raise ProjectionError(
            f"plane curve has degree {curve.degree()}, expected {degree}"
        )
    cells = _dual_cells(curve)
    known: Dict[Point2, Fraction] = {cells[0].points[0]: Fraction(0)}
    levels: Dict[MarkedCell, Fraction] = {}
    pending = list(cells)
    while pending:
        placed = [cell for cell in pending if any(p in known for p in cell.points)]
        if not placed:
            raise ProjectionError("the dual subdivision is not connected")
        for cell in placed:
            reference = next(p for p in cell.points if p in known)
            levels[cell] = known[reference] + dot(reference, cell.marking)
            for point in cell.points:
                value = levels[cell] - dot(point, cell.marking)
                if known.setdefault(point, value) != value:
                    raise CurveError(f"inconsistent valuations at {point}")
            pending.remove(cell)

    result: Dict[Point2, Tuple[ConditionKind, Optional[Fraction]]] = {}
    for cell in cells:
        for point in cell.polytope().lattice_points():
            if point not in known:
                bound = levels[cell] - dot(point, cell.marking)
                result.setdefault(point, (ConditionKind.VAL_GEQ, bound))
    for point, value in known.items():
        result[point] = (ConditionKind.VAL_EQ, value)
    for point in simplex_points(degree):
        result.setdefault(point, (ConditionKind.ZERO, None))
    return result


def decompose(system: ConditionSystem) -> List[LevelSystem]:
    """
    Split a condition system into one linear system per right hand side.

    :param system: The conditions.

    :return: LevelSystems ordered by level
    """
    result = []
    for level in system.rhs:
        equalities, disequalities = [], []
        for condition in system.conditions:
            if condition.kind is ConditionKind.ZERO or level < condition.value:
                equalities.append(condition.form)
            elif condition.kind is ConditionKind.VAL_EQ and level == condition.value:
                disequalities.append(condition.form)
        result.append(
            LevelSystem(level, tuple(equalities), tuple(disequalities), system.nvars)
        )
    return result


def solve_level(level: LevelSystem, start: int = 1) -> LevelVerdict:
    """
    Find a vector on which all equality forms vanish and no disequality
    form does.

    :param level: The level system.
    :param start: First multiplier of the deterministic witness search.

    :return: LevelVerdict with a witness, or the blocking disequalities
    """
    kernel = exact_nullspace(level.equalities, level.nvars)
    blocking = tuple(
        index
        for index, form in enumerate(level.disequalities)
        if not any(dot(form, vector) for vector in kernel)
    )
    if blocking:
        logger.debug(
            "level %s: %d disequalities lie in the span of the equalities",
            level.level,
            len(blocking),
        )
        return LevelVerdict(level.level, False, blocking=blocking)
    attempts = len(level.disequalities) * max(len(kernel) - 1, 0) + 1
    for multiplier in range(start, start + attempts):
        witness = moment_combination(kernel, multiplier) or (
            (Fraction(0),) * level.nvars
        )
        if all(dot(form, witness) for form in level.disequalities):
            logger.debug("level %s: witness at multiplier %d", level.level, multiplier)
            return LevelVerdict(level.level, True, witness, multiplier)
    raise CertificateError(f"no witness found for level {level.level}")


class RealizabilityProblem(BasisCacheMixin):
    """
    A curve in the tropicalization of a plane, prepared for the decision
    procedure. Vertices must be integral.
    """

    def __init__(
        self,
        ideal: PlaneIdeal,
        curve: TropicalCurve,
        jobs: int = 1,
        anchor_vertex: Optional[Sequence[int]] = None,
        initial_basis: Optional[Sequence[int]] = None,
    ):
        self.ideal = ideal
        self.matroid = PlaneMatroid(ideal)
        if curve.n != ideal.n:
            raise CurveError(f"curve lives in n={curve.n}, the plane in n={ideal.n}")
        if curve.integral_scale() != 1:
            raise CurveError(
                f"vertices are not integral, rescale by {curve.integral_scale()} first"
            )
        balance = curve.check_balanced()
        if not balance:
            raise UnbalancedCurveError(
                f"unbalanced at vertices {list(balance.violations)}"
            )
        containment = self.matroid.contains_curve(curve)
        if not containment:
            raise ContainmentError(
                f"edges {list(containment.edges)} leave the tropical plane"
            )
        self.curve = curve
        self.degree = curve.degree()
        if self.degree < 1:
            raise CurveError("the curve has degree 0")
        self.bases: List[Basis] = self.matroid.enumerate_bases()
        if initial_basis is None:
            initial_basis = self.bases[0]
        elif not self.matroid.is_basis(initial_basis):
            raise IdealError(f"{tuple(initial_basis)} is not a basis")
        self.initial_basis: Basis = tuple(initial_basis)
        self.anchor_vertex = None if anchor_vertex is None else tuple(anchor_vertex)
        self.jobs = jobs
        self.basis_cache: Dict = {}

    def _map(self, func: Callable, items: Iterable) -> List:
        def run(item):
            eventlet.sleep(0)
            return func(item)

        if self.jobs > 1:
            pool = eventlet.GreenPool(self.jobs)
            return list(pool.imap(run, items))
        return [run(item) for item in items]

    def pushforward(self, basis: Sequence[int]) -> TropicalCurve:
        return self._get_cached(
            "pushforward", basis, lambda: pushforward(self.curve, basis)
        )

    def coeff_map(self, basis: Sequence[int]) -> CoeffMap:
        return self._get_cached(
            "coeff_map",
            basis,
            lambda: coeff_map(self.matroid, self.initial_basis, basis, self.degree),
        )

    def local_valuations(self, basis: Sequence[int]) -> Dict:
        def build():
            image = self.pushforward(basis)
            if not image.edges:
                raise ProjectionError(f"the push-forward onto {tuple(basis)} is empty")
            return local_valuations(image, self.degree)

        return self._get_cached("local_valuations", basis, build)

    def _minimum(self, basis: Basis, point: Sequence[Fraction]) -> Fraction:
        image = [point[j] for j in basis]
        return min(
            value + dot(homogeneous(p, self.degree), image)
            for p, (kind, value) in self.local_valuations(basis).items()
            if kind is ConditionKind.VAL_EQ
        )

    def _generic_points(self):
        for cone in self.matroid.maximal_cones():
            first, second = cone.generators
            for scale in OFFSET_SCALES:
                for a, b in OFFSET_RATIOS:
                    yield tuple(
                        scale * (a * u + b * v) for u, v in zip(first, second)
                    )

    def basis_offsets(self) -> Dict[Basis, Fraction]:
        """
        Offsets making the valuations of all bases absolute: at a point Y of
        the plane off the projected curves, trop(f_B)(Y_B) is the same for
        every basis.

        :return: {basis: offset}, zero for the initial basis
        """

        def cached():
            offsets = {self.initial_basis: Fraction(0)}
            while len(offsets) < len(self.bases):
                found = len(offsets)
                for point in self._generic_points():
                    if len(offsets) == len(self.bases):
                        break
                    if self.curve.contains_point(point):
                        continue
                    generic = [
                        basis
                        for basis in self.bases
                        if not self.pushforward(basis).contains_point(
                            project_point(point, basis)
                        )
                    ]
                    solved = [basis for basis in generic if basis in offsets]
                    if not solved:
                        continue
                    value = offsets[solved[0]] + self._minimum(solved[0], point)
                    for basis in generic:
                        if basis not in offsets:
                            offsets[basis] = value - self._minimum(basis, point)
                if len(offsets) == found:
                    missing = [b for b in self.bases if b not in offsets]
                    raise OffsetError(f"no generic point found for bases {missing}")
            logger.debug("basis offsets %s", offsets)
            return offsets

        return self._get_cached("offsets", self.initial_basis, cached)

    def anchor(self) -> Point2:
        """
        The lattice point whose master coefficient gets valuation 0.

        :return: A planar lattice point.
        """
        if self.anchor_vertex is None:
            return newton_polytope(self.pushforward(self.initial_basis)).vertices[0]
        kind, _ = self.local_valuations(self.initial_basis).get(
            self.anchor_vertex, (None, None)
        )
        if kind is not ConditionKind.VAL_EQ:
            raise CurveError(
                f"anchor {self.anchor_vertex} is not a vertex of the subdivision"
            )
        return self.anchor_vertex

    def collect_conditions(self) -> ConditionSystem:
        """
        All valuation conditions over all bases, made absolute.

        :return: ConditionSystem
        """
        self._map(self.local_valuations, self.bases)
        self._map(self.coeff_map, self.bases)
        offsets = self.basis_offsets()
        anchor = self.anchor()
        shift = self.local_valuations(self.initial_basis)[anchor][1]
        conditions = []
        for basis in self.bases:
            local = self.local_valuations(basis)
            mapping = self.coeff_map(basis)
            for exponent in monomials(self.degree):
                kind, value = local[planar(exponent)]
                if value is not None:
                    value = value + offsets[basis] - shift
                conditions.append(
                    ValuationCondition(
                        basis, exponent, kind, value, mapping.row(exponent)
                    )
                )
        system = ConditionSystem(
            self.initial_basis, anchor, self.degree, tuple(conditions), offsets
        )
        logger.debug(
            "%d conditions over %d bases, right hand sides %s",
            len(conditions),
            len(self.bases),
            [str(k) for k in system.rhs],
        )
        return system

    def solve_levels(
        self, levels: Sequence[LevelSystem], starts: Optional[Sequence[int]] = None
    ) -> List[LevelVerdict]:
        if starts is None:
            starts = [1] * len(levels)
        return self._map(
            lambda pair: solve_level(pair[0], pair[1]), list(zip(levels, starts))
        )

    def decide(self) -> Decision:
        """
        Run the decision procedure.

        :return: Decision
        """
        system = self.collect_conditions()
        verdicts = self.solve_levels(decompose(system))
        realizable = all(verdicts)
        logger.info(
            "curve of degree %d is %srealizable",
            self.degree,
            "" if realizable else "not ",
        )
        return Decision(realizable, tuple(verdicts), system)

    def _assemble(self, verdicts: Sequence[LevelVerdict]) -> PuiseuxPolynomial:
        exponents = monomials(self.degree)
        return PuiseuxPolynomial.from_levels(
            {v.level: dict(zip(exponents, v.witness)) for v in verdicts}, 3
        )

    def certificate(self) -> Optional[Certificate]:
        """
        A polynomial in the initial basis variables realizing the curve.

        :return: Certificate, or None when the curve is not realizable
        """
        system = self.collect_conditions()
        levels = decompose(system)
        verdicts = self.solve_levels(levels)
        if not all(verdicts):
            return None
        for attempt in range(MAX_CERTIFICATE_ATTEMPTS):
            poly = self._assemble(verdicts)
            check = self.verify_certificate(poly)
            if check:
                return Certificate(poly, self.initial_basis)
            logger.warning(
                "candidate %d fails on bases %s, trying the next witnesses",
                attempt + 1,
                list(check.failures),
            )
            verdicts = self.solve_levels(levels, [v.multiplier + 1 for v in verdicts])
        raise CertificateError(
            f"no verified certificate after {MAX_CERTIFICATE_ATTEMPTS} attempts"
        )

    def verify_certificate(self, poly: PuiseuxPolynomial) -> CertificateVerdict:
        """
        Check Trop(f_B) against the push-forward onto B for every basis.

        :param poly: A polynomial in the initial basis variables, or in all
            n+1 variables.

        :return: CertificateVerdict listing the failing bases
        """
        if poly.degree != self.degree:
            raise CertificateError(
                f"certificate has degree {poly.degree}, the curve {self.degree}"
            )
        if poly.nvars not in (3, self.ideal.n + 1):
            raise PolynomialError(f"cannot read a polynomial in {poly.nvars} variables")

        def check(basis):
            if poly.nvars == self.ideal.n + 1:
                image = project_polynomial(self.matroid, poly, basis)
            else:
                image = self.coeff_map(basis).apply_polynomial(poly)
            try:
                tropical = tropicalize_poly(image)
            except PolynomialError:
                return False
            return tropical == self.pushforward(basis)

        results = self._map(check, self.bases)
        failures = tuple(b for b, ok in zip(self.bases, results) if not ok)
        return CertificateVerdict(not failures, failures)


def validate(ideal: PlaneIdeal, curve: TropicalCurve) -> ValidationReport:
    """
    Balancing and containment report for a curve.

    :param ideal: The plane.
    :param curve: The curve.

    :return: ValidationReport
    """
    balance = curve.check_balanced()
    containment = PlaneMatroid(ideal).contains_curve(curve)
    try:
        degree = curve.degree()
    except UnbalancedCurveError:
        degree = None
    return ValidationReport(
        balance.balanced,
        balance.violations,
        containment.contained,
        containment.edges,
        containment.points,
        degree,
    )


def collect_conditions(
    ideal: PlaneIdeal, curve: TropicalCurve, **options
) -> ConditionSystem:
    return RealizabilityProblem(ideal, curve, **options).collect_conditions()


def basis_offsets(ideal: PlaneIdeal, curve: TropicalCurve, **options):
    return RealizabilityProblem(ideal, curve, **options).basis_offsets()


def decide(ideal: PlaneIdeal, curve: TropicalCurve, **options) -> Decision:
    """
    Decide relative realizability; rational vertices are rescaled first.

    :param ideal: The plane.
    :param curve: A balanced curve in its tropicalization.
    :param options: jobs, anchor_vertex, initial_basis

    :return: Decision
    """
    scale = curve.integral_scale()
    return RealizabilityProblem(ideal, curve.rescale(scale), **options).decide()


def certificate(
    ideal: PlaneIdeal, curve: TropicalCurve, **options
) -> Optional[Certificate]:
    """
    A realizing polynomial for a curve with possibly rational vertices.

    :param ideal: The plane.
    :param curve: A balanced curve in its tropicalization.
    :param options: jobs, anchor_vertex, initial_basis

    :return: Certificate or None
    """
    scale = curve.integral_scale()
    found = RealizabilityProblem(ideal, curve.rescale(scale), **options).certificate()
    if found is None or scale == 1:
        return found
    return Certificate(
        found.polynomial.substitute_t_power(Fraction(1, scale)), found.initial_basis
    )


def verify_certificate(
    ideal: PlaneIdeal, curve: TropicalCurve, poly: PuiseuxPolynomial, **options
) -> CertificateVerdict:
    """
    Check that a polynomial realizes a curve.

    :param ideal: The plane.
    :param curve: A balanced curve in its tropicalization.
    :param poly: In the initial basis variables or in all variables.
    :param options: jobs, initial_basis

    :return: CertificateVerdict
    """
    scale = curve.integral_scale()
    problem = RealizabilityProblem(ideal, curve.rescale(scale), **options)
    return problem.verify_certificate(poly.substitute_t_power(scale))
