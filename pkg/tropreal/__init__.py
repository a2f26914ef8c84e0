"""
    Main API class.
"""
from typing import Optional, Sequence, Union

import eventlet

from tropreal import realizability
from tropreal.curve import TropicalCurve, WeightedFan
from tropreal.exceptions import IdealError, TropRealError
from tropreal.matroid import PlaneIdeal, PlaneMatroid
from tropreal.newton import PuiseuxPolynomial
from tropreal.projection import pushforward

__all__ = ["Realizer", "PlaneIdeal", "TropicalCurve", "TropRealError"]


class Realizer:
    """
    Relative realizability of tropical curves in the tropicalization of one
    plane.
    """

    def __init__(
        self,
        ideal: Union[PlaneIdeal, Sequence[Sequence]],
        jobs: int = 1,
        timeout: Optional[float] = None,
        anchor_vertex: Optional[Sequence[int]] = None,
        initial_basis: Optional[Sequence[int]] = None,
    ):
        if ideal is None:
            raise ValueError("An ideal is required.")
        if not isinstance(ideal, PlaneIdeal):
            ideal = PlaneIdeal(ideal)
        self.ideal = ideal
        self.matroid = PlaneMatroid(ideal)
        if isinstance(jobs, bool) or not isinstance(jobs, int) or jobs < 1:
            raise ValueError(f"jobs must be a positive integer, got {jobs!r}.")
        self.jobs = jobs
        if timeout is not None and timeout <= 0:
            raise ValueError(f"timeout must be positive or None, got {timeout!r}.")
        self.timeout = timeout
        if anchor_vertex is not None:
            anchor_vertex = tuple(anchor_vertex)
            if len(anchor_vertex) != 2 or any(
                not isinstance(i, int) or i < 0 for i in anchor_vertex
            ):
                raise ValueError(
                    "anchor_vertex must be two non-negative integers, "
                    f"got {anchor_vertex}."
                )
        self.anchor_vertex = anchor_vertex
        if initial_basis is not None:
            initial_basis = tuple(initial_basis)
            if not self.matroid.is_basis(initial_basis):
                raise ValueError(f"initial_basis {initial_basis} is not a basis.")
        self.initial_basis = initial_basis

    def _options(self):
        return {
            "jobs": self.jobs,
            "anchor_vertex": self.anchor_vertex,
            "initial_basis": self.initial_basis,
        }

    def _run(self, func, *args, **kwargs):
        with eventlet.Timeout(self.timeout):
            return func(*args, **kwargs)

    def validate(self, curve: TropicalCurve) -> realizability.ValidationReport:
        """
        Balancing and containment report.

        :param curve: The curve.

        :return: ValidationReport
        """
        return realizability.validate(self.ideal, curve)

    def decide(self, curve: TropicalCurve) -> realizability.Decision:
        """
        Decide whether the curve is relatively realizable.

        :param curve: A balanced curve in the tropicalization of the plane.

        :return: Decision, with ``code`` 1 or -1
        """
        return self._run(realizability.decide, self.ideal, curve, **self._options())

    def certificate(self, curve: TropicalCurve) -> Optional[realizability.Certificate]:
        """
        A polynomial realizing the curve.

        :param curve: A balanced curve in the tropicalization of the plane.

        :return: Certificate, or None when the curve is not realizable
        """
        return self._run(
            realizability.certificate, self.ideal, curve, **self._options()
        )

    def verify(
        self, curve: TropicalCurve, poly: Union[str, PuiseuxPolynomial]
    ) -> realizability.CertificateVerdict:
        """
        Check a candidate polynomial against every push-forward.

        :param curve: A balanced curve in the tropicalization of the plane.
        :param poly: A PuiseuxPolynomial, or text such as
            ``(t)*x0+x1+(t+1)*x2`` in the variables x0, ..., xn.

        :return: CertificateVerdict
        """
        if isinstance(poly, str):
            names = [f"x{i}" for i in range(self.ideal.n + 1)]
            poly = PuiseuxPolynomial.from_text(poly, names)
        options = {"jobs": self.jobs, "initial_basis": self.initial_basis}
        return self._run(
            realizability.verify_certificate, self.ideal, curve, poly, **options
        )

    def project(self, curve: TropicalCurve, basis: Sequence[int]) -> TropicalCurve:
        """
        Tropical push-forward onto the coordinates of a basis.

        :param curve: The curve.
        :param basis: Three coordinate indices forming a basis.

        :return: The plane curve
        """
        if not self.matroid.is_basis(basis):
            raise IdealError(f"{tuple(basis)} is not a basis")
        return pushforward(curve, basis)

    def degree(self, curve: TropicalCurve) -> int:
        return curve.degree()

    def recession(self, curve: TropicalCurve) -> WeightedFan:
        return curve.recession_fan()

    def __repr__(self):
        return f"Realizer('{self.ideal}')"

    def __str__(self):
        return self.__repr__()
