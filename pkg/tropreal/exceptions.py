"""
    Exceptions raised by tropreal.
"""


class TropRealError(Exception):
    """
    Base class for every error raised by the library.
    """


class CurveError(TropRealError, ValueError):
    """
    Malformed curve data.
    """


class UnbalancedCurveError(CurveError):
    """
    A curve fails the balancing condition where balance is required.
    """


class IdealError(TropRealError, ValueError):
    """
    The ideal does not define a plane, contains a monomial, or a given index
    triple is not a basis of its matroid.
    """


class PolynomialError(TropRealError, ValueError):
    """
    Malformed or unsupported polynomial input.
    """


class PolytopeError(TropRealError, ValueError):
    """
    Lattice polytope data that does not fit the requested construction.
    """


class ContainmentError(TropRealError):
    """
    The curve is not contained in the Bergman fan of the plane.
    """


class ClassicalLineError(TropRealError):
    """
    A marked subdivision was requested for a curve with a one-dimensional
    Newton polytope.
    """


class ProjectionError(TropRealError):
    """
    A push-forward or a lift through projections cannot be carried out.
    """


class OffsetError(TropRealError):
    """
    No generic point was found to relate the valuations of two bases.
    """


class CertificateError(TropRealError):
    """
    A certificate could not be produced or has the wrong shape.
    """


class FileFormatError(TropRealError, ValueError):
    """
    The curve file cannot be read.
    """
