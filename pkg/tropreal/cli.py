"""
    Command line interface: curve files, command dispatch and output.

    A curve file is a JSON object with the ambient dimension marker ``n``, the
    generator matrix ``ideal`` of the plane and the V/E/M lists of the curve.
    Rationals are integers or strings such as "1/2"; E holds 1-based pairs of
    positions in V.
"""
import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import eventlet

from tropreal import Realizer
from tropreal.curve import TropicalCurve
from tropreal.exceptions import FileFormatError, TropRealError
from tropreal.l32 import (
    PolytopePair,
    fan_realizable_opposite,
    length_interval,
    row_statistics,
)
from tropreal.matroid import PlaneIdeal

logger = logging.getLogger(__name__)

VERBOSITY = (logging.WARNING, logging.INFO, logging.DEBUG)


@dataclass(frozen=True)
class ParsedCurve:
    """
    The contents of a curve file. ``scale`` is the least common denominator
    of the vertex coordinates.
    """

    ideal: PlaneIdeal
    curve: TropicalCurve
    scale: int

    @property
    def integral(self) -> TropicalCurve:
        return self.curve.rescale(self.scale)


def read_curve(data: Dict, source: str = "<data>") -> ParsedCurve:
    """
    Build the plane and the curve from a decoded curve file.

    :param data: The JSON object.
    :param source: Name used in error messages.

    :return: ParsedCurve
    """
    if not isinstance(data, dict):
        raise FileFormatError(f"{source}: expected a JSON object")
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise FileFormatError(f"{source}: n must be an integer")
    try:
        ideal = PlaneIdeal(data.get("ideal", []), n)
        curve = TropicalCurve.from_vem(data, n)
    except (TypeError, ValueError, KeyError, AttributeError) as err:
        raise FileFormatError(f"{source}: {err}") from err
    scale = curve.integral_scale()
    if scale != 1:
        logger.info("%s has rational vertices, scale factor %d", source, scale)
    return ParsedCurve(ideal, curve, scale)


def parse_curve(path: str) -> ParsedCurve:
    """
    Read a curve file.

    :param path: Path of the JSON file.

    :return: ParsedCurve
    """
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as err:
        raise FileFormatError(f"cannot read {path}: {err.strerror}") from err
    except json.JSONDecodeError as err:
        raise FileFormatError(f"{path} is not valid JSON: {err}") from err
    return read_curve(data, path)


def write_curve(curve: TropicalCurve) -> str:
    return json.dumps(curve.to_vem(), indent=2)


def write_svg(curve: TropicalCurve, path: str) -> None:
    """
    Draw a plane curve, rays cut off past the bounding box of its vertices.

    :param curve: A curve with n=2.
    :param path: Target file.
    """
    try:
        import matplotlib  # pylint: disable=import-outside-toplevel

        matplotlib.use("Agg")
        from matplotlib import pyplot  # pylint: disable=import-outside-toplevel
    except ImportError as err:
        raise TropRealError("writing SVG files needs matplotlib") from err
    cells = curve.cells()
    coordinates = [abs(c) for cell in cells for c in cell.start]
    reach = 1 + max(coordinates, default=0)
    figure, axes = pyplot.subplots()
    for cell in cells:
        end = cell.end if cell.length is not None else cell.point_at(reach)
        xs = [float(cell.start[0]), float(end[0])]
        ys = [float(cell.start[1]), float(end[1])]
        axes.plot(xs, ys, color="black", linewidth=cell.weight)
        if cell.weight > 1:
            axes.annotate(str(cell.weight), (sum(xs) / 2, sum(ys) / 2))
    axes.set_aspect("equal")
    figure.savefig(path, format="svg")
    pyplot.close(figure)


def _integers(count: int):
    def parse(text: str) -> List[int]:
        try:
            values = [int(part) for part in text.split(",")]
        except ValueError as err:
            message = f"{text!r} is not a list of integers"
            raise argparse.ArgumentTypeError(message) from err
        if len(values) != count:
            raise argparse.ArgumentTypeError(f"expected {count} integers, got {text!r}")
        return values

    return parse


def _realizer(args: argparse.Namespace, parsed: ParsedCurve) -> Realizer:
    return Realizer(
        parsed.ideal,
        jobs=args.jobs,
        timeout=args.timeout,
        anchor_vertex=args.anchor_vertex,
        initial_basis=args.initial_basis,
    )


def cmd_validate(args: argparse.Namespace) -> int:
    parsed = parse_curve(args.file)
    report = _realizer(args, parsed).validate(parsed.curve)
    print(f"balanced: {'yes' if report.balanced else 'no'}")
    if report.unbalanced_vertices:
        numbers = ", ".join(str(i + 1) for i in report.unbalanced_vertices)
        print(f"unbalanced vertices: {numbers}")
    print(f"contained: {'yes' if report.contained else 'no'}")
    if report.offending_edges:
        numbers = ", ".join(str(i + 1) for i in report.offending_edges)
        print(f"edges leaving the plane: {numbers}")
    if report.degree is not None:
        print(f"degree: {report.degree}")
    return 0 if report else 1


def cmd_realizable(args: argparse.Namespace) -> int:
    parsed = parse_curve(args.file)
    decision = _realizer(args, parsed).decide(parsed.curve)
    print(decision.code)
    return 0 if decision else 1


def cmd_certificate(args: argparse.Namespace) -> int:
    parsed = parse_curve(args.file)
    found = _realizer(args, parsed).certificate(parsed.curve)
    if found is None:
        print("none")
        return 1
    print(found.to_text())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    parsed = parse_curve(args.file)
    verdict = _realizer(args, parsed).verify(parsed.curve, args.poly)
    if not verdict:
        logger.info("certificate fails on bases %s", list(verdict.failures))
    print(1 if verdict else -1)
    return 0 if verdict else 1


def cmd_project(args: argparse.Namespace) -> int:
    parsed = parse_curve(args.file)
    image = _realizer(args, parsed).project(parsed.curve, args.basis)
    print(write_curve(image))
    if args.svg:
        write_svg(image, args.svg)
    return 0


def cmd_degree(args: argparse.Namespace) -> int:
    parsed = parse_curve(args.file)
    print(parsed.curve.degree())
    return 0


def cmd_recession(args: argparse.Namespace) -> int:
    parsed = parse_curve(args.file)
    print(write_curve(parsed.curve.recession_fan().to_curve()))
    return 0


def cmd_l32_interval(args: argparse.Namespace) -> int:
    parsed = parse_curve(args.file)
    pair = PolytopePair.from_curve(parsed.integral, parsed.ideal)
    print(f"I = {length_interval(pair)}")
    verdict = fan_realizable_opposite(pair)
    print(f"recession fan: {'realizable' if verdict else 'not realizable'}")
    print("side vertex s n r l")
    for side, vertex, stats in row_statistics(pair):
        print(
            f"{side.value} ({vertex[0]},{vertex[1]}) "
            f"{stats.s} {stats.n} {stats.r} {stats.l}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    engine = argparse.ArgumentParser(add_help=False)
    engine.add_argument("file", help="curve file (JSON)")
    engine.add_argument("--jobs", type=int, default=1, help="green threads")
    engine.add_argument("--timeout", type=float, default=None, help="seconds")
    engine.add_argument(
        "--anchor-vertex",
        type=_integers(2),
        default=None,
        metavar="I,J",
        help="lattice point whose coefficient gets valuation 0",
    )
    engine.add_argument(
        "--initial-basis",
        type=_integers(3),
        default=None,
        metavar="J0,J1,J2",
        help="basis whose coefficients are the unknowns",
    )

    parser = argparse.ArgumentParser(
        prog="tropreal",
        description="Relative realizability of tropical curves in tropical planes.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v info, -vv debug"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    commands = (
        ("validate", cmd_validate, "balancing and containment report"),
        ("realizable", cmd_realizable, "print 1 if realizable, -1 otherwise"),
        ("certificate", cmd_certificate, "print a realizing polynomial or none"),
        ("verify", cmd_verify, "check a polynomial against the curve"),
        ("project", cmd_project, "push-forward onto a basis"),
        ("degree", cmd_degree, "degree of the curve"),
        ("recession", cmd_recession, "recession fan of the curve"),
        ("l32-interval", cmd_l32_interval, "length interval and row statistics"),
    )
    for name, func, help_text in commands:
        command = subparsers.add_parser(name, parents=[engine], help=help_text)
        command.set_defaults(func=func)
        if name == "verify":
            command.add_argument("--poly", required=True, help="(t)*x0+x1+(t+1)*x2")
        if name == "project":
            command.add_argument("--basis", type=_integers(3), required=True)
            command.add_argument("--svg", default=None, help="also draw to this file")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the tropreal command.

    :param argv: Arguments without the program name, sys.argv by default.

    :return: 0 for a positive verdict, 1 for a negative one, 2 for errors
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=VERBOSITY[min(args.verbose, 2)],
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except eventlet.Timeout as err:
        print(f"error: timed out after {err.seconds} seconds", file=sys.stderr)
    except (TropRealError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
    return 2
