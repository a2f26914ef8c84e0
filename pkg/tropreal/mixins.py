"""
    Mixin classes for curves and the realizability engine.
"""
from typing import Callable, Dict, Sequence

from tropreal.exceptions import CurveError
from tropreal.utils import format_fraction, to_fraction


class VEMMixin:
    """
    Provides the V/E/M list description of a weighted complex: tagged
    vertices and rays, 1-based index pairs into that list, and weights.
    """

    def to_vem(self) -> Dict:
        """
        Describe the complex by its V, E and M lists.

        :return: A JSON serializable dictionary.
        """
        entries = [
            {"kind": "vertex", "coords": [format_fraction(c) for c in vertex]}
            for vertex in self.vertices
        ]
        entries += [
            {"kind": "ray", "coords": [format_fraction(c) for c in ray]}
            for ray in self.rays
        ]
        return {
            "n": self.n,
            "V": entries,
            "E": [[first + 1, second + 1] for first, second in self.edges],
            "M": list(self.weights),
        }

    @classmethod
    def from_vem(cls, data: Dict, n: int = None):
        """
        Build a complex from V, E and M lists. Vertices and rays may be
        interleaved in V.

        :param data: Dictionary with keys V, E, M and optionally n.
        :param n: Ambient dimension marker, read from data when omitted.

        :return: A new instance.
        """
        try:
            entries: Sequence = data["V"]
            pairs: Sequence = data["E"]
            weights: Sequence = data["M"]
        except KeyError as err:
            raise CurveError(f"missing list {err.args[0]}") from err
        if n is None:
            n = data.get("n")
        if n is None and entries:
            n = len(entries[0]["coords"]) - 1

        vertices, rays, position = [], [], {}
        for index, entry in enumerate(entries):
            kind = entry.get("kind")
            coords = [to_fraction(c) for c in entry.get("coords", [])]
            if kind == "vertex":
                position[index] = ("vertex", len(vertices))
                vertices.append(coords)
            elif kind == "ray":
                position[index] = ("ray", len(rays))
                rays.append(coords)
            else:
                raise CurveError(f"V entry {index + 1} has unknown kind {kind!r}")

        edges = []
        for number, pair in enumerate(pairs, start=1):
            if len(pair) != 2:
                raise CurveError(f"E entry {number} is not a pair")
            first, second = (int(i) - 1 for i in pair)
            if first not in position or second not in position:
                raise CurveError(f"E entry {number} points outside of V")
            kind, start = position[first]
            if kind != "vertex":
                raise CurveError(f"E entry {number} does not start at a vertex")
            kind, end = position[second]
            edges.append((start, end if kind == "vertex" else len(vertices) + end))
        return cls(n, vertices, rays, edges, weights)


class BasisCacheMixin:
    """
    Provides a per-basis cache for derived data such as push-forwards and
    coefficient maps.
    """

    basis_cache: Dict

    def _get_cached(
        self, kind: str, basis: Sequence[int], factory: Callable, no_cache: bool = False
    ):
        """
        Get a cached value, computing it on a miss.

        :param kind: Name of the cached quantity
        :param basis: The basis it belongs to
        :param factory: Computes the value
        :param no_cache: Don't retrieve from cache

        :return: The value
        """
        key = (kind, tuple(basis))
        if key in self.basis_cache and not no_cache:
            return self.basis_cache[key]
        value = factory()
        self.basis_cache[key] = value
        return value

    def clear_cache(self) -> None:
        self.basis_cache.clear()
