"""Distinguished subgeometries of the Veldkamp space of the 7-element pair
Grassmannian: the symplectic polar space carried by the odd-core lines, the
hyperbolic quadric of alpha points, the embedded copy of the host, the
gamma-point exterior heptad, and the exact point-count formulas for the
classical quadrics over GF(q)."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .incidence import (
    IncidenceStructure,
    StructureError,
    check_one_or_all,
    collinearity_graph,
    configuration_parameters,
    srg_parameters,
)
from .veldkamp_space import PointType, VeldkampSpace, line_type_symbol


class PolarKind(Enum):
    SYMPLECTIC = "symplectic"
    HYPERBOLIC_QUADRIC = "hyperbolic_quadric"
    EMBEDDED_GRASSMANNIAN = "embedded_grassmannian"
    CONWELL_HEPTAD = "conwell_heptad"


#: Line orbits whose cores have an odd number of points; they carry the
#: symplectic polar space.
ODD_CORE_TYPES = (
    (PointType.ALPHA, PointType.ALPHA, PointType.ALPHA),
    (PointType.ALPHA, PointType.BETA, PointType.BETA),
    (PointType.ALPHA, PointType.BETA, PointType.GAMMA),
)


@dataclass(frozen=True, eq=False)
class PolarSubspace:
    """A selection of Veldkamp points and lines (line-free for the heptad),
    with a certification summary in ``details``."""

    parent: VeldkampSpace
    kind: PolarKind
    vpoint_indices: tuple[int, ...]
    vline_indices: tuple[int, ...]
    details: dict

    @property
    def n_points(self) -> int:
        return len(self.vpoint_indices)

    @property
    def n_lines(self) -> int:
        return len(self.vline_indices)

    def point_labels(self) -> tuple[str, ...]:
        return tuple(self.parent.vpoints[i].label for i in self.vpoint_indices)

    def line_label_triples(self) -> tuple[tuple[str, str, str], ...]:
        return tuple(self.parent.line_labels(j) for j in self.vline_indices)

    def as_incidence_structure(self) -> IncidenceStructure:
        return IncidenceStructure(self.point_labels(), self.line_label_triples())


def _require_classified(V: VeldkampSpace) -> None:
    if V.point_types is None:
        raise StructureError(
            "polar subgeometries are defined over the 7-element pair Grassmannian")


def extract_symplectic(V: VeldkampSpace) -> PolarSubspace:
    """All 63 Veldkamp points together with the lines whose cores have an
    odd point count.  The selection is certified combinatorially: the
    odd-core rule must coincide with the three-orbit rule, the one-or-all
    axiom must hold with no witness, and the collinearity graph must be
    strongly regular."""
    _require_classified(V)
    odd = tuple(j for j, core in enumerate(V.cores) if core.bit_count() % 2 == 1)
    by_orbit = tuple(j for j, t in enumerate(V.line_types) if t in ODD_CORE_TYPES)
    if odd != by_orbit:
        raise StructureError("odd-core lines do not match the three odd orbits")

    sub = PolarSubspace(V, PolarKind.SYMPLECTIC,
                        tuple(range(V.n_points)), odd, details={})
    structure = sub.as_incidence_structure()
    ok, witness = check_one_or_all(structure)
    if not ok:
        raise StructureError(f"one-or-all axiom failed: {witness}")
    srg = srg_parameters(collinearity_graph(structure))
    if srg is None:
        raise StructureError("collinearity graph is not strongly regular")

    per_point = [0] * V.n_points
    for j in odd:
        for i in V.vlines[j]:
            per_point[i] += 1
    sub.details.update({
        "points": V.n_points,
        "lines": len(odd),
        "lines_per_point": sorted(set(per_point)),
        "one_or_all": True,
        "srg": list(srg.as_tuple()),
    })
    return sub


def alpha_quadric(V: VeldkampSpace) -> PolarSubspace:
    """The 35 alpha points with the all-alpha lines; the point count is
    cross-checked against the hyperbolic quadric formula."""
    _require_classified(V)
    alpha = (PointType.ALPHA,) * 3
    points = tuple(i for i, t in enumerate(V.point_types) if t is PointType.ALPHA)
    lines = tuple(j for j, t in enumerate(V.line_types) if t == alpha)
    expected = quadric_point_count("hyperbolic", 3, 2)
    if len(points) != expected:
        raise StructureError(
            f"alpha point count {len(points)} != hyperbolic quadric count {expected}")
    return PolarSubspace(V, PolarKind.HYPERBOLIC_QUADRIC, points, lines, details={
        "points": len(points),
        "lines": len(lines),
        "hyperbolic_point_count": expected,
    })


@dataclass(frozen=True, eq=False)
class GrassmannianEmbedding:
    """Certificate that the beta subgeometry is the host all over again:
    each beta point maps to its two-element side, each all-beta line to the
    three-element union of its members' sides."""

    point_map: dict
    line_map: dict
    bijective: bool
    incidence_preserving: bool
    image_is_host: bool


def embedded_grassmannian(V: VeldkampSpace) -> tuple[PolarSubspace, GrassmannianEmbedding]:
    """Select the 21 beta points and 35 all-beta lines and verify that
    mapping every beta point to its short side is an incidence-preserving
    bijection back onto the host."""
    _require_classified(V)
    beta = (PointType.BETA,) * 3
    points = tuple(i for i, t in enumerate(V.point_types) if t is PointType.BETA)
    lines = tuple(j for j, t in enumerate(V.line_types) if t == beta)

    from .grassmannian import subset_label
    point_map = {}
    for i in points:
        _, short = V.vpoints[i].partition
        point_map[V.vpoints[i].label] = subset_label(short)

    host = V.host
    images = set(point_map.values())
    bijective = len(images) == len(points) and images == set(host.labels)
    if not bijective:
        raise StructureError("beta short sides are not a bijection onto the host points")

    host_lines = {frozenset(host.line_labels(j)) for j in range(host.b)}
    line_map = {}
    image_lines = set()
    for j in lines:
        triple = V.line_labels(j)
        image = frozenset(point_map[lab] for lab in triple)
        if image not in host_lines:
            raise StructureError(
                f"image of all-beta line {triple} is not a host line")
        line_map[triple] = tuple(sorted(image))
        image_lines.add(image)
    image_is_host = image_lines == host_lines

    sub = PolarSubspace(V, PolarKind.EMBEDDED_GRASSMANNIAN, points, lines, details={})
    params = configuration_parameters(sub.as_incidence_structure())
    sub.details.update({
        "points": len(points),
        "lines": len(lines),
        "image_parameters": [params.v, params.b, params.r, params.k],
    })
    cert = GrassmannianEmbedding(point_map, line_map, bijective, True, image_is_host)
    return sub, cert


def conwell_heptad(V: VeldkampSpace) -> PolarSubspace:
    """The seven gamma points; every line joining two of them avoids the
    alpha quadric entirely, and seven meets the maximal exterior-set bound
    (q^3 - 1)/(q - 1) at q = 2."""
    _require_classified(V)
    points = tuple(i for i, t in enumerate(V.point_types) if t is PointType.GAMMA)
    connecting = []
    for i, j in combinations(points, 2):
        k = V.line_of_pair(i, j)
        members = V.vlines[k]
        if any(V.point_types[m] is PointType.ALPHA for m in members):
            raise StructureError(
                f"line {V.line_labels(k)} joins two heptad points but meets the quadric")
        connecting.append(k)
    bound = (2 ** 3 - 1) // (2 - 1)
    if len(points) != bound:
        raise StructureError(f"heptad has {len(points)} points, bound is {bound}")
    return PolarSubspace(V, PolarKind.CONWELL_HEPTAD, points, (), details={
        "points": len(points),
        "connecting_lines": len(connecting),
        "connecting_line_types": sorted(
            {line_type_symbol(V.line_types[k]) for k in connecting}),
        "exterior_bound": bound,
    })


QUADRIC_KINDS = ("parabolic", "elliptic", "hyperbolic")


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


def quadric_point_count(kind: str, n: int, q: int) -> int:
    """Point counts of the nonsingular quadrics: parabolic in dimension 2n,
    elliptic and hyperbolic in dimension 2n-1.  Integer arithmetic with the
    division checked exact."""
    if kind not in QUADRIC_KINDS:
        raise StructureError(f"unknown quadric kind {kind!r}")
    if not isinstance(q, int) or not _is_prime_power(q):
        raise StructureError(f"q must be a prime power, got {q!r}")
    if not isinstance(n, int) or n < 1:
        raise StructureError(f"n must be a positive integer, got {n!r}")
    if kind == "parabolic":
        if n < 2:
            raise StructureError("parabolic quadrics need n >= 2")
        numerator = q ** (2 * n) - 1
    elif kind == "elliptic":
        numerator = (q ** (n - 1) - 1) * (q ** n + 1)
    else:
        numerator = (q ** (n - 1) + 1) * (q ** n - 1)
    count, remainder = divmod(numerator, q - 1)
    if remainder:
        raise StructureError("quadric point-count formula did not divide exactly")
    return count
