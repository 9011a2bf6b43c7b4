"""Pivot decompositions of the symplectic polar space inside the Veldkamp
space of the 7-element pair Grassmannian.

Fixing a pivot element g splits the 63 Veldkamp points into a 15-point core
quadrangle (alpha points with g on the short side) and three sectors: the
elliptic sector (beta points with g on the short side plus gamma points with
g on the long side), the hyperbolic sector (alpha points with g on the long
side) and the cone sector (beta points with g on the long side plus the
vertex, the gamma point whose singleton side is g).  Core plus each sector
is one of the three constituents of a line in the Veldkamp space of the
polar space itself, all three sharing the core.

Sector membership is read off the bipartition labels; every sector line set
is produced twice, by scanning the polar-space lines induced on the point
set and by instantiating the letter forms symbolically over all choices of
the six non-pivot elements, and the two constructions must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .hyperplanes import bipartition_hyperplane, is_hyperplane
from .incidence import IncidenceStructure, StructureError, check_gq
from .polar import PolarSubspace, alpha_quadric, extract_symplectic, quadric_point_count
from .reporting import Report, ReportBuilder
from .veldkamp_space import PointType, VeldkampSpace, line_type_symbol

SECTORS = ("core", "elliptic", "hyperbolic", "cone")

_SECTOR_EXPECTED = {
    # sector -> (additional points, additional lines)
    "core": (15, 15),
    "elliptic": (12, 30),
    "hyperbolic": (20, 90),
    "cone": (16, 15),
}


@dataclass(frozen=True, eq=False)
class MagicLineDecomposition:
    """One pivot's decomposition.  Point fields hold vpoint indices (sector
    fields exclude the core; the cone includes its vertex), line fields hold
    vline indices into the parent Veldkamp space.  ``cone_lines`` is the
    generator tier; ``cone_induced_lines`` is every polar-space line lying
    inside the cone point set."""

    veldkamp: VeldkampSpace
    symplectic: PolarSubspace
    pivot: int
    vertex: int
    core_points: tuple[int, ...]
    elliptic_points: tuple[int, ...]
    hyperbolic_points: tuple[int, ...]
    cone_points: tuple[int, ...]
    core_lines: tuple[int, ...]
    elliptic_lines: tuple[int, ...]
    hyperbolic_lines: tuple[int, ...]
    cone_lines: tuple[int, ...]
    cone_induced_lines: tuple[int, ...]

    def elliptic_set(self) -> tuple[int, ...]:
        return tuple(sorted(self.core_points + self.elliptic_points))

    def hyperbolic_set(self) -> tuple[int, ...]:
        return tuple(sorted(self.core_points + self.hyperbolic_points))

    def cone_set(self) -> tuple[int, ...]:
        return tuple(sorted(self.core_points + self.cone_points))

    def sector_of(self, vpoint_index: int) -> str:
        for name, points in (("core", self.core_points), ("elliptic", self.elliptic_points),
                             ("hyperbolic", self.hyperbolic_points), ("cone", self.cone_points)):
            if vpoint_index in points:
                return name
        raise StructureError(f"vpoint {vpoint_index} is not classified")

    def point_labels(self, indices) -> tuple[str, ...]:
        return tuple(self.veldkamp.vpoints[i].label for i in indices)

    def line_labels(self, indices) -> tuple[tuple[str, str, str], ...]:
        return tuple(self.veldkamp.line_labels(j) for j in indices)

    def sectors_dict(self) -> dict:
        v = self.veldkamp
        out = {"pivot": self.pivot, "vertex": v.vpoints[self.vertex].label, "sectors": {}}
        for name, points, lines in (
                ("core", self.core_points, self.core_lines),
                ("elliptic", self.elliptic_points, self.elliptic_lines),
                ("hyperbolic", self.hyperbolic_points, self.hyperbolic_lines),
                ("cone", self.cone_points, self.cone_lines)):
            out["sectors"][name] = {
                "points": list(self.point_labels(points)),
                "lines": [list(t) for t in self.line_labels(lines)],
            }
        out["cone_induced_line_count"] = len(self.cone_induced_lines)
        return out


def _vmask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _lines_inside(V: VeldkampSpace, w: PolarSubspace, point_indices) -> tuple[int, ...]:
    inside = _vmask(point_indices)
    return tuple(j for j in w.vline_indices if not V.vline_masks[j] & ~inside)


def _perfect_matchings(elements: tuple[int, ...]):
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for tail in _perfect_matchings(remaining):
            yield ((first, partner),) + tail


def _vindex(V: VeldkampSpace, side) -> int:
    return V.index_of(bipartition_hyperplane(7, side).mask)


def _symbolic_core(V: VeldkampSpace, g: int) -> set[tuple[int, ...]]:
    rest = tuple(x for x in range(1, 8) if x != g)
    lines = set()
    for (a, b), (c, d), (e, f) in _perfect_matchings(rest):
        members = (_vindex(V, {a, b, c, d}), _vindex(V, {a, b, e, f}),
                   _vindex(V, {c, d, e, f}))
        lines.add(tuple(sorted(members)))
    return lines


def _symbolic_elliptic(V: VeldkampSpace, g: int) -> set[tuple[int, ...]]:
    rest = [x for x in range(1, 8) if x != g]
    lines = set()
    for quad in combinations(rest, 4):
        e, f = (x for x in rest if x not in quad)
        for kept, moved in ((e, f), (f, e)):
            members = (_vindex(V, quad),
                       _vindex(V, set(quad) | {moved}),
                       _vindex(V, set(quad) | {kept, g}))
            lines.add(tuple(sorted(members)))
    return lines


def _symbolic_hyperbolic(V: VeldkampSpace, g: int) -> set[tuple[int, ...]]:
    rest = [x for x in range(1, 8) if x != g]
    lines = set()
    for quad in combinations(rest, 4):
        e, f = (x for x in rest if x not in quad)
        a = quad[0]
        for partner in quad[1:]:
            pair1 = {a, partner}
            pair2 = set(quad) - pair1
            for joined in (e, f):
                members = (_vindex(V, quad),
                           _vindex(V, pair1 | {joined, g}),
                           _vindex(V, pair2 | {joined, g}))
                lines.add(tuple(sorted(members)))
    return lines


def _symbolic_cone(V: VeldkampSpace, g: int) -> set[tuple[int, ...]]:
    rest = [x for x in range(1, 8) if x != g]
    lines = set()
    for quad in combinations(rest, 4):
        members = (_vindex(V, quad), _vindex(V, set(quad) | {g}), _vindex(V, {g}))
        lines.add(tuple(sorted(members)))
    return lines


def build_magic_line(V: VeldkampSpace, g: int,
                     symplectic: PolarSubspace | None = None) -> MagicLineDecomposition:
    """Decompose the polar space for pivot ``g``: classify every vpoint by
    where g sits in its bipartition, induce each sector's lines from the
    polar line set, and cross-check them against the symbolically generated
    letter forms."""
    if V.point_types is None:
        raise StructureError("magic lines are defined over the 7-element pair Grassmannian")
    if not isinstance(g, int) or not 1 <= g <= 7:
        raise StructureError(f"pivot must be an element of 1..7, got {g!r}")
    w = symplectic if symplectic is not None else extract_symplectic(V)
    if w.parent is not V:
        raise StructureError("symplectic subspace belongs to a different Veldkamp space")

    core, elliptic, hyperbolic, cone = [], [], [], []
    vertex = None
    for i, h in enumerate(V.vpoints):
        long_side, short_side = h.partition
        t = V.point_types[i]
        if t is PointType.ALPHA:
            (core if g in short_side else hyperbolic).append(i)
        elif t is PointType.BETA:
            (elliptic if g in short_side else cone).append(i)
        else:
            if short_side == (g,):
                vertex = i
                cone.append(i)
            else:
                elliptic.append(i)
    assert vertex is not None
    sets = [core, elliptic, hyperbolic, cone]
    assert sum(len(s) for s in sets) == V.n_points
    assert len(set().union(*map(set, sets))) == V.n_points

    core_lines = _lines_inside(V, w, core)
    elliptic_lines = tuple(j for j in _lines_inside(V, w, core + elliptic)
                           if j not in set(core_lines))
    hyperbolic_lines = tuple(j for j in _lines_inside(V, w, core + hyperbolic)
                             if j not in set(core_lines))
    cone_induced = _lines_inside(V, w, core + cone)
    vertex_bit = 1 << vertex
    cone_lines = tuple(j for j in cone_induced if V.vline_masks[j] & vertex_bit)

    for name, induced, symbolic in (
            ("core", core_lines, _symbolic_core(V, g)),
            ("elliptic", elliptic_lines, _symbolic_elliptic(V, g)),
            ("hyperbolic", hyperbolic_lines, _symbolic_hyperbolic(V, g)),
            ("cone", cone_lines, _symbolic_cone(V, g))):
        induced_triples = {V.vlines[j] for j in induced}
        if induced_triples != symbolic:
            raise StructureError(
                f"{name} sector: symbolic line forms disagree with the induced lines")

    return MagicLineDecomposition(
        veldkamp=V, symplectic=w, pivot=g, vertex=vertex,
        core_points=tuple(core), elliptic_points=tuple(elliptic),
        hyperbolic_points=tuple(hyperbolic), cone_points=tuple(cone),
        core_lines=core_lines, elliptic_lines=elliptic_lines,
        hyperbolic_lines=hyperbolic_lines, cone_lines=cone_lines,
        cone_induced_lines=cone_induced)


def _sector_structure(M: MagicLineDecomposition, points, lines) -> IncidenceStructure:
    V = M.veldkamp
    return IncidenceStructure(
        [V.vpoints[i].label for i in points],
        [V.line_labels(j) for j in lines])


def verify_counts(M: MagicLineDecomposition) -> Report:
    """Sector sizes: core 15/15, then +12/+30, +20/+90 and +16/+15, the
    point sets partitioning all 63 vpoints."""
    rb = ReportBuilder(f"counts[pivot={M.pivot}]")
    observed = {
        "core": (len(M.core_points), len(M.core_lines)),
        "elliptic": (len(M.elliptic_points), len(M.elliptic_lines)),
        "hyperbolic": (len(M.hyperbolic_points), len(M.hyperbolic_lines)),
        "cone": (len(M.cone_points), len(M.cone_lines)),
    }
    for sector in SECTORS:
        rb.expect(f"{sector} points/lines", observed[sector], _SECTOR_EXPECTED[sector])
    total = sum(n for n, _ in observed.values())
    rb.expect("sector point total", total, M.veldkamp.n_points)
    all_points = M.core_points + M.elliptic_points + M.hyperbolic_points + M.cone_points
    rb.expect("sectors are disjoint", len(set(all_points)), M.veldkamp.n_points)
    rb.data["sizes"] = {k: list(v) for k, v in observed.items()}
    return rb.build()


def verify_core(M: MagicLineDecomposition) -> Report:
    """The core is a generalized quadrangle of order (2,2) whose size equals
    the parabolic quadric count."""
    rb = ReportBuilder(f"core[pivot={M.pivot}]")
    gq = check_gq(_sector_structure(M, M.core_points, M.core_lines))
    rb.add("generalized quadrangle (2,2)", gq.valid and (gq.s, gq.t) == (2, 2),
           gq.witness or f"(s,t)=({gq.s},{gq.t})")
    rb.expect("core size matches parabolic count",
              len(M.core_points), quadric_point_count("parabolic", 2, 2))
    rb.data["gq"] = [gq.s, gq.t]
    return rb.build()


def verify_elliptic(M: MagicLineDecomposition) -> Report:
    """Core plus elliptic sector is a generalized quadrangle of order (2,4)
    on 27 points and 45 lines; the added double six splits 6 beta + 6 gamma
    and the added lines all have one member of each point type."""
    V = M.veldkamp
    rb = ReportBuilder(f"elliptic[pivot={M.pivot}]")
    points = M.elliptic_set()
    lines = tuple(sorted(M.core_lines + M.elliptic_lines))
    gq = check_gq(_sector_structure(M, points, lines))
    rb.add("generalized quadrangle (2,4)", gq.valid and (gq.s, gq.t) == (2, 4),
           gq.witness or f"(s,t)=({gq.s},{gq.t})")
    rb.expect("points", len(points), 27)
    rb.expect("lines", len(lines), 45)
    sector_types = sorted(V.point_types[i].symbol for i in M.elliptic_points)
    rb.expect("double six composition", sector_types,
              sorted([PointType.BETA.symbol] * 6 + [PointType.GAMMA.symbol] * 6))
    mixed = (PointType.ALPHA, PointType.BETA, PointType.GAMMA)
    rb.expect("added lines orbit",
              {line_type_symbol(V.line_types[j]) for j in M.elliptic_lines},
              {line_type_symbol(mixed)})
    rb.expect("elliptic quadric count", len(points), quadric_point_count("elliptic", 3, 2))
    return rb.build()


def verify_hyperbolic(M: MagicLineDecomposition) -> Report:
    """Core plus hyperbolic sector reproduces the alpha quadric exactly,
    points and lines alike."""
    V = M.veldkamp
    rb = ReportBuilder(f"hyperbolic[pivot={M.pivot}]")
    quadric = alpha_quadric(V)
    rb.add("points equal the alpha quadric",
           set(M.hyperbolic_set()) == set(quadric.vpoint_indices),
           f"{len(M.hyperbolic_set())} points")
    rb.add("lines equal the alpha quadric lines",
           set(M.core_lines) | set(M.hyperbolic_lines) == set(quadric.vline_indices),
           f"{len(M.core_lines) + len(M.hyperbolic_lines)} lines")
    all_alpha = (PointType.ALPHA,) * 3
    rb.expect("added lines orbit",
              {line_type_symbol(V.line_types[j]) for j in M.hyperbolic_lines},
              {line_type_symbol(all_alpha)})
    rb.expect("hyperbolic quadric count",
              len(M.hyperbolic_set()), quadric_point_count("hyperbolic", 3, 2))
    return rb.build()


def verify_cone(M: MagicLineDecomposition) -> Report:
    """The cone is the vertex plus 15 generator lines pairing each core
    point with one sector beta point; the generators partition the 30
    non-vertex points, and the cone is not a generalized quadrangle (the
    vertex sees several transversals to any core line)."""
    V = M.veldkamp
    rb = ReportBuilder(f"cone[pivot={M.pivot}]")
    points = M.cone_set()
    rb.expect("points", len(points), 31)
    rb.expect("point total is vertex plus two per generator",
              len(points), 1 + 2 * len(M.cone_lines))
    rb.expect("generators", len(M.cone_lines), 15)

    vertex_bit = 1 << M.vertex
    rb.add("every generator passes through the vertex",
           all(V.vline_masks[j] & vertex_bit for j in M.cone_lines), "")
    core_set = set(M.core_points)
    beta_set = set(M.cone_points) - {M.vertex}
    composition_ok = all(
        len(core_set & set(V.vlines[j])) == 1 and len(beta_set & set(V.vlines[j])) == 1
        for j in M.cone_lines)
    rb.add("each generator joins one core point and one cone beta point",
           composition_ok, "")
    covered = [i for j in M.cone_lines for i in V.vlines[j] if i != M.vertex]
    rb.add("generators partition the non-vertex points",
           sorted(covered) == sorted(set(points) - {M.vertex}) and len(covered) == 30,
           f"{len(set(covered))} distinct points covered")

    listed = tuple(sorted(M.core_lines + M.cone_lines))
    gq = check_gq(_sector_structure(M, points, listed))
    rb.add("not a generalized quadrangle", not gq.valid, gq.witness or "")

    # axiom (iii) failure pinned at the vertex: transversals from the vertex
    # to a core line are the generators through its three member points
    first_core = M.core_lines[0]
    core_members = set(V.vlines[first_core])
    transversals = sum(1 for j in M.cone_lines if core_members & set(V.vlines[j]))
    rb.add("vertex transversal count breaks uniqueness", transversals != 1,
           f"vertex {V.vpoints[M.vertex].label} sees {transversals} transversals "
           f"to core line {V.line_labels(first_core)}")
    rb.data["vertex_witness"] = (
        f"point {V.vpoints[M.vertex].label} and line {V.line_labels(first_core)} "
        f"admit {transversals} transversals")
    rb.data["induced_line_count"] = len(M.cone_induced_lines)
    return rb.build()


def verify_veldkamp_line_of_w(M: MagicLineDecomposition) -> Report:
    """Core-plus-sector point sets of sizes 27, 35 and 31 are geometric
    hyperplanes of the 63-point polar space, pairwise meeting in the core,
    and each is the symmetric-difference complement of the other two: the
    decomposition is a line of the polar space's own Veldkamp space."""
    V = M.veldkamp
    rb = ReportBuilder(f"veldkamp-line-of-w[pivot={M.pivot}]")
    ws = M.symplectic.as_incidence_structure()
    full = ws.full_mask

    def wmask(indices):
        return ws.label_mask(V.vpoints[i].label for i in indices)

    e, h, c = wmask(M.elliptic_set()), wmask(M.hyperbolic_set()), wmask(M.cone_set())
    core = wmask(M.core_points)
    for name, m, size in (("elliptic", e, 27), ("hyperbolic", h, 35), ("cone", c, 31)):
        rb.add(f"{name} set is a hyperplane of the polar space",
               is_hyperplane(ws, m) and m.bit_count() == size,
               f"{m.bit_count()} points")
    rb.add("pairwise intersections equal the core",
           e & h == e & c == h & c == core, f"core size {core.bit_count()}")
    rb.add("each set closes the other two",
           (full & ~(e ^ h)) == c and (full & ~(e ^ c)) == h and (full & ~(h ^ c)) == e,
           "")
    rb.data["sizes"] = {"elliptic": 27, "hyperbolic": 35, "cone": 31,
                        "core": core.bit_count()}
    return rb.build()


def full_reports(M: MagicLineDecomposition) -> tuple[Report, ...]:
    return (verify_counts(M), verify_core(M), verify_elliptic(M),
            verify_hyperbolic(M), verify_cone(M), verify_veldkamp_line_of_w(M))
