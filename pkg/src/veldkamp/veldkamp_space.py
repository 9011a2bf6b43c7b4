"""Veldkamp spaces of 3-point-per-line structures.

The points are the geometric hyperplanes of the host; the line spanned by
two of them is closed by the complement of their symmetric difference.  For
the 7-element pair Grassmannian the hyperplanes carry bipartition labels,
which classify the 63 points into three types by side sizes and the 651
lines into seven orbits by member-type multiset; the census reproduces the
full classification, including the block shape of every line's core.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations
from math import comb

from .grassmannian import build_g2, grassmann_order, named_configuration
from .hyperplanes import Hyperplane, derive_partition, enumerate_hyperplanes, is_hyperplane
from .incidence import (
    IncidenceStructure,
    StructureError,
    _require_three_uniform,
    check_projective,
    configuration_parameters,
    iter_bits,
)


class PointType(Enum):
    """Type of a Veldkamp point of the 7-element host, by bipartition side
    sizes: 4:3, 5:2 or 6:1."""

    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"

    @property
    def symbol(self) -> str:
        return {"alpha": "α", "beta": "β", "gamma": "γ"}[self.value]

    @property
    def rank(self) -> int:
        return ("alpha", "beta", "gamma").index(self.value)


_TYPE_BY_SIZES = {(4, 3): PointType.ALPHA, (5, 2): PointType.BETA, (6, 1): PointType.GAMMA}

LineType = tuple[PointType, PointType, PointType]

#: Line orbits in census row order, with their expected core sizes.
LINE_TYPE_ORDER: tuple[LineType, ...] = (
    (PointType.ALPHA, PointType.ALPHA, PointType.ALPHA),
    (PointType.ALPHA, PointType.ALPHA, PointType.BETA),
    (PointType.ALPHA, PointType.ALPHA, PointType.GAMMA),
    (PointType.ALPHA, PointType.BETA, PointType.BETA),
    (PointType.ALPHA, PointType.BETA, PointType.GAMMA),
    (PointType.BETA, PointType.BETA, PointType.BETA),
    (PointType.BETA, PointType.GAMMA, PointType.GAMMA),
)

#: Member-type multisets that never occur as lines.
FORBIDDEN_LINE_TYPES: tuple[LineType, ...] = (
    (PointType.ALPHA, PointType.GAMMA, PointType.GAMMA),
    (PointType.BETA, PointType.BETA, PointType.GAMMA),
    (PointType.GAMMA, PointType.GAMMA, PointType.GAMMA),
)

_CORE_DESCRIPTORS = {
    (2, 2, 2): "three mutually non-collinear points",
    (3, 2): "a line and a point",
    (3, 3): "two disjoint lines",
    (3, 2, 2): "a line and two non-collinear points",
    (4, 2): "a Pasch configuration and a point",
    (4,): "a Pasch configuration",
    (5,): "a Desargues configuration",
}


def line_type_symbol(t: LineType) -> str:
    return "(" + ",".join(pt.symbol for pt in t) + ")"


def classify_point(h: Hyperplane) -> PointType:
    """Point type from the bipartition side sizes; defined only for
    hyperplanes labelled over a 7-element ground set."""
    if h.partition is None:
        raise StructureError("hyperplane carries no bipartition label")
    a, b = h.partition
    if len(a) + len(b) != 7:
        raise StructureError("point types are defined over a 7-element ground set")
    return _TYPE_BY_SIZES[(len(a), len(b))]


def third_point(h1: Hyperplane, h2: Hyperplane) -> Hyperplane:
    """Close a Veldkamp line: the third point is the complement of the
    symmetric difference of the two member sets, certified against the
    hyperplane law."""
    if h1.host != h2.host:
        raise StructureError("hyperplanes live on different hosts")
    if h1.mask == h2.mask:
        raise StructureError("third_point needs two distinct hyperplanes")
    host = h1.host
    _require_three_uniform(host, "third_point")
    m = host.full_mask & ~(h1.mask ^ h2.mask)
    if not is_hyperplane(host, m):
        raise StructureError(
            "symmetric-difference complement fails the hyperplane law; "
            "the Veldkamp line through these two points is undefined")
    return Hyperplane(host, m, derive_partition(host, m))


@dataclass(frozen=True)
class LineClass:
    """Classification of one Veldkamp line: sorted member-type multiset plus
    the block decomposition of its core.

    The core of a line is always a disjoint union of complete pair sets on
    ground-set blocks; ``blocks`` holds the block sizes (descending) and the
    descriptor names the induced sub-Grassmannian shapes.
    """

    types: LineType
    core_mask: int
    core_size: int
    blocks: tuple[int, ...]
    descriptor: str


def classify_line(h1: Hyperplane, h2: Hyperplane, h3: Hyperplane) -> LineClass:
    types = tuple(sorted((classify_point(h1), classify_point(h2), classify_point(h3)),
                         key=lambda t: t.rank))
    core = h1.mask & h2.mask & h3.mask
    # the triple intersection must agree with every pairwise one
    assert core == h1.mask & h2.mask == h1.mask & h3.mask == h2.mask & h3.mask
    blocks = _core_blocks(h1.host, core)
    descriptor = _CORE_DESCRIPTORS.get(blocks, f"blocks of sizes {blocks}")
    return LineClass(types, core, core.bit_count(), blocks, descriptor)


def _core_blocks(host: IncidenceStructure, core_mask: int) -> tuple[int, ...]:
    """Block sizes of a core: group ground elements by the member pairs and
    check each block induces a complete pair set (a sub-Grassmannian)."""
    if grassmann_order(host) is None:
        raise StructureError("core blocks are defined over pair Grassmannians")
    pairs = [host.labels[i] for i in iter_bits(core_mask)]
    neighbours: dict[int, set[int]] = defaultdict(set)
    for lab in pairs:
        x, y = int(lab[0]), int(lab[1])
        neighbours[x].add(y)
        neighbours[y].add(x)
    blocks: list[set[int]] = []
    todo = set(neighbours)
    while todo:
        seed = todo.pop()
        block = {seed}
        frontier = [seed]
        while frontier:
            for y in neighbours[frontier.pop()]:
                if y not in block:
                    block.add(y)
                    todo.discard(y)
                    frontier.append(y)
        blocks.append(block)
    pair_set = set(pairs)
    for block in blocks:
        for p in combinations(sorted(block), 2):
            assert "".join(map(str, p)) in pair_set, "core block is not complete"
    assert sum(comb(len(b), 2) for b in blocks) == len(pairs)
    return tuple(sorted((len(b) for b in blocks), reverse=True))


class VeldkampSpace:
    """The Veldkamp space of a host: vpoints are hyperplanes, vlines are the
    closed triples, both canonically ordered.  ``point_types``/``line_types``
    are filled when the host is the 7-element pair Grassmannian."""

    __slots__ = ("host", "vpoints", "vlines", "cores", "vline_masks",
                 "point_types", "line_types", "line_classes",
                 "_index_by_mask", "_index_by_label", "_line_index", "_vlines_through")

    def __init__(self, host, vpoints, vlines):
        self.host: IncidenceStructure = host
        self.vpoints: tuple[Hyperplane, ...] = vpoints
        self.vlines: tuple[tuple[int, int, int], ...] = vlines
        self._index_by_mask = {h.mask: i for i, h in enumerate(vpoints)}
        self._index_by_label = {h.label: i for i, h in enumerate(vpoints)}
        self._line_index = {t: j for j, t in enumerate(vlines)}
        self.cores = tuple(
            vpoints[i].mask & vpoints[j].mask & vpoints[k].mask for i, j, k in vlines)
        self.vline_masks = tuple((1 << i) | (1 << j) | (1 << k) for i, j, k in vlines)
        through: list[list[int]] = [[] for _ in vpoints]
        for j, t in enumerate(vlines):
            for i in t:
                through[i].append(j)
        self._vlines_through = tuple(tuple(js) for js in through)

        if grassmann_order(host) == 7 and all(h.partition for h in vpoints):
            self.point_types = tuple(classify_point(h) for h in vpoints)
            self.line_classes = tuple(
                classify_line(vpoints[i], vpoints[j], vpoints[k]) for i, j, k in vlines)
            self.line_types = tuple(c.types for c in self.line_classes)
        else:
            self.point_types = None
            self.line_types = None
            self.line_classes = None

    @property
    def n_points(self) -> int:
        return len(self.vpoints)

    @property
    def n_lines(self) -> int:
        return len(self.vlines)

    def index_of(self, vpoint) -> int:
        """Index of a vpoint given as Hyperplane, member mask, or label."""
        if isinstance(vpoint, Hyperplane):
            key = vpoint.mask
        elif isinstance(vpoint, int):
            key = vpoint
        else:
            try:
                return self._index_by_label[str(vpoint)]
            except KeyError:
                raise StructureError(f"no Veldkamp point labelled {vpoint!r}") from None
        try:
            return self._index_by_mask[key]
        except KeyError:
            raise StructureError("not a Veldkamp point of this space") from None

    def line_index(self, triple) -> int:
        key = tuple(sorted(triple))
        try:
            return self._line_index[key]
        except KeyError:
            raise StructureError(f"no Veldkamp line {key!r}") from None

    def vlines_through(self, i: int) -> tuple[int, ...]:
        return self._vlines_through[i]

    def line_of_pair(self, i: int, j: int) -> int:
        """The unique vline through two distinct vpoints."""
        h3 = third_point(self.vpoints[i], self.vpoints[j])
        return self.line_index((i, j, self.index_of(h3)))

    def line_labels(self, j: int) -> tuple[str, str, str]:
        a, b, c = self.vlines[j]
        return (self.vpoints[a].label, self.vpoints[b].label, self.vpoints[c].label)

    def as_incidence_structure(self) -> IncidenceStructure:
        return IncidenceStructure(
            [h.label for h in self.vpoints],
            [self.line_labels(j) for j in range(self.n_lines)])

    def __repr__(self):
        return f"VeldkampSpace(points={self.n_points}, lines={self.n_lines})"


def build_veldkamp(C: IncidenceStructure) -> VeldkampSpace:
    """Enumerate the hyperplanes and close every pair under the
    symmetric-difference-complement rule; the closure must land back in the
    enumerated set (it does whenever the Veldkamp space is projective)."""
    _require_three_uniform(C, "build_veldkamp")
    if not configuration_parameters(C).linear:
        raise StructureError("build_veldkamp requires a linear host")
    vpoints = enumerate_hyperplanes(C)
    if len(vpoints) < 2:
        raise StructureError("host has fewer than two geometric hyperplanes")

    by_mask = {h.mask: i for i, h in enumerate(vpoints)}
    full = C.full_mask
    lines = set()
    for i, j in combinations(range(len(vpoints)), 2):
        m3 = full & ~(vpoints[i].mask ^ vpoints[j].mask)
        k = by_mask.get(m3)
        if k is None:
            # certify before failing so the message pins the actual defect
            if is_hyperplane(C, m3):
                raise StructureError("enumeration missed a hyperplane reached by closure")
            raise StructureError(
                f"Veldkamp closure of {vpoints[i].label} and {vpoints[j].label} "
                "is not a hyperplane")
        lines.add(tuple(sorted((i, j, k))))
    return VeldkampSpace(C, vpoints, tuple(sorted(lines)))


# ---------------------------------------------------------------------------
# census


@dataclass(frozen=True)
class PointCensusRow:
    type_symbol: str
    form: str
    constituents: str
    count: int


@dataclass(frozen=True)
class LineCensusRow:
    type_symbol: str
    forms: tuple[str, str, str]
    core_size: int
    descriptor: str
    count: int


@dataclass(frozen=True, eq=False)
class VeldkampCensus:
    n_points: int
    n_lines: int
    point_rows: tuple[PointCensusRow, ...]
    line_rows: tuple[LineCensusRow, ...]
    forbidden_counts: dict
    lines_per_point: tuple[int, int]
    projective: bool

    @property
    def forbidden_absent(self) -> bool:
        return all(c == 0 for c in self.forbidden_counts.values())

    def to_dict(self) -> dict:
        return {
            "points": self.n_points,
            "lines": self.n_lines,
            "point_types": [
                {"type": r.type_symbol, "form": r.form,
                 "constituents": r.constituents, "number": r.count}
                for r in self.point_rows],
            "line_types": [
                {"type": r.type_symbol, "forms": list(r.forms),
                 "core_size": r.core_size, "core": r.descriptor, "number": r.count}
                for r in self.line_rows],
            "forbidden_types": dict(self.forbidden_counts),
            "lines_per_point": list(self.lines_per_point),
            "projective": self.projective,
        }


_LETTERS = "abcdefg"


def _partition_form(sides, mapping) -> str:
    rendered = []
    for side in sides:
        rendered.append("".join(sorted(mapping[x] for x in side)))
    a, b = rendered
    if (-len(a), a) > (-len(b), b):
        a, b = b, a
    return a + ":" + b


def _minimal_line_forms(parts) -> tuple[str, str, str]:
    """Letter forms of a line's three bipartitions, minimized over all
    relabellings of the ground set; canonical and label-free."""
    elements = sorted({x for sides in parts for side in sides for x in side})
    best = None
    for perm in permutations(_LETTERS[:len(elements)]):
        mapping = dict(zip(elements, perm))
        forms = tuple(sorted(_partition_form(sides, mapping) for sides in parts))
        if best is None or forms < best:
            best = forms
    return best


def _point_constituents(big: int, small: int) -> str:
    name = named_configuration(build_g2(big))
    if small >= 3:
        complement = named_configuration(build_g2(small))
        return f"{name} configuration and a complementary {complement}"
    if small == 2:
        return f"{name} configuration and a complementary point"
    return f"{name} configuration"


def tabulate_census(V: VeldkampSpace) -> VeldkampCensus:
    """Reproduce the point and line classification of the Veldkamp space of
    the 7-element pair Grassmannian, with per-orbit core shapes, the list of
    absent member-type multisets, and the projectivity verdict."""
    if V.point_types is None:
        raise StructureError("census is defined for the 7-element pair Grassmannian host")

    point_counts = Counter(V.point_types)
    point_rows = []
    for t, sizes in ((PointType.ALPHA, (4, 3)), (PointType.BETA, (5, 2)),
                     (PointType.GAMMA, (6, 1))):
        big, small = sizes
        form = _LETTERS[:big] + ":" + _LETTERS[big:7]
        point_rows.append(PointCensusRow(
            t.symbol, form, _point_constituents(big, small), point_counts.get(t, 0)))

    by_type: dict[LineType, list[int]] = defaultdict(list)
    for j, c in enumerate(V.line_classes):
        by_type[c.types].append(j)

    line_rows = []
    for t in LINE_TYPE_ORDER:
        indices = by_type.get(t, [])
        if not indices:
            line_rows.append(LineCensusRow(line_type_symbol(t), ("", "", ""), 0, "absent", 0))
            continue
        core_sizes = {V.line_classes[j].core_size for j in indices}
        descriptors = {V.line_classes[j].descriptor for j in indices}
        assert len(core_sizes) == 1 and len(descriptors) == 1, \
            f"orbit {line_type_symbol(t)} is not core-homogeneous"
        rep = V.vlines[indices[0]]
        forms = _minimal_line_forms([V.vpoints[i].partition for i in rep])
        line_rows.append(LineCensusRow(
            line_type_symbol(t), forms, core_sizes.pop(), descriptors.pop(), len(indices)))

    forbidden = {line_type_symbol(t): len(by_type.get(t, [])) for t in FORBIDDEN_LINE_TYPES}
    unexpected = set(by_type) - set(LINE_TYPE_ORDER) - set(FORBIDDEN_LINE_TYPES)
    assert not unexpected, f"unclassified line types {unexpected}"

    per_point = [len(V.vlines_through(i)) for i in range(V.n_points)]
    return VeldkampCensus(
        n_points=V.n_points,
        n_lines=V.n_lines,
        point_rows=tuple(point_rows),
        line_rows=tuple(line_rows),
        forbidden_counts=forbidden,
        lines_per_point=(min(per_point), max(per_point)),
        projective=check_projective(V.as_incidence_structure()),
    )
