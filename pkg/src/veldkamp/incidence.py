"""Finite point-line incidence structures and exhaustive axiom checkers.

Points are stored by dense integer index with a separate label table, and
every point subset (line, hyperplane, neighbourhood) is a bit mask over the
indices.  The structures handled here never exceed 63 points, so all set
algebra is effectively O(1).

Everything is immutable after construction and safe to share; the checkers
are pure functions that scan exhaustively and report the first (canonically
least) counterexample when an axiom fails.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb


class StructureError(ValueError):
    """A structure or operation violates its stated preconditions."""


def iter_bits(mask: int):
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


class IncidenceStructure:
    """An immutable finite point-line incidence structure.

    Lines are subsets of the point set; incidence is membership.  Points are
    canonically ordered by label and lines lexicographically by their sorted
    member indices, so equal inputs always build identical structures.
    Degenerate inputs (no points, no lines) are accepted here and rejected by
    the axiom checkers.
    """

    __slots__ = ("labels", "lines", "line_masks", "full_mask",
                 "_index", "_lines_through", "_hash")

    def __init__(self, points, lines):
        labels = [str(p) for p in points]
        seen_labels = set()
        for lab in labels:
            if lab in seen_labels:
                raise StructureError(f"duplicate point label {lab!r}")
            seen_labels.add(lab)
        self.labels: tuple[str, ...] = tuple(sorted(labels))
        self._index = {lab: i for i, lab in enumerate(self.labels)}

        member_tuples = []
        seen_lines = set()
        for line in lines:
            members = []
            for p in line:
                lab = str(p)
                if lab not in self._index:
                    raise StructureError(f"line references unknown point {lab!r}")
                members.append(self._index[lab])
            if len(set(members)) != len(members):
                raise StructureError(f"repeated point within line {tuple(line)!r}")
            key = tuple(sorted(members))
            if key in seen_lines:
                raise StructureError(f"duplicate line {tuple(line)!r}")
            seen_lines.add(key)
            member_tuples.append(key)
        member_tuples.sort()

        self.lines: tuple[tuple[int, ...], ...] = tuple(member_tuples)
        self.line_masks: tuple[int, ...] = tuple(mask_of(t) for t in member_tuples)
        self.full_mask: int = (1 << len(self.labels)) - 1
        through = [[] for _ in self.labels]
        for j, t in enumerate(member_tuples):
            for i in t:
                through[i].append(j)
        self._lines_through = tuple(tuple(js) for js in through)
        self._hash = hash((self.labels, self.lines))

    @property
    def v(self) -> int:
        return len(self.labels)

    @property
    def b(self) -> int:
        return len(self.lines)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise StructureError(f"unknown point {label!r}") from None

    def label_mask(self, labels) -> int:
        return mask_of(self.index_of(str(lab)) for lab in labels)

    def mask_labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in iter_bits(mask))

    def lines_through(self, point_index: int) -> tuple[int, ...]:
        return self._lines_through[point_index]

    def line_labels(self, line_index: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in self.lines[line_index])

    def is_three_uniform(self) -> bool:
        return all(len(t) == 3 for t in self.lines)

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "points": [{"id": i, "label": lab} for i, lab in enumerate(self.labels)],
            "lines": [list(t) for t in self.lines],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    def __eq__(self, other):
        if not isinstance(other, IncidenceStructure):
            return NotImplemented
        return self.labels == other.labels and self.lines == other.lines

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"IncidenceStructure(v={self.v}, b={self.b})"


def new_structure(points, lines) -> IncidenceStructure:
    """Build a canonical structure; rejects duplicate labels/lines and
    lines that reference undeclared points."""
    return IncidenceStructure(points, lines)


@dataclass(frozen=True)
class ConfigurationParameters:
    """Exact census of a structure: point/line counts, per-point and
    per-line regular values (None when not constant), and linearity."""

    v: int
    b: int
    r: int | None
    k: int | None
    r_regular: bool
    k_regular: bool
    linear: bool

    @property
    def regular(self) -> bool:
        return self.r_regular and self.k_regular

    @property
    def is_binomial(self) -> bool:
        if not (self.regular and self.linear) or self.r is None or self.k is None:
            return False
        return self.v == comb(self.r + self.k - 1, self.r) and \
            self.b == comb(self.r + self.k - 1, self.k)


def configuration_parameters(C: IncidenceStructure) -> ConfigurationParameters:
    """Census computed exhaustively; linearity means every two lines share
    at most one point (equivalently two points lie on at most one line)."""
    degrees = [len(C.lines_through(i)) for i in range(C.v)]
    sizes = [len(t) for t in C.lines]
    r_regular = len(set(degrees)) <= 1
    k_regular = len(set(sizes)) <= 1
    r = degrees[0] if degrees and r_regular else None
    k = sizes[0] if sizes and k_regular else None
    linear = all((m1 & m2).bit_count() <= 1
                 for m1, m2 in combinations(C.line_masks, 2))
    if r is not None and k is not None:
        # double-counted incidences
        assert C.v * r == C.b * k
    return ConfigurationParameters(C.v, C.b, r, k, r_regular, k_regular, linear)


@dataclass(frozen=True)
class GQCheck:
    """Outcome of the generalized-quadrangle test; ``witness`` holds the
    canonically first counterexample when invalid."""

    valid: bool
    s: int | None
    t: int | None
    witness: str | None


def check_gq(C: IncidenceStructure) -> GQCheck:
    """Exhaustive test of the three quadrangle axioms: constant line size
    s+1 >= 2, constant point degree t+1 >= 2 with any two points on at most
    one common line, and a unique transversal from every point to every
    line not through it."""
    if C.v == 0 or C.b == 0:
        return GQCheck(False, None, None, "degenerate: structure has no points or no lines")

    sizes = {len(t) for t in C.lines}
    if len(sizes) != 1:
        return GQCheck(False, None, None,
                       f"axiom (ii): line sizes are not constant ({sorted(sizes)})")
    s = sizes.pop() - 1
    if s < 1:
        return GQCheck(False, None, None, f"degenerate: lines have {s + 1} point(s)")

    degrees = {len(C.lines_through(i)) for i in range(C.v)}
    if len(degrees) != 1:
        return GQCheck(False, None, None,
                       f"axiom (i): point degrees are not constant ({sorted(degrees)})")
    t = degrees.pop() - 1
    if t < 1:
        return GQCheck(False, None, None, f"degenerate: points lie on {t + 1} line(s)")

    for j1, j2 in combinations(range(C.b), 2):
        common = C.line_masks[j1] & C.line_masks[j2]
        if common.bit_count() > 1:
            return GQCheck(False, None, None,
                           f"axiom (ii): lines {C.line_labels(j1)} and "
                           f"{C.line_labels(j2)} share {common.bit_count()} points")

    adj = _adjacency(C)
    for x in range(C.v):
        for j, lm in enumerate(C.line_masks):
            if lm >> x & 1:
                continue
            transversals = (adj[x] & lm).bit_count()
            if transversals != 1:
                return GQCheck(False, None, None,
                               f"axiom (iii): point {C.labels[x]} and line "
                               f"{C.line_labels(j)} admit {transversals} transversals")

    assert C.v == (s + 1) * (s * t + 1)
    assert C.b == (t + 1) * (s * t + 1)
    return GQCheck(True, s, t, None)


def _adjacency(C: IncidenceStructure) -> list[int]:
    """Per-point mask of collinear points (excluding the point itself)."""
    adj = [0] * C.v
    for i in range(C.v):
        m = 0
        for j in C.lines_through(i):
            m |= C.line_masks[j]
        adj[i] = m & ~(1 << i)
    return adj


@dataclass(frozen=True)
class CollinearityGraph:
    """Simple undirected graph on the points; an edge joins two distinct
    points that share a line."""

    labels: tuple[str, ...]
    adjacency: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            for j in iter_bits(self.adjacency[i]):
                if j > i:
                    out.append((i, j))
        return out

    def is_complete(self) -> bool:
        return self.n >= 2 and all(self.degree(i) == self.n - 1 for i in range(self.n))

    def to_dot(self, name: str = "collinearity", colors=None) -> str:
        """DOT text with point labels as node names; ``colors`` may map a
        label to a fill color."""
        out = [f'graph "{name}" {{']
        for lab in self.labels:
            if colors and lab in colors:
                out.append(f'  "{lab}" [style=filled, fillcolor="{colors[lab]}"];')
            else:
                out.append(f'  "{lab}";')
        for i, j in self.edges():
            out.append(f'  "{self.labels[i]}" -- "{self.labels[j]}";')
        out.append("}")
        return "\n".join(out) + "\n"


def collinearity_graph(C: IncidenceStructure) -> CollinearityGraph:
    return CollinearityGraph(C.labels, tuple(_adjacency(C)))


@dataclass(frozen=True)
class SRGParameters:
    n: int
    k: int
    lam: int
    mu: int
    complete: bool

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)


def srg_parameters(G: CollinearityGraph) -> SRGParameters | None:
    """Parameters (n, k, lambda, mu) iff ``G`` is strongly regular, by
    exhaustive pair check; complete graphs are degenerate SRGs and come back
    flagged.  Returns None otherwise."""
    if G.n == 0:
        raise StructureError("srg_parameters requires a nonempty graph")
    degrees = {G.degree(i) for i in range(G.n)}
    if len(degrees) != 1:
        return None
    k = degrees.pop()
    if G.is_complete():
        return SRGParameters(G.n, G.n - 1, G.n - 2, 0, complete=True)
    if k == 0:
        return None
    lam = set()
    mu = set()
    for i, j in combinations(range(G.n), 2):
        common = (G.adjacency[i] & G.adjacency[j]).bit_count()
        if G.adjacency[i] >> j & 1:
            lam.add(common)
        else:
            mu.add(common)
        if len(lam) > 1 or len(mu) > 1:
            return None
    if len(lam) != 1 or len(mu) != 1:
        return None
    return SRGParameters(G.n, k, lam.pop(), mu.pop(), complete=False)


def _require_three_uniform(C: IncidenceStructure, what: str) -> None:
    if not C.is_three_uniform():
        raise StructureError(f"{what} requires 3-point lines")


def check_one_or_all(C: IncidenceStructure) -> tuple[bool, str | None]:
    """One-or-all (polar) axiom for 3-point-per-line structures: every point
    off a line is collinear with exactly one or with all three of its
    points.  Returns (True, None) or (False, first witness)."""
    _require_three_uniform(C, "check_one_or_all")
    adj = _adjacency(C)
    for x in range(C.v):
        ax = adj[x]
        for j, lm in enumerate(C.line_masks):
            if lm >> x & 1:
                continue
            seen = (ax & lm).bit_count()
            if seen not in (1, 3):
                return False, (f"point {C.labels[x]} is collinear with {seen} "
                               f"points of line {C.line_labels(j)}")
    return True, None


def check_projective(C: IncidenceStructure) -> bool:
    """True iff every pair of distinct points lies on exactly one line and
    the Veblen-Young axiom holds: whenever two transversals each cross a
    pair of lines meeting at a point (away from that point), the
    transversals themselves meet.  Both conditions checked exhaustively."""
    _require_three_uniform(C, "check_projective")
    line_of_pair: dict[tuple[int, int], int] = {}
    for j, members in enumerate(C.lines):
        for a, b in combinations(members, 2):
            if (a, b) in line_of_pair:
                return False
            line_of_pair[(a, b)] = j
    if len(line_of_pair) != C.v * (C.v - 1) // 2:
        return False

    for p in range(C.v):
        for j1, j2 in combinations(C.lines_through(p), 2):
            others1 = [x for x in C.lines[j1] if x != p]
            others2 = [x for x in C.lines[j2] if x != p]
            transversals = set()
            for a in others1:
                for b in others2:
                    key = (a, b) if a < b else (b, a)
                    transversals.add(line_of_pair[key])
            for m1, m2 in combinations(sorted(transversals), 2):
                if not C.line_masks[m1] & C.line_masks[m2]:
                    return False
    return True
