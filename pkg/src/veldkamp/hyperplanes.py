"""Geometric hyperplanes: the membership law, two independent enumerators,
and the closed-form bipartition hyperplanes of the pair Grassmannians.

A geometric hyperplane is a proper point subset that every line either lies
inside or meets in exactly one point.  The production enumerator is a
depth-first search with per-line constraint propagation; a raw scan of all
2^v subsets is kept alongside as an independent oracle for small hosts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .grassmannian import build_g2, grassmann_order, subset_label
from .incidence import (
    IncidenceStructure,
    StructureError,
    _require_three_uniform,
    iter_bits,
)

ORACLE_MAX_POINTS = 24


@dataclass(frozen=True)
class Hyperplane:
    """A geometric hyperplane of ``host``, stored as a member bit mask.

    ``partition`` is the two-sided ground-set split (larger side first) when
    the host is a pair Grassmannian and the members are exactly the pairs
    lying inside one side or the other; None otherwise.
    """

    host: IncidenceStructure
    mask: int
    partition: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    @property
    def point_labels(self) -> tuple[str, ...]:
        return self.host.mask_labels(self.mask)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def partition_label(self) -> str | None:
        if self.partition is None:
            return None
        a, b = self.partition
        return subset_label(a) + ":" + subset_label(b)

    @property
    def label(self) -> str:
        return self.partition_label or "+".join(self.point_labels)

    def __repr__(self):
        return f"Hyperplane({self.label})"


def as_point_mask(C: IncidenceStructure, subset) -> int:
    """Normalize a point subset (bit mask or iterable of labels) to a mask."""
    if isinstance(subset, int):
        if subset & ~C.full_mask:
            raise StructureError("subset mask has bits outside the point set")
        return subset
    return C.label_mask(subset)


def is_hyperplane(C: IncidenceStructure, subset) -> bool:
    """The hyperplane law: the subset is proper and every line meets it in
    exactly one point or lies fully inside it."""
    m = as_point_mask(C, subset)
    if m == C.full_mask:
        return False
    for lm in C.line_masks:
        hit = (m & lm).bit_count()
        if hit != 1 and hit != lm.bit_count():
            return False
    return True


def enumerate_hyperplanes(C: IncidenceStructure) -> tuple[Hyperplane, ...]:
    """All geometric hyperplanes of a 3-point-per-line host, canonically
    ordered, by backtracking with line-constraint propagation.

    For each line the propagation rules are: two members force the third in;
    one member plus one non-member forces the last point out; two
    non-members force the survivor in; a line stuck at zero or two members
    prunes the branch.
    """
    _require_three_uniform(C, "enumerate_hyperplanes")
    if C.v == 0 or C.b == 0:
        raise StructureError("degenerate structure: enumeration needs points and lines")

    line_masks = C.line_masks
    full = C.full_mask
    found: list[int] = []

    def propagate(in_mask: int, out_mask: int, queue: list[int]):
        while queue:
            lm = line_masks[queue.pop()]
            ic = (in_mask & lm).bit_count()
            oc = (out_mask & lm).bit_count()
            if ic + oc < 3:
                if ic + oc == 2:
                    rest = lm & ~(in_mask | out_mask)
                    if ic == 1:
                        out_mask |= rest
                    else:  # two in (must fill) or two out (must hit once)
                        in_mask |= rest
                    queue.extend(C.lines_through(rest.bit_length() - 1))
                continue
            if ic == 0 or ic == 2:
                return None
        return in_mask, out_mask

    def dfs(in_mask: int, out_mask: int) -> None:
        undecided = full & ~(in_mask | out_mask)
        if not undecided:
            if in_mask != full:
                found.append(in_mask)
            return
        p = (undecided & -undecided).bit_length() - 1
        bit = 1 << p
        for im, om in ((in_mask | bit, out_mask), (in_mask, out_mask | bit)):
            state = propagate(im, om, list(C.lines_through(p)))
            if state is not None:
                dfs(*state)

    dfs(0, 0)
    return _canonical_hyperplanes(C, found)


def enumerate_hyperplanes_scan(C: IncidenceStructure) -> tuple[Hyperplane, ...]:
    """Independent oracle: test every proper subset of points against the
    hyperplane law directly.  Exponential by design; refuses hosts with more
    than 24 points."""
    if C.v > ORACLE_MAX_POINTS:
        raise StructureError(
            f"scan oracle is limited to {ORACLE_MAX_POINTS} points, host has {C.v}")
    line_data = [(lm, lm.bit_count()) for lm in C.line_masks]
    found = []
    for m in range(C.full_mask):  # C.full_mask itself is not proper
        ok = True
        for lm, size in line_data:
            hit = (m & lm).bit_count()
            if hit != 1 and hit != size:
                ok = False
                break
        if ok:
            found.append(m)
    return _canonical_hyperplanes(C, found)


def _canonical_hyperplanes(C, masks) -> tuple[Hyperplane, ...]:
    masks = sorted(set(masks), key=lambda m: tuple(iter_bits(m)))
    return tuple(Hyperplane(C, m, derive_partition(C, m)) for m in masks)


def canonical_sides(a, b) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Order two ground-set sides canonically: larger first, ties broken
    lexicographically."""
    sa, sb = tuple(sorted(a)), tuple(sorted(b))
    return (sa, sb) if (-len(sa), sa) <= (-len(sb), sb) else (sb, sa)


def _bipartition_mask(host: IncidenceStructure, side_a, side_b) -> int:
    m = 0
    for side in (side_a, side_b):
        for pair in combinations(sorted(side), 2):
            m |= 1 << host.index_of(subset_label(pair))
    return m


def derive_partition(C: IncidenceStructure, mask: int):
    """Recover the bipartition label of a hyperplane of a pair Grassmannian,
    if its members are exactly the pairs inside the two sides; None when the
    host is not a pair Grassmannian or the pattern does not match."""
    n = grassmann_order(C)
    if n is None:
        return None
    side_a = {1}
    for y in range(2, n + 1):
        if mask >> C.index_of(subset_label((1, y))) & 1:
            side_a.add(y)
    side_b = set(range(1, n + 1)) - side_a
    if not side_b:
        return None
    if mask != _bipartition_mask(C, side_a, side_b):
        return None
    return canonical_sides(side_a, side_b)


def bipartition_hyperplane(n: int, side) -> Hyperplane:
    """The hyperplane of the pair Grassmannian on {1..n} whose members are
    the pairs inside ``side`` plus the pairs inside its complement.  Every
    triple-line splits 3-0 or 2-1 across the bipartition, so it meets the
    member set in three points or one and the law holds by construction."""
    host = build_g2(n)
    ground = set(range(1, n + 1))
    a = {int(x) for x in side}
    if not a or not a <= ground:
        raise StructureError(f"side must be a nonempty subset of 1..{n}")
    if a == ground:
        raise StructureError("side must be a proper subset of the ground set")
    b = ground - a
    return Hyperplane(host, _bipartition_mask(host, a, b), canonical_sides(a, b))


def all_bipartition_hyperplanes(n: int) -> tuple[Hyperplane, ...]:
    """The 2^(n-1) - 1 distinct bipartition hyperplanes (complementary sides
    give the same point set), canonically ordered."""
    out = {}
    for r in range(1, n // 2 + 1):
        for side in combinations(range(1, n + 1), r):
            h = bipartition_hyperplane(n, side)
            out[h.mask] = h
    return tuple(sorted(out.values(), key=lambda h: h.members))
