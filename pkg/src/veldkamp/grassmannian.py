"""Pair Grassmannians: points are the 2-subsets and lines the 3-subsets of
{1..n}, incidence being inclusion.  Only the pair (k = 2) family is built;
it is the one every downstream construction uses."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

from .incidence import IncidenceStructure, StructureError, configuration_parameters

MIN_GROUND = 3
MAX_GROUND = 9

#: (v, b, r, k) signatures of the small named configurations G2(3)..G2(6).
NAMED_CONFIGURATIONS = {
    (3, 1, 1, 3): "line",
    (6, 4, 2, 3): "Pasch",
    (10, 10, 3, 3): "Desargues",
    (15, 20, 4, 3): "Cayley-Salmon",
}


def subset_label(elements) -> str:
    """Canonical label of a ground-set subset: digits in ascending order."""
    return "".join(str(e) for e in sorted(elements))


def _build_g2(n: int) -> IncidenceStructure:
    points = [subset_label(p) for p in combinations(range(1, n + 1), 2)]
    lines = [[subset_label(p) for p in combinations(t, 2)]
             for t in combinations(range(1, n + 1), 3)]
    return IncidenceStructure(points, lines)


@lru_cache(maxsize=None)
def build_g2(n: int) -> IncidenceStructure:
    """The pair Grassmannian on {1..n}: a (C(n,2)_{n-2}, C(n,3)_3)
    configuration.  Ground sizes outside 3..9 are rejected; beyond 9 the
    downstream hyperplane search leaves desk scale."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise StructureError(f"ground set size must be an integer, got {n!r}")
    if n < MIN_GROUND or n > MAX_GROUND:
        raise StructureError(
            f"ground set size must be between {MIN_GROUND} and {MAX_GROUND}, got {n}")
    return _build_g2(n)


def named_configuration(C: IncidenceStructure) -> str:
    """Name a structure by its (v, b, r, k) signature: "line", "Pasch",
    "Desargues", "Cayley-Salmon", or "unnamed"."""
    p = configuration_parameters(C)
    if p.regular and p.linear:
        return NAMED_CONFIGURATIONS.get((p.v, p.b, p.r, p.k), "unnamed")
    return "unnamed"


def grassmann_order(C: IncidenceStructure) -> int | None:
    """Ground-set size n if ``C`` is exactly the canonical pair Grassmannian
    on {1..n}, else None."""
    n = next((m for m in range(MIN_GROUND, MAX_GROUND + 1) if comb(m, 2) == C.v), None)
    if n is None:
        return None
    return n if C == build_g2(n) else None
