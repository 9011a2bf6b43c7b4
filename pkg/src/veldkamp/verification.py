"""End-to-end verification: rebuilds the whole pipeline at ground size 7 and
runs every structural check, one pass/fail line per criterion."""

from __future__ import annotations

import json
from collections import Counter

from .grassmannian import _build_g2, build_g2
from .hyperplanes import all_bipartition_hyperplanes, enumerate_hyperplanes, \
    enumerate_hyperplanes_scan
from .incidence import IncidenceStructure
from .magic_line import build_magic_line, full_reports
from .polar import alpha_quadric, conwell_heptad, embedded_grassmannian, \
    extract_symplectic, quadric_point_count
from .reporting import Report, ReportBuilder
from .veldkamp_space import (
    LINE_TYPE_ORDER,
    PointType,
    VeldkampSpace,
    build_veldkamp,
    tabulate_census,
)

EXPECTED_LINE_COUNTS = (105, 210, 70, 105, 105, 35, 21)
EXPECTED_CORE_SIZES = (3, 4, 6, 5, 7, 6, 10)
ORACLE_GROUNDS = (4, 5, 6)
EXPECTED_HYPERPLANES = {4: 7, 5: 15, 6: 31}


def export_payload(V: VeldkampSpace, magics) -> dict:
    """Deterministic machine-readable dump of the built objects."""
    return {
        "schema": 1,
        "structure": V.host.to_json_dict(),
        "hyperplanes": [
            {"partition": h.partition_label, "points": list(h.point_labels)}
            for h in V.vpoints],
        "census": tabulate_census(V).to_dict(),
        "magic_lines": [m.sectors_dict() for m in magics],
    }


def _build_pipeline(fresh: bool = False):
    host = _build_g2(7) if fresh else build_g2(7)
    V = build_veldkamp(host)
    W = extract_symplectic(V)
    magics = [build_magic_line(V, g, W) for g in range(1, 8)]
    return V, W, magics


def verify_all() -> Report:
    """Run the full acceptance sweep; the report carries one check per
    criterion with the first witness on failure."""
    rb = ReportBuilder("verify-all")
    V, W, magics = _build_pipeline()

    # 1. hyperplane census
    biparts = all_bipartition_hyperplanes(7)
    type_counts = Counter(V.point_types)
    split = (type_counts[PointType.ALPHA], type_counts[PointType.BETA],
             type_counts[PointType.GAMMA])
    ok = (len(V.vpoints) == 63
          and {h.mask for h in V.vpoints} == {h.mask for h in biparts}
          and split == (35, 21, 7))
    rb.add("hyperplane census", ok,
           f"{len(V.vpoints)} hyperplanes = bipartition set, type split "
           f"{split[0]}/{split[1]}/{split[2]}")

    # 2. oracle equivalence on the small grounds
    oracle_counts = {}
    ok = True
    for n in ORACLE_GROUNDS:
        host = build_g2(n)
        fast = {h.mask for h in enumerate_hyperplanes(host)}
        slow = {h.mask for h in enumerate_hyperplanes_scan(host)}
        oracle_counts[n] = len(slow)
        ok = ok and fast == slow and len(slow) == EXPECTED_HYPERPLANES[n]
    rb.add("oracle equivalence", ok,
           "backtracking = scan oracle for n=4,5,6; counts "
           + "/".join(str(oracle_counts[n]) for n in ORACLE_GROUNDS))

    # 3. Veldkamp census
    census = tabulate_census(V)
    counts = tuple(r.count for r in census.line_rows)
    ok = (census.n_lines == 651 and counts == EXPECTED_LINE_COUNTS
          and census.forbidden_absent and census.lines_per_point == (31, 31)
          and census.projective)
    rb.add("Veldkamp census", ok,
           f"651 lines, orbits {counts}, forbidden types absent, "
           f"31 lines per point, projective={census.projective}")

    # 4. core parity per orbit
    sizes = tuple(r.core_size for r in census.line_rows)
    cores_consistent = all(
        V.cores[j] == V.vpoints[a].mask & V.vpoints[b].mask
        == V.vpoints[a].mask & V.vpoints[c].mask
        == V.vpoints[b].mask & V.vpoints[c].mask
        for j, (a, b, c) in enumerate(V.vlines))
    rb.add("core composition", cores_consistent and sizes == EXPECTED_CORE_SIZES,
           f"triple = pairwise intersections on all lines; sizes {sizes}")

    # 5. symplectic extraction
    d = W.details
    ok = (W.n_lines == 315 and d["lines_per_point"] == [15]
          and d["one_or_all"] and d["srg"] == [63, 30, 13, 15])
    rb.add("symplectic polar space", ok,
           f"315 lines, 15 per point, one-or-all holds, SRG{tuple(d['srg'])}")

    # 6. subgeometries
    quadric = alpha_quadric(V)
    embedded, cert = embedded_grassmannian(V)
    heptad = conwell_heptad(V)
    ok = (quadric.n_points == 35 and quadric.n_lines == 105
          and cert.bijective and cert.incidence_preserving and cert.image_is_host
          and embedded.details["image_parameters"] == [21, 35, 5, 3]
          and heptad.n_points == 7
          and heptad.details["connecting_lines"] == 21
          and heptad.details["exterior_bound"] == 7)
    rb.add("subgeometries", ok,
           "alpha quadric 35/105; beta subgeometry isomorphic to the host; "
           "gamma heptad of 7 avoids the quadric on all 21 joins")

    # 7. quadric point-count formulas
    values = (quadric_point_count("parabolic", 2, 2),
              quadric_point_count("elliptic", 3, 2),
              quadric_point_count("hyperbolic", 3, 2))
    rb.add("quadric point counts", values == (15, 27, 35),
           f"parabolic/elliptic/hyperbolic = {values[0]}/{values[1]}/{values[2]}")

    # 8. magic line decompositions, every pivot
    reports = {m.pivot: full_reports(m) for m in magics}
    failures = [r for rs in reports.values() for r in rs
                if not r.ok and not r.name.startswith("veldkamp-line")]
    rb.add("magic line decompositions", not failures,
           "7 pivots: sectors 15/12/20/16, lines 15/30/90/15, "
           "core GQ(2,2), elliptic GQ(2,4), hyperbolic = alpha quadric, "
           "cone of 31 with 15 generators"
           if not failures else _first_failure_detail(failures))

    # 9. each decomposition is a Veldkamp line of the polar space
    failures = [r for rs in reports.values() for r in rs
                if not r.ok and r.name.startswith("veldkamp-line")]
    rb.add("Veldkamp line of the polar space", not failures,
           "7 pivots: the 27/35/31-point sets are hyperplanes of the polar "
           "space meeting pairwise in the core and closing one another"
           if not failures else _first_failure_detail(failures))

    # 10. determinism: a from-scratch rebuild serializes identically
    first = json.dumps(export_payload(V, magics), sort_keys=True)
    V2, _, magics2 = _build_pipeline(fresh=True)
    second = json.dumps(export_payload(V2, magics2), sort_keys=True)
    rb.add("deterministic rebuild", first == second,
           f"export payloads byte-identical ({len(first)} bytes)")

    rb.data["export"] = export_payload(V, magics)
    return rb.build()


def _first_failure_detail(failed_reports) -> str:
    first = failed_reports[0].first_failure()
    return f"{failed_reports[0].name}: {first.name}: {first.detail}"
