"""Acceptance suite: one test per criterion, each printing a pass line with
the observed values.  All checks are exact."""

from collections import Counter

from veldkamp import (
    PointType,
    all_bipartition_hyperplanes,
    alpha_quadric,
    build_g2,
    check_one_or_all,
    check_projective,
    collinearity_graph,
    conwell_heptad,
    embedded_grassmannian,
    enumerate_hyperplanes,
    enumerate_hyperplanes_scan,
    is_hyperplane,
    quadric_point_count,
    srg_parameters,
    tabulate_census,
)
from veldkamp.cli import main
from veldkamp.magic_line import verify_cone, verify_core, verify_counts, \
    verify_elliptic, verify_hyperbolic
from veldkamp.polar import ODD_CORE_TYPES
from veldkamp.veldkamp_space import line_type_symbol


def _pass(criterion, detail):
    print(f"PASS criterion {criterion}: {detail}")


def test_criterion_1_hyperplane_census(v27):
    hyps = v27.vpoints
    assert len(hyps) == 63
    assert {h.mask for h in hyps} == {h.mask for h in all_bipartition_hyperplanes(7)}
    counts = Counter(v27.point_types)
    assert (counts[PointType.ALPHA], counts[PointType.BETA],
            counts[PointType.GAMMA]) == (35, 21, 7)
    _pass(1, "63 hyperplanes = bipartition set; split 35α/21β/7γ")


def test_criterion_2_oracle_equivalence():
    counts = {}
    for n in (4, 5, 6):
        host = build_g2(n)
        fast = {h.mask for h in enumerate_hyperplanes(host)}
        slow = {h.mask for h in enumerate_hyperplanes_scan(host)}
        assert fast == slow
        counts[n] = len(slow)
    assert counts == {4: 7, 5: 15, 6: 31}
    _pass(2, f"backtracking = scan oracle; counts {counts}")


def test_criterion_3_veldkamp_census(v27):
    census = tabulate_census(v27)
    assert census.n_lines == 651
    assert tuple(r.count for r in census.line_rows) == (105, 210, 70, 105, 105, 35, 21)
    assert census.forbidden_counts == {"(α,γ,γ)": 0, "(β,β,γ)": 0, "(γ,γ,γ)": 0}
    assert census.lines_per_point == (31, 31)
    assert census.projective
    _pass(3, "651 lines in orbits (105,210,70,105,105,35,21); "
             "forbidden types absent; 31 per point; projective")


def test_criterion_4_core_composition(v27):
    for j, (a, b, c) in enumerate(v27.vlines):
        ma, mb, mc = (v27.vpoints[i].mask for i in (a, b, c))
        assert v27.cores[j] == ma & mb == ma & mc == mb & mc
    census = tabulate_census(v27)
    assert tuple(r.core_size for r in census.line_rows) == (3, 4, 6, 5, 7, 6, 10)
    _pass(4, "triple = pairwise intersections; core sizes (3,4,6,5,7,6,10)")


def test_criterion_5_symplectic_extraction(v27, w27):
    assert w27.n_lines == 315
    per_point = Counter()
    for j in w27.vline_indices:
        for i in v27.vlines[j]:
            per_point[i] += 1
    assert set(per_point.values()) == {15} and len(per_point) == 63
    structure = w27.as_incidence_structure()
    assert check_one_or_all(structure) == (True, None)
    assert srg_parameters(collinearity_graph(structure)).as_tuple() == (63, 30, 13, 15)
    _pass(5, "315 lines, 15 per point, one-or-all holds, SRG(63,30,13,15)")


def test_criterion_6_subgeometries(v27):
    quadric = alpha_quadric(v27)
    assert (quadric.n_points, quadric.n_lines) == (35, 105)
    embedded, cert = embedded_grassmannian(v27)
    assert cert.bijective and cert.incidence_preserving and cert.image_is_host
    heptad = conwell_heptad(v27)
    assert heptad.n_points == 7 == (2 ** 3 - 1) // (2 - 1)
    assert heptad.details["connecting_lines"] == 21
    quadric_points = set(quadric.vpoint_indices)
    gamma = list(heptad.vpoint_indices)
    from itertools import combinations
    for i, j in combinations(gamma, 2):
        assert not set(v27.vlines[v27.line_of_pair(i, j)]) & quadric_points
    _pass(6, "quadric 35/105; beta subgeometry = host; heptad meets bound 7, "
             "all 21 joins avoid the quadric")


def test_criterion_7_quadric_formulas():
    values = (quadric_point_count("parabolic", 2, 2),
              quadric_point_count("elliptic", 3, 2),
              quadric_point_count("hyperbolic", 3, 2))
    assert values == (15, 27, 35)
    _pass(7, f"parabolic/elliptic/hyperbolic(…,2) = {values}")


def test_criterion_8_magic_line_every_pivot(v27, magic_lines):
    quadric = alpha_quadric(v27)
    for g, m in magic_lines.items():
        assert verify_counts(m).ok
        core = verify_core(m)
        assert core.ok and core.data["gq"] == [2, 2]
        assert verify_elliptic(m).ok
        assert verify_hyperbolic(m).ok
        assert set(m.hyperbolic_set()) == set(quadric.vpoint_indices)
        cone = verify_cone(m)
        assert cone.ok
        assert len(m.cone_set()) == 31 and len(m.cone_lines) == 15
    _pass(8, "7 pivots: sectors (15,12,20,16), lines (15,30,90,15), "
             "GQ(2,2) core, GQ(2,4) elliptic, hyperbolic = quadric, "
             "cone 31 = vertex + 15 generators")


def test_criterion_9_veldkamp_line_of_w(v27, magic_lines):
    for g, m in magic_lines.items():
        ws = m.symplectic.as_incidence_structure()
        sets = {}
        for name, indices in (("E", m.elliptic_set()), ("H", m.hyperbolic_set()),
                              ("C", m.cone_set())):
            mask = ws.label_mask(v27.vpoints[i].label for i in indices)
            assert is_hyperplane(ws, mask)
            sets[name] = mask
        core = ws.label_mask(v27.vpoints[i].label for i in m.core_points)
        assert sets["E"] & sets["H"] == sets["E"] & sets["C"] \
            == sets["H"] & sets["C"] == core
        assert ws.full_mask & ~(sets["E"] ^ sets["H"]) == sets["C"]
        assert ws.full_mask & ~(sets["E"] ^ sets["C"]) == sets["H"]
        assert ws.full_mask & ~(sets["H"] ^ sets["C"]) == sets["E"]
    _pass(9, "7 pivots: 27/35/31-point sets are hyperplanes of the polar "
             "space, pairwise meeting in the core, closing one another")


def test_criterion_10_determinism(tmp_path):
    first = tmp_path / "run1.json"
    second = tmp_path / "run2.json"
    assert main(["verify-all", "--n", "7", "--json", str(first)]) == 0
    assert main(["verify-all", "--n", "7", "--json", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    _pass(10, f"two verify-all exports byte-identical "
              f"({first.stat().st_size} bytes)")


def test_magic_line_sector_lines_stay_in_odd_orbits(v27, magic_lines):
    # supplementary to criteria 8/9: no sector line sits in an even-core orbit
    for m in magic_lines.values():
        for group in (m.core_lines, m.elliptic_lines, m.hyperbolic_lines, m.cone_lines):
            assert all(v27.line_types[j] in ODD_CORE_TYPES for j in group)
    odd_symbols = {line_type_symbol(t) for t in ODD_CORE_TYPES}
    assert odd_symbols == {"(α,α,α)", "(α,β,β)", "(α,β,γ)"}
