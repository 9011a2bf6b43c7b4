from itertools import combinations

import pytest

from veldkamp import (
    PointType,
    StructureError,
    alpha_quadric,
    check_one_or_all,
    collinearity_graph,
    configuration_parameters,
    conwell_heptad,
    embedded_grassmannian,
    quadric_point_count,
    srg_parameters,
)
from veldkamp.polar import ODD_CORE_TYPES
from veldkamp.veldkamp_space import line_type_symbol


def line_label_set(V, j):
    return frozenset(V.line_labels(j))


def test_symplectic_line_census(v27, w27):
    assert w27.n_points == 63 and w27.n_lines == 315
    assert w27.details["lines_per_point"] == [15]
    assert w27.details["srg"] == [63, 30, 13, 15]


def test_symplectic_odd_core_rule_matches_orbits(v27, w27):
    by_parity = {j for j, core in enumerate(v27.cores) if core.bit_count() % 2}
    by_orbit = {j for j, t in enumerate(v27.line_types) if t in ODD_CORE_TYPES}
    assert set(w27.vline_indices) == by_parity == by_orbit


def test_symplectic_membership_examples(v27, w27):
    selected = {line_label_set(v27, j) for j in w27.vline_indices}
    assert frozenset(("1234:567", "1256:347", "3456:127")) in selected
    assert frozenset(("12345:67", "12346:57", "12347:56")) not in selected


def test_symplectic_axioms(w27):
    structure = w27.as_incidence_structure()
    assert check_one_or_all(structure) == (True, None)
    assert srg_parameters(collinearity_graph(structure)).as_tuple() == (63, 30, 13, 15)
    assert configuration_parameters(structure).linear


def test_symplectic_collinearity_is_30_regular(w27):
    G = collinearity_graph(w27.as_incidence_structure())
    assert G.n == 63
    assert all(G.degree(i) == 30 for i in range(63))


def test_alpha_quadric_counts(v27):
    quadric = alpha_quadric(v27)
    assert quadric.n_points == 35 and quadric.n_lines == 105
    labels = set(quadric.point_labels())
    assert "1234:567" in labels
    assert "123456:7" not in labels


def test_alpha_quadric_lines_are_symplectic(v27, w27):
    quadric = alpha_quadric(v27)
    assert set(quadric.vline_indices) <= set(w27.vline_indices)
    assert all(v27.line_types[j] == (PointType.ALPHA,) * 3
               for j in quadric.vline_indices)


def test_polar_selection_closure(v27, w27):
    # every selected line of the line-carrying subspaces stays inside the
    # selected point set
    for sub in (w27, alpha_quadric(v27), embedded_grassmannian(v27)[0]):
        points = set(sub.vpoint_indices)
        for j in sub.vline_indices:
            assert set(v27.vlines[j]) <= points


def test_embedded_grassmannian_map(v27):
    sub, cert = embedded_grassmannian(v27)
    assert sub.n_points == 21 and sub.n_lines == 35
    assert cert.point_map["12345:67"] == "67"
    assert cert.bijective and cert.incidence_preserving and cert.image_is_host
    key = next(t for t in cert.line_map
               if set(t) == {"12345:67", "12346:57", "12347:56"})
    assert cert.line_map[key] == ("56", "57", "67")
    assert sub.details["image_parameters"] == [21, 35, 5, 3]


def test_embedded_image_census(v27):
    sub, _ = embedded_grassmannian(v27)
    p = configuration_parameters(sub.as_incidence_structure())
    assert (p.v, p.b, p.r, p.k) == (21, 35, 5, 3)
    assert p.is_binomial


def test_conwell_heptad(v27):
    heptad = conwell_heptad(v27)
    assert set(heptad.point_labels()) == {
        "123456:7", "123457:6", "123467:5", "123567:4",
        "124567:3", "134567:2", "234567:1"}
    assert heptad.vline_indices == ()
    assert heptad.details["connecting_lines"] == 21
    assert heptad.details["connecting_line_types"] == ["(β,γ,γ)"]
    assert heptad.details["exterior_bound"] == 7


def test_heptad_connecting_lines_avoid_the_quadric(v27):
    gamma = [i for i, t in enumerate(v27.point_types) if t is PointType.GAMMA]
    quadric_points = set(alpha_quadric(v27).vpoint_indices)
    for i, j in combinations(gamma, 2):
        line = v27.vlines[v27.line_of_pair(i, j)]
        assert not set(line) & quadric_points


def test_heptad_example_line(v27):
    i, j = v27.index_of("123456:7"), v27.index_of("123457:6")
    line = v27.vlines[v27.line_of_pair(i, j)]
    labels = {v27.vpoints[k].label for k in line}
    assert labels == {"12345:67", "123456:7", "123457:6"}
    assert line_type_symbol(v27.line_types[v27.line_of_pair(i, j)]) == "(β,γ,γ)"


@pytest.mark.parametrize("kind, n, q, expected", [
    ("parabolic", 2, 2, 15),
    ("elliptic", 3, 2, 27),
    ("hyperbolic", 3, 2, 35),
    ("parabolic", 3, 2, 63),
    ("elliptic", 2, 2, 5),
    ("hyperbolic", 2, 2, 9),
    ("elliptic", 2, 3, 10),
])
def test_quadric_point_counts(kind, n, q, expected):
    assert quadric_point_count(kind, n, q) == expected


@pytest.mark.parametrize("kind, n, q", [
    ("round", 2, 2),
    ("parabolic", 1, 2),
    ("parabolic", 2, 6),
    ("elliptic", 0, 2),
    ("elliptic", 2, 1),
    ("hyperbolic", 2, 0),
])
def test_quadric_point_count_rejects_bad_parameters(kind, n, q):
    with pytest.raises(StructureError):
        quadric_point_count(kind, n, q)


def test_quadric_point_count_matches_subspaces(v27, magic_lines):
    assert quadric_point_count("hyperbolic", 3, 2) == alpha_quadric(v27).n_points
    m = magic_lines[7]
    assert quadric_point_count("parabolic", 2, 2) == len(m.core_points)
    assert quadric_point_count("elliptic", 3, 2) == len(m.elliptic_set())
