from itertools import combinations
from math import comb

import pytest

from veldkamp import (
    StructureError,
    build_g2,
    collinearity_graph,
    configuration_parameters,
    named_configuration,
    new_structure,
)
from veldkamp.grassmannian import _build_g2, grassmann_order, subset_label


@pytest.mark.parametrize("n", range(3, 10))
def test_build_parameters(n):
    p = configuration_parameters(build_g2(n))
    assert (p.v, p.b, p.r, p.k) == (comb(n, 2), comb(n, 3), n - 2, 3)
    assert p.regular and p.linear


def test_points_and_lines_are_subset_labels():
    C = build_g2(7)
    assert C.labels == tuple(subset_label(p) for p in combinations(range(1, 8), 2))
    assert C.line_labels(0) == ("12", "13", "23")


def test_collinear_iff_pairs_share_an_element():
    C = build_g2(7)
    G = collinearity_graph(C)
    for i, j in combinations(range(C.v), 2):
        share = bool(set(C.labels[i]) & set(C.labels[j]))
        assert bool(G.adjacency[i] >> j & 1) == share


@pytest.mark.parametrize("n, name", [
    (3, "line"),
    (4, "Pasch"),
    (5, "Desargues"),
    (6, "Cayley-Salmon"),
    (7, "unnamed"),
])
def test_named_configurations(n, name):
    assert named_configuration(build_g2(n)) == name


def test_grid_is_unnamed():
    points = [f"{r}{c}" for r in range(3) for c in range(3)]
    rows = [[f"{r}{c}" for c in range(3)] for r in range(3)]
    cols = [[f"{r}{c}" for r in range(3)] for c in range(3)]
    assert named_configuration(new_structure(points, rows + cols)) == "unnamed"


@pytest.mark.parametrize("n", [2, 10, -1])
def test_ground_size_out_of_range(n):
    with pytest.raises(StructureError, match="between 3 and 9"):
        build_g2(n)


def test_ground_size_must_be_integer():
    with pytest.raises(StructureError):
        build_g2("7")


def test_build_is_cached_and_reproducible():
    assert build_g2(6) is build_g2(6)
    assert _build_g2(6) == build_g2(6)


def test_grassmann_order_recognition():
    assert grassmann_order(build_g2(5)) == 5
    assert grassmann_order(new_structure(["a", "b", "c"], [["a", "b", "c"]])) is None
    # same size as a pair Grassmannian is not enough: labels must match
    relabeled = new_structure(["x1", "x2", "x3"], [["x1", "x2", "x3"]])
    assert grassmann_order(relabeled) is None
