"""Named graph constructors."""

import warnings

import pytest

from edgeideal.families import (
    FamilyWarning,
    add_pendants,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    is_whiskered,
    path,
    pendant_cycle_star,
    whisker,
)
from edgeideal.graphs import Graph, is_bipartite


def test_cycle_shape():
    g = cycle(5)
    assert g.vertices == ("x1", "x2", "x3", "x4", "x5")
    assert g.n_edges == 5
    assert all(g.degree(v) == 2 for v in g.vertices)
    with pytest.raises(ValueError):
        cycle(2)


def test_path_shape():
    g = path(4)
    assert g.edges == (("x1", "x2"), ("x2", "x3"), ("x3", "x4"))
    assert path(1).n_edges == 0


def test_complete_bipartite_shape():
    g = complete_bipartite(2, 3)
    assert g.n_edges == 6
    assert is_bipartite(g)
    assert g.neighbors("x1") == ("y1", "y2", "y3")


def test_complete_shape():
    g = complete(4)
    assert g.n_edges == 6
    assert all(g.degree(v) == 3 for v in g.vertices)


def test_whisker_adds_one_pendant_per_vertex():
    g = whisker(cycle(4))
    assert g.n_vertices == 8
    assert g.n_edges == 8
    assert g.has_edge("x1", "w@x1")
    assert g.degree("w@x3") == 1


def test_is_whiskered_on_whiskered_graphs():
    for base in (cycle(4), path(3), complete_bipartite(2, 2)):
        assert is_whiskered(whisker(base))


def test_is_whiskered_counterexamples():
    assert not is_whiskered(cycle(6))
    assert not is_whiskered(path(3))  # middle vertex has no private pendant
    assert is_whiskered(path(2))  # an edge is the whisker of a point
    assert not is_whiskered(Graph([]))
    # two pendants sharing a support vertex is not a whiskering
    assert not is_whiskered(add_pendants(path(2), ["x1", "x1"]))


def test_add_pendants_labels_and_validation():
    g = add_pendants(cycle(3), ["x1", "x1", "x3"])
    assert g.has_edge("x1", "p1@x1") and g.has_edge("x1", "p2@x1")
    assert g.has_edge("x3", "p3@x3")
    with pytest.raises(ValueError):
        add_pendants(cycle(3), ["nope"])


def test_disjoint_union_relabels_sequentially():
    g = disjoint_union([cycle(3), path(2)])
    assert g.vertices == ("x1", "x2", "x3", "x4", "x5")
    assert g.has_edge("x4", "x5")
    assert not g.is_connected()
    assert disjoint_union([]) == Graph([])


def test_pendant_cycle_star_shape():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        g = pendant_cycle_star(1, [4])  # 2*4 = 8 == 2 mod 3: no warning
    assert g.has_edge("w", "x1") and g.has_edge("w", "x2")
    assert g.has_edge("x1", "y1")
    # the attached cycle through x2 has length 8
    cycle_verts = [v for v in g.vertices if v.startswith("z2.")]
    assert len(cycle_verts) == 7
    assert g.degree("x2") == 3  # center + two cycle neighbors


def test_pendant_cycle_star_warns_off_congruence():
    with pytest.warns(FamilyWarning):
        pendant_cycle_star(1, [3])  # 2*3 = 6 != 2 mod 3
