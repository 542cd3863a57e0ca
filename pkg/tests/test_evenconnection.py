"""Even-connection walks and the derived graph of a colon ideal."""

import random

import pytest

from edgeideal.evenconnection import (
    EvenWalkCertificate,
    even_connected_pairs,
    gprime,
    gprime_algebraic,
    is_even_connected,
    pendant_label,
    validate_even_walk,
)
from edgeideal.families import cycle, path
from edgeideal.graphs import Graph, parse_graph
from edgeideal.limits import Caps, ResourceLimitError

from oracles import brute_even_connected, random_graph

HEX_MS = [("x2", "x3"), ("x4", "x5")]


def _new_pairs(g, edges):
    return sorted(
        (u, v)
        for u, v, _ in even_connected_pairs(g, edges)
        if u == v or not g.has_edge(u, v)
    )


def test_hexagon_new_even_connections():
    assert _new_pairs(cycle(6), HEX_MS) == [("x1", "x4"), ("x3", "x6")]


def test_hexagon_walk_certificate():
    cert = is_even_connected(cycle(6), "x1", "x4", HEX_MS)
    assert cert == EvenWalkCertificate(("x1", "x2", "x3", "x4"), ((1, 0),))
    assert validate_even_walk(cycle(6), "x1", "x4", HEX_MS, cert)


def test_no_even_connection_without_usable_edge():
    assert is_even_connected(path(4), "x1", "x4", [("x1", "x2")]) is None


def test_triangle_self_connection_becomes_pendant():
    g = cycle(3)
    cert = is_even_connected(g, "x2", "x2", [("x1", "x3")])
    assert cert is not None and cert.walk == ("x2", "x1", "x3", "x2")
    derived = gprime(g, [("x1", "x3")])
    assert pendant_label("x2") == "z@x2"
    assert derived.has_vertex("z@x2")
    assert derived.has_edge("x2", "z@x2")
    assert derived.n_edges == g.n_edges + 1
    assert derived == gprime_algebraic(g, [("x1", "x3")])


def test_walk_may_need_every_multiset_entry():
    g = cycle(6)
    assert is_even_connected(g, "x1", "x6", [("x2", "x3")]) is None
    assert is_even_connected(g, "x1", "x6", [("x4", "x5")]) is None
    cert = is_even_connected(g, "x1", "x6", HEX_MS)
    assert cert == EvenWalkCertificate(
        ("x1", "x2", "x3", "x4", "x5", "x6"), ((1, 0), (3, 1))
    )
    assert validate_even_walk(g, "x1", "x6", HEX_MS, cert)


def test_multiset_is_validated():
    with pytest.raises(ValueError):
        is_even_connected(cycle(4), "x1", "x2", [])
    with pytest.raises(ValueError):
        is_even_connected(cycle(4), "x1", "x2", [("x1", "x3")])
    with pytest.raises(ValueError):
        is_even_connected(cycle(4), "x0", "x2", [("x1", "x2")])


def test_tampered_certificates_fail_validation():
    g = cycle(6)
    cert = is_even_connected(g, "x1", "x4", HEX_MS)
    ok = validate_even_walk
    assert ok(g, "x1", "x4", HEX_MS, cert)
    assert not ok(g, "x4", "x1", HEX_MS, cert)
    assert not ok(g, "x1", "x4", HEX_MS, EvenWalkCertificate(cert.walk[:3], cert.middle_assignment))
    assert not ok(g, "x1", "x4", HEX_MS, EvenWalkCertificate(("x1", "x3", "x2", "x4"), ((1, 0),)))
    assert not ok(g, "x1", "x4", HEX_MS, EvenWalkCertificate(cert.walk, ()))
    assert not ok(g, "x1", "x4", HEX_MS, EvenWalkCertificate(cert.walk, ((1, 1),)))
    assert not ok(g, "x1", "x4", HEX_MS, EvenWalkCertificate(cert.walk, ((1, 5),)))


def test_even_connection_matches_brute_walk_search():
    rng = random.Random(23)
    for _ in range(25):
        g = random_graph(rng, rng.randint(3, 5), 0.5)
        if not g.edges:
            continue
        size = rng.randint(1, 2)
        ms = [rng.choice(g.edges) for _ in range(size)]
        got = {
            (u, v)
            for u, v, cert in even_connected_pairs(g, ms)
            if validate_even_walk(g, u, v, ms, cert) or pytest.fail("bad cert")
        }
        verts = g.vertices
        want = {
            (verts[i], verts[j])
            for i in range(len(verts))
            for j in range(i, len(verts))
            if brute_even_connected(g, verts[i], verts[j], ms)
        }
        assert got == want, (g.to_text(), ms)


def test_both_derivation_routes_agree():
    rng = random.Random(29)
    cases = [(cycle(6), HEX_MS), (cycle(3), [("x1", "x3")])]
    while len(cases) < 14:
        g = random_graph(rng, rng.randint(3, 6), 0.5)
        if g.edges:
            cases.append((g, [rng.choice(g.edges) for _ in range(rng.randint(1, 2))]))
    for g, ms in cases:
        assert gprime(g, ms) == gprime_algebraic(g, ms), (g.to_text(), ms)


def test_pendant_label_collision_is_an_error():
    g = Graph(["x1", "x2", "x3", "z@x2"], [("x1", "x2"), ("x2", "x3"), ("x1", "x3"), ("x1", "z@x2")])
    with pytest.raises(ValueError, match="collides"):
        gprime(g, [("x1", "x3")])


def test_derived_graph_respects_caps():
    with pytest.raises(ResourceLimitError):
        gprime(cycle(6), HEX_MS, caps=Caps(max_edges=6))
