"""Constructors for the named graph families, with documented label schemes.

Labels: cycles and paths use x1..xn; complete bipartite uses x-side and
y-side; whisker pendants are "w@v"; add_pendants pendants are "p{i}@v"
(i = position in the request list); the pendant-cycle star uses center "w",
leaves x1..xn, pendant y{i} on leaf xi, and cycle vertices "z{t}.{j}".
disjoint_union relabels everything sequentially to x1..xN.
"""

from __future__ import annotations

import warnings
from typing import Sequence

from .graphs import Graph


class FamilyWarning(UserWarning):
    """Constraint advisory raised by a family constructor."""


def cycle(n: int) -> Graph:
    """Cycle on vertices x1..xn; requires n >= 3."""
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    verts = [f"x{i}" for i in range(1, n + 1)]
    edges = [(verts[i], verts[(i + 1) % n]) for i in range(n)]
    return Graph(verts, edges)


def path(n: int) -> Graph:
    """Path on vertices x1..xn; n >= 1 (n = 1 is a single vertex)."""
    if n < 1:
        raise ValueError(f"path needs at least 1 vertex, got {n}")
    verts = [f"x{i}" for i in range(1, n + 1)]
    edges = [(verts[i], verts[i + 1]) for i in range(n - 1)]
    return Graph(verts, edges)


def complete_bipartite(m: int, n: int) -> Graph:
    """Complete bipartite graph on x1..xm versus y1..yn."""
    if m < 1 or n < 1:
        raise ValueError(f"complete_bipartite needs positive sides, got {m},{n}")
    xs = [f"x{i}" for i in range(1, m + 1)]
    ys = [f"y{j}" for j in range(1, n + 1)]
    return Graph(xs + ys, [(x, y) for x in xs for y in ys])


def complete(n: int) -> Graph:
    """Complete graph on vertices x1..xn."""
    if n < 1:
        raise ValueError(f"complete needs at least 1 vertex, got {n}")
    verts = [f"x{i}" for i in range(1, n + 1)]
    return Graph(verts, [(verts[i], verts[j]) for i in range(n) for j in range(i + 1, n)])


def whisker(g: Graph) -> Graph:
    """Attach one pendant "w@v" to every vertex v of g."""
    verts = list(g.vertices)
    edges = list(g.edges)
    for v in g.vertices:
        pv = f"w@{v}"
        if g.has_vertex(pv):
            raise ValueError(f"pendant label {pv!r} collides with a vertex of g")
        verts.append(pv)
        edges.append((v, pv))
    return Graph(verts, edges)


def is_whiskered(g: Graph) -> bool:
    """True when g arises from some graph by whiskering every vertex.

    Equivalent test: the edges having a degree-one endpoint contain a
    perfect matching of g.  Each degree-one vertex must be matched along
    its unique edge, so a greedy pass over those vertices decides it.
    """
    if not g.vertices:
        return False
    used: set[str] = set()
    for u in g.vertices:
        if g.degree(u) != 1 or u in used:
            continue
        v = g.neighbors(u)[0]
        if v in used:
            return False
        used.add(u)
        used.add(v)
    return len(used) == len(g.vertices)


def add_pendants(g: Graph, at: Sequence[str]) -> Graph:
    """Attach pendant "p{i}@v" for each v in `at` (i = 1-based list position)."""
    verts = list(g.vertices)
    edges = list(g.edges)
    for i, v in enumerate(at, start=1):
        if not g.has_vertex(v):
            raise ValueError(f"unknown vertex {v!r}")
        pv = f"p{i}@{v}"
        if pv in verts:
            raise ValueError(f"pendant label {pv!r} collides with a vertex of g")
        verts.append(pv)
        edges.append((v, pv))
    return Graph(verts, edges)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union, relabeled sequentially to x1..xN in component order.

    Each input graph keeps its internal vertex order under the relabeling.
    """
    if not graphs:
        return Graph([])
    verts: list[str] = []
    edges: list[tuple[str, str]] = []
    counter = 0
    for g in graphs:
        rename = {}
        for v in g.vertices:
            counter += 1
            rename[v] = f"x{counter}"
            verts.append(rename[v])
        edges.extend((rename[u], rename[v]) for u, v in g.edges)
    return Graph(verts, edges)


def pendant_cycle_star(k: int, cycle_half_lengths: Sequence[int]) -> Graph:
    """Star with center w and leaves x1..xn (n = k + len(cycle_half_lengths));
    leaves x1..xk get a pendant y{i}; each remaining leaf x_t gets an attached
    even cycle of length 2*r through x_t, on new vertices z{t}.1..z{t}.(2r-1).

    Warns (FamilyWarning) when some 2*r is not congruent to 2 mod 3, since
    the family's exactness analysis assumes that congruence.
    """
    if k < 0:
        raise ValueError(f"pendant count k must be >= 0, got {k}")
    rs = list(cycle_half_lengths)
    n = k + len(rs)
    if n < 1:
        raise ValueError("star needs at least one leaf")
    for r in rs:
        if r < 2:
            raise ValueError(f"attached cycle needs half-length >= 2, got {r}")
        if (2 * r) % 3 != 2:
            warnings.warn(
                f"attached cycle length {2 * r} is not 2 mod 3; exactness "
                "analysis for this family assumes 2r = 2 mod 3",
                FamilyWarning,
                stacklevel=2,
            )
    verts = ["w"] + [f"x{i}" for i in range(1, n + 1)]
    edges = [("w", f"x{i}") for i in range(1, n + 1)]
    for i in range(1, k + 1):
        verts.append(f"y{i}")
        edges.append((f"x{i}", f"y{i}"))
    for t_off, r in enumerate(rs):
        t = k + 1 + t_off
        ring = [f"x{t}"] + [f"z{t}.{j}" for j in range(1, 2 * r)]
        verts.extend(ring[1:])
        edges.extend((ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring)))
    return Graph(verts, edges)
