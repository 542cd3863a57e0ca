"""Even connections through a fixed multiset of edges, and the graph they
generate.

Two vertices u, v are even-connected with respect to an edge multiset
(e_1, ..., e_s) when some walk u = p_0, p_1, ..., p_{2k+1} = v with k >= 1
steps only along edges of the graph, every odd-to-even step p_{2l+1} to
p_{2l+2} traverses one of the e_i, and no e_i is consumed more often than
it occurs in the multiset.  Walks may repeat vertices.  u = v is allowed;
a vertex evenly connected to itself contributes a fresh pendant neighbor
z@u in the derived graph.

The derived graph is computed twice over: once by direct walk search
(gprime) and once through ideal arithmetic (gprime_algebraic), by taking
the colon of the (s+1)-st power of the edge ideal by the product of the
multiset, polarizing, and reading the generators back as edges.  The two
must agree; keeping the routes separate is the point.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import Graph
from .limits import Caps, default_caps
from .monomials import (
    MonomialIdeal,
    colon_by_monomial,
    edge_ideal,
    graph_of_quadratic,
    polarize,
    power,
)


@dataclass(frozen=True)
class EvenWalkCertificate:
    """A witnessing walk plus which multiset entry each middle step used.

    middle_assignment pairs are (odd walk position 2l+1, index into the
    edge multiset); the step from that position to the next consumes that
    multiset entry.
    """

    walk: tuple[str, ...]
    middle_assignment: tuple[tuple[int, int], ...]


def _check_multiset(g: Graph, edges: Sequence[tuple[str, str]]) -> list[tuple[str, str]]:
    if not edges:
        raise ValueError("the edge multiset must contain at least one edge")
    normalized = []
    for u, v in edges:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
        if g.index(u) > g.index(v):
            u, v = v, u
        normalized.append((u, v))
    return normalized


def is_even_connected(
    g: Graph,
    u: str,
    v: str,
    edges: Sequence[tuple[str, str]],
) -> Optional[EvenWalkCertificate]:
    """Shortest even-connection walk from u to v, or None.

    Breadth-first over (vertex, parity, per-edge usage counts), so the
    returned certificate is deterministic and of minimal length.
    """
    if not g.has_vertex(u):
        raise ValueError(f"{u!r} is not a vertex")
    if not g.has_vertex(v):
        raise ValueError(f"{v!r} is not a vertex")
    multiset = _check_multiset(g, edges)
    distinct: list[tuple[str, str]] = []
    mult: list[int] = []
    for e in multiset:
        if e in distinct:
            mult[distinct.index(e)] += 1
        else:
            distinct.append(e)
            mult.append(1)
    zero = tuple(0 for _ in distinct)
    start = (u, 0, zero)  # parity 0: even walk position, next step is free
    parents: dict = {start: None}
    queue = deque([start])
    goal = None
    while queue:
        state = queue.popleft()
        w, parity, counts = state
        if parity == 1 and w == v and sum(counts) >= 1:
            goal = state
            break
        if parity == 0:
            nxt = [((x, 1, counts), None) for x in g.neighbors(w)]
        else:
            nxt = []
            for t, (a, b) in enumerate(distinct):
                if counts[t] >= mult[t]:
                    continue
                if w == a:
                    other = b
                elif w == b:
                    other = a
                else:
                    continue
                used = counts[:t] + (counts[t] + 1,) + counts[t + 1 :]
                nxt.append(((other, 0, used), t))
        for child, step in nxt:
            if child not in parents:
                parents[child] = (state, step)
                queue.append(child)
    if goal is None:
        return None
    walk: list[str] = []
    steps: list[Optional[int]] = []
    cur = goal
    while cur is not None:
        walk.append(cur[0])
        prev = parents[cur]
        if prev is None:
            break
        steps.append(prev[1])
        cur = prev[0]
    walk.reverse()
    steps.reverse()
    # hand out original multiset indices per distinct edge, in order of use
    queues: dict[int, list[int]] = {}
    for i, e in enumerate(multiset):
        queues.setdefault(distinct.index(e), []).append(i)
    assignment = []
    for pos, t in enumerate(steps):
        if t is not None:
            assignment.append((pos, queues[t].pop(0)))
    return EvenWalkCertificate(tuple(walk), tuple(assignment))


def validate_even_walk(
    g: Graph,
    u: str,
    v: str,
    edges: Sequence[tuple[str, str]],
    certificate: EvenWalkCertificate,
) -> bool:
    """Re-check a certificate straight against the definition."""
    multiset = _check_multiset(g, edges)
    walk = certificate.walk
    if len(walk) < 4 or len(walk) % 2 != 0:
        return False
    if walk[0] != u or walk[-1] != v:
        return False
    for a, b in zip(walk, walk[1:]):
        if not g.has_edge(a, b):
            return False
    k = len(walk) // 2 - 1
    assignment = dict(certificate.middle_assignment)
    if sorted(assignment) != [2 * l + 1 for l in range(k)]:
        return False
    used = list(assignment.values())
    if len(set(used)) != len(used):
        return False
    for pos, i in assignment.items():
        if not 0 <= i < len(multiset):
            return False
        if {walk[pos], walk[pos + 1]} != set(multiset[i]):
            return False
    return True


def pendant_label(v: str) -> str:
    return f"z@{v}"


def even_connected_pairs(
    g: Graph,
    edges: Sequence[tuple[str, str]],
) -> list[tuple[str, str, EvenWalkCertificate]]:
    """All even-connected pairs (u, v) with index(u) <= index(v), with
    certificates, in vertex order."""
    pairs = []
    n = len(g.vertices)
    for i in range(n):
        for j in range(i, n):
            u, v = g.vertices[i], g.vertices[j]
            cert = is_even_connected(g, u, v, edges)
            if cert is not None:
                pairs.append((u, v, cert))
    return pairs


def gprime(
    g: Graph,
    edges: Sequence[tuple[str, str]],
    caps: Optional[Caps] = None,
) -> Graph:
    """Graph on g plus every even-connected pair.

    A vertex even-connected to itself gains a fresh pendant neighbor
    z@vertex instead of a loop.
    """
    caps = caps or default_caps()
    new_edges = list(g.edges)
    pendants = []
    for u, v, _ in even_connected_pairs(g, edges):
        if u == v:
            p = pendant_label(u)
            if g.has_vertex(p):
                raise ValueError(f"pendant label {p!r} collides with a vertex")
            pendants.append(p)
            new_edges.append((u, p))
        else:
            new_edges.append((u, v))
    vertices = list(g.vertices) + pendants
    caps.check_graph(len(vertices), len(set(new_edges)), "derived graph")
    return Graph(vertices, new_edges)


def gprime_algebraic(
    g: Graph,
    edges: Sequence[tuple[str, str]],
    caps: Optional[Caps] = None,
) -> Graph:
    """The same derived graph, straight from the ideal arithmetic."""
    caps = caps or default_caps()
    multiset = _check_multiset(g, edges)
    ideal = edge_ideal(g)
    s = len(multiset)
    product = ideal.monomial("*".join(f"{u}*{v}" for u, v in multiset))
    colon = colon_by_monomial(power(ideal, s + 1, caps), product)
    squarefree, new_map = polarize(colon)
    renames: dict[str, str] = {}
    for fresh, base in new_map.items():
        if fresh != f"{base}#2":
            raise RuntimeError(
                f"unexpected polarization label {fresh!r} for {base!r}"
            )
        renames[fresh] = pendant_label(base)
    variables = tuple(renames.get(name, name) for name in squarefree.variables)
    renamed = MonomialIdeal(variables, squarefree.generators, minimalize=False)
    pendants = sorted(renames.values(), key=lambda p: g.index(p[2:]))
    ambient = tuple(g.vertices) + tuple(pendants)
    derived = graph_of_quadratic(renamed, ambient)
    caps.check_graph(len(derived.vertices), len(derived.edges), "derived graph")
    return derived
