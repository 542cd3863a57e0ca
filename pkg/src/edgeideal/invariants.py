"""Exact matching/independence invariants with witnesses.

All searches are deterministic branch and bound over canonical edge/vertex
order, so the returned witness is reproducible. Each witness has an
independent definition-literal checker used by the test harness.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graphs import Graph
from .limits import Caps, default_caps

Edge = tuple[str, str]


def _edge_indices(g: Graph) -> list[tuple[int, int]]:
    return [(g.index(u), g.index(v)) for u, v in g.edges]


def _conflict_masks(g: Graph) -> list[int]:
    """conflict[i] has bit j set when edges i, j cannot coexist in an
    induced matching: they share a vertex or some edge of g joins them."""
    idx = _edge_indices(g)
    adj = g.adjacency_masks()
    masks = [0] * len(idx)
    for i, (a, b) in enumerate(idx):
        reach = adj[a] | adj[b] | (1 << a) | (1 << b)
        for j, (c, d) in enumerate(idx):
            if i == j:
                continue
            if (reach >> c) & 1 or (reach >> d) & 1:
                masks[i] |= 1 << j
    return masks


def _check_caps(g: Graph, caps: Optional[Caps], context: str) -> None:
    (caps or default_caps()).check_graph(g.n_vertices, g.n_edges, context)


# -- matchings ----------------------------------------------------------------


def maximum_matching(g: Graph, caps: Optional[Caps] = None) -> tuple[Edge, ...]:
    _check_caps(g, caps, "maximum_matching")
    idx = _edge_indices(g)
    n_edges = len(idx)
    best: list[int] = []

    def recurse(start: int, covered: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        remaining = n_edges - start
        if len(chosen) + remaining <= len(best):
            return
        for i in range(start, n_edges):
            a, b = idx[i]
            if (covered >> a) & 1 or (covered >> b) & 1:
                continue
            if len(chosen) + 1 + (n_edges - i - 1) <= len(best):
                break
            chosen.append(i)
            recurse(i + 1, covered | (1 << a) | (1 << b), chosen)
            chosen.pop()

    recurse(0, 0, [])
    return tuple(g.edges[i] for i in sorted(best))


def matching_number(g: Graph, caps: Optional[Caps] = None) -> int:
    return len(maximum_matching(g, caps))


def maximum_induced_matching(
    g: Graph, caps: Optional[Caps] = None
) -> tuple[Edge, ...]:
    _check_caps(g, caps, "maximum_induced_matching")
    conflicts = _conflict_masks(g)
    n_edges = len(conflicts)
    best: list[int] = []

    def recurse(allowed: int, lowest: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        live = allowed >> lowest
        i = lowest
        count = bin(live).count("1")
        if len(chosen) + count <= len(best):
            return
        while live:
            if live & 1:
                chosen.append(i)
                recurse(allowed & ~conflicts[i] & ~(1 << i), i + 1, chosen)
                chosen.pop()
                count -= 1
                if len(chosen) + count <= len(best):
                    return
            live >>= 1
            i += 1

    recurse((1 << n_edges) - 1, 0, [])
    return tuple(g.edges[i] for i in sorted(best))


def induced_matching_number(g: Graph, caps: Optional[Caps] = None) -> int:
    return len(maximum_induced_matching(g, caps))


def minimum_maximal_matching(
    g: Graph, caps: Optional[Caps] = None
) -> tuple[Edge, ...]:
    """Smallest matching that cannot be extended by any edge."""
    _check_caps(g, caps, "minimum_maximal_matching")
    idx = _edge_indices(g)
    n_edges = len(idx)
    best: Optional[list[int]] = None

    def first_free_edge(covered: int) -> int:
        for i, (a, b) in enumerate(idx):
            if not ((covered >> a) & 1 or (covered >> b) & 1):
                return i
        return -1

    def recurse(covered: int, chosen: list[int]) -> None:
        nonlocal best
        if best is not None and len(chosen) >= len(best):
            return
        i = first_free_edge(covered)
        if i < 0:
            best = chosen.copy()
            return
        a, b = idx[i]
        # a maximal matching must cover a or b; branch over every way
        for j, (c, d) in enumerate(idx):
            if (covered >> c) & 1 or (covered >> d) & 1:
                continue
            if c == a or d == a or c == b or d == b:
                chosen.append(j)
                recurse(covered | (1 << c) | (1 << d), chosen)
                chosen.pop()

    recurse(0, [])
    if best is None:
        return ()
    return tuple(g.edges[i] for i in sorted(best))


def min_maximal_matching_number(g: Graph, caps: Optional[Caps] = None) -> int:
    return len(minimum_maximal_matching(g, caps))


# -- independence and covers --------------------------------------------------


def maximum_independent_set(
    g: Graph, caps: Optional[Caps] = None
) -> tuple[str, ...]:
    _check_caps(g, caps, "maximum_independent_set")
    adj = g.adjacency_masks()
    n = g.n_vertices
    best: list[int] = []

    def recurse(candidates: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        if not candidates:
            return
        if len(chosen) + bin(candidates).count("1") <= len(best):
            return
        # pivot on the candidate of largest degree within candidates
        pivot, pivot_deg = -1, -1
        live = candidates
        while live:
            v = (live & -live).bit_length() - 1
            live &= live - 1
            deg = bin(adj[v] & candidates).count("1")
            if deg > pivot_deg:
                pivot, pivot_deg = v, deg
        chosen.append(pivot)
        recurse(candidates & ~adj[pivot] & ~(1 << pivot), chosen)
        chosen.pop()
        recurse(candidates & ~(1 << pivot), chosen)

    recurse((1 << n) - 1, [])
    return tuple(g.vertices[i] for i in sorted(best))


def independence_number(g: Graph, caps: Optional[Caps] = None) -> int:
    return len(maximum_independent_set(g, caps))


def _maximal_independent_sets(g: Graph) -> list[int]:
    """All maximal independent sets as bitmasks: maximal cliques of the
    complement via Bron-Kerbosch with pivoting."""
    adj = g.adjacency_masks()
    n = g.n_vertices
    out: list[int] = []
    comp_adj = [((1 << n) - 1) & ~adj[v] & ~(1 << v) for v in range(n)]

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = -1
        best_cover = -1
        live = p | x
        while live:
            v = (live & -live).bit_length() - 1
            live &= live - 1
            cover = bin(p & comp_adj[v]).count("1")
            if cover > best_cover:
                best_cover, pivot = cover, v
        live = p & ~comp_adj[pivot]
        while live:
            v = (live & -live).bit_length() - 1
            live &= live - 1
            bk(r | (1 << v), p & comp_adj[v], x & comp_adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, (1 << n) - 1, 0)
    return out


def minimal_vertex_covers(
    g: Graph, caps: Optional[Caps] = None
) -> list[tuple[str, ...]]:
    """All minimal vertex covers: complements of maximal independent sets.

    Each cover is in vertex order; the list is ordered lexicographically by
    vertex index sequence.
    """
    _check_caps(g, caps, "minimal_vertex_covers")
    n = g.n_vertices
    full = (1 << n) - 1
    covers = []
    for s in _maximal_independent_sets(g):
        mask = full & ~s
        covers.append(
            tuple(g.vertices[i] for i in range(n) if (mask >> i) & 1)
        )
    covers.sort(key=lambda c: tuple(g.index(v) for v in c))
    return covers


def is_unmixed(g: Graph, caps: Optional[Caps] = None) -> bool:
    """True when all minimal vertex covers share one cardinality."""
    covers = minimal_vertex_covers(g, caps)
    return len({len(c) for c in covers}) <= 1


# -- dominating induced matchings and forbidden subgraphs ---------------------


def dominating_induced_matching(
    g: Graph, caps: Optional[Caps] = None
) -> Optional[tuple[Edge, ...]]:
    """An induced matching that is also maximal as a matching, if one exists."""
    _check_caps(g, caps, "dominating_induced_matching")
    conflicts = _conflict_masks(g)
    idx = _edge_indices(g)
    n_edges = len(idx)

    def covered_mask(chosen: list[int]) -> int:
        m = 0
        for i in chosen:
            a, b = idx[i]
            m |= (1 << a) | (1 << b)
        return m

    def is_maximal(covered: int) -> bool:
        for a, b in idx:
            if not ((covered >> a) & 1 or (covered >> b) & 1):
                return False
        return True

    def recurse(allowed: int, lowest: int, chosen: list[int]) -> Optional[list[int]]:
        if is_maximal(covered_mask(chosen)):
            return chosen.copy()
        live = allowed >> lowest
        i = lowest
        while live:
            if live & 1:
                chosen.append(i)
                got = recurse(allowed & ~conflicts[i] & ~(1 << i), i + 1, chosen)
                chosen.pop()
                if got is not None:
                    return got
            live >>= 1
            i += 1
        return None

    if n_edges == 0:
        return ()
    got = recurse((1 << n_edges) - 1, 0, [])
    if got is None:
        return None
    return tuple(g.edges[i] for i in sorted(got))


def has_dominating_induced_matching(g: Graph, caps: Optional[Caps] = None) -> bool:
    return dominating_induced_matching(g, caps) is not None


def find_induced_path(g: Graph, k: int) -> Optional[tuple[str, ...]]:
    """An induced path on exactly k vertices, if one exists; k >= 2."""
    if k < 2:
        raise ValueError(f"induced path length must be at least 2, got {k}")
    adj = g.adjacency_masks()
    n = g.n_vertices
    if k > n:
        return None

    def extend(pathv: list[int], used: int, blocked: int) -> Optional[list[int]]:
        if len(pathv) == k:
            return pathv.copy()
        last = pathv[-1]
        cand = adj[last] & ~used & ~blocked
        live = cand
        while live:
            v = (live & -live).bit_length() - 1
            live &= live - 1
            pathv.append(v)
            # future vertices may not touch any current vertex except v
            got = extend(pathv, used | (1 << v), (blocked | adj[last]) & ~(1 << v))
            pathv.pop()
            if got is not None:
                return got
        return None

    for start in range(n):
        got = extend([start], 1 << start, 0)
        if got is not None:
            return tuple(g.vertices[i] for i in got)
    return None


def is_pk_free(g: Graph, k: int) -> bool:
    """No induced path on k vertices; k >= 2."""
    return find_induced_path(g, k) is None


def is_nk2_free(g: Graph, n: int, caps: Optional[Caps] = None) -> bool:
    """No induced disjoint union of n edges."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return induced_matching_number(g, caps) < n


# -- definition-literal checkers ----------------------------------------------


def is_matching(g: Graph, edges: Sequence[Edge]) -> bool:
    seen: set[str] = set()
    for u, v in edges:
        if not g.has_edge(u, v):
            return False
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def is_maximal_matching(g: Graph, edges: Sequence[Edge]) -> bool:
    if not is_matching(g, edges):
        return False
    covered = {v for e in edges for v in e}
    return all(u in covered or v in covered for u, v in g.edges)


def is_induced_matching(g: Graph, edges: Sequence[Edge]) -> bool:
    if not is_matching(g, edges):
        return False
    for i, (a, b) in enumerate(edges):
        for c, d in list(edges)[i + 1 :]:
            for x in (a, b):
                for y in (c, d):
                    if g.has_edge(x, y):
                        return False
    return True


def is_independent_set(g: Graph, vertices: Sequence[str]) -> bool:
    vs = list(vertices)
    for i, u in enumerate(vs):
        if not g.has_vertex(u):
            return False
        for v in vs[i + 1 :]:
            if g.has_edge(u, v):
                return False
    return True


def is_vertex_cover(g: Graph, vertices: Sequence[str]) -> bool:
    s = set(vertices)
    return all(u in s or v in s for u, v in g.edges)


def is_minimal_vertex_cover(g: Graph, vertices: Sequence[str]) -> bool:
    if not is_vertex_cover(g, vertices):
        return False
    s = set(vertices)
    return all(not is_vertex_cover(g, sorted(s - {v})) for v in s)


def is_dominating_induced_matching_set(g: Graph, edges: Sequence[Edge]) -> bool:
    return is_induced_matching(g, edges) and is_maximal_matching(g, edges)
