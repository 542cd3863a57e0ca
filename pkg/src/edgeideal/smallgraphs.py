"""Exhaustive enumeration of small graphs up to isomorphism.

Graphs are generated by vertex extension: every graph on n vertices arises
from some graph on n-1 vertices by attaching one new vertex to a subset of
the old ones, so extending every (n-1)-vertex representative by every
subset and keeping one graph per canonical form is exhaustive.  The
canonical form of an adjacency matrix is the minimum, over all vertex
permutations, of its upper-triangle bit vector read as an integer; the
permutation action is evaluated with precomputed numpy index tables.

Trees use the same scheme restricted to leaf attachment, and forests are
assembled as multisets of trees (so they never carry isolated vertices,
which no invariant here depends on).
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Tuple

import numpy as np

from .families import disjoint_union
from .graphs import Graph, is_bipartite

MAX_GRAPH_VERTICES = 7
MAX_TREE_VERTICES = 8
MAX_FOREST_EDGES = 7

_perm_cache: Dict[int, Tuple[np.ndarray, np.ndarray, np.ndarray]] = {}
_graph_cache: Dict[Tuple[str, int], List[Graph]] = {}
_key_cache: Dict[Tuple[str, int], Dict[int, np.ndarray]] = {}


def _perm_tables(n: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Row/column gather indices for every permutation, plus bit weights.

    rows[p, k] and cols[p, k] give the source cell of upper-triangle slot k
    under permutation p, so adj[rows, cols] lists each permuted graph's edge
    bits in one fancy-indexing call.
    """
    if n not in _perm_cache:
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
        iu, ju = np.triu_indices(n, 1)
        rows = perms[:, iu]
        cols = perms[:, ju]
        weights = np.int64(1) << np.arange(len(iu) - 1, -1, -1, dtype=np.int64)
        _perm_cache[n] = (rows, cols, weights)
    return _perm_cache[n]


def _canonical_keys(stack: np.ndarray) -> np.ndarray:
    """Canonical integer key of each adjacency matrix in a (m, n, n) stack."""
    n = stack.shape[-1]
    if n < 2:
        return np.zeros(stack.shape[0], dtype=np.int64)
    rows, cols, weights = _perm_tables(n)
    bits = stack[:, rows, cols].astype(np.int64)
    return (bits @ weights).min(axis=1)


def _adjacency_from_key(n: int, key: int) -> np.ndarray:
    adj = np.zeros((n, n), dtype=bool)
    iu, ju = np.triu_indices(n, 1)
    for slot in range(len(iu)):
        if (key >> (len(iu) - 1 - slot)) & 1:
            i, j = int(iu[slot]), int(ju[slot])
            adj[i, j] = adj[j, i] = True
    return adj


def _graph_from_adjacency(adj: np.ndarray) -> Graph:
    n = adj.shape[0]
    vertices = tuple(f"x{i + 1}" for i in range(n))
    edges = tuple(
        (vertices[i], vertices[j])
        for i in range(n)
        for j in range(i + 1, n)
        if adj[i, j]
    )
    return Graph(vertices, edges)


def _extend_all(level: Dict[int, np.ndarray], n: int) -> Dict[int, np.ndarray]:
    """All canonical graphs on n vertices from those on n - 1."""
    out: Dict[int, np.ndarray] = {}
    subsets = np.arange(1 << (n - 1), dtype=np.int64)
    attach = (subsets[:, None] >> np.arange(n - 1)) & 1
    for adj in level.values():
        stack = np.zeros((len(subsets), n, n), dtype=bool)
        stack[:, : n - 1, : n - 1] = adj
        stack[:, n - 1, : n - 1] = attach
        stack[:, : n - 1, n - 1] = attach
        for key in _canonical_keys(stack):
            k = int(key)
            if k not in out:
                out[k] = _adjacency_from_key(n, k)
    return out


def _extend_trees(level: Dict[int, np.ndarray], n: int) -> Dict[int, np.ndarray]:
    """All canonical trees on n vertices by hanging a leaf on each vertex."""
    out: Dict[int, np.ndarray] = {}
    for adj in level.values():
        stack = np.zeros((n - 1, n, n), dtype=bool)
        stack[:, : n - 1, : n - 1] = adj
        idx = np.arange(n - 1)
        stack[idx, n - 1, idx] = True
        stack[idx, idx, n - 1] = True
        for key in _canonical_keys(stack):
            k = int(key)
            if k not in out:
                out[k] = _adjacency_from_key(n, k)
    return out


def _levels(kind: str, n: int) -> Dict[int, np.ndarray]:
    found = _key_cache.get((kind, n))
    if found is not None:
        return found
    if n == 1:
        level: Dict[int, np.ndarray] = {0: np.zeros((1, 1), dtype=bool)}
    elif kind == "graphs":
        level = _extend_all(_levels(kind, n - 1), n)
    else:
        level = _extend_trees(_levels(kind, n - 1), n)
    _key_cache[(kind, n)] = level
    return level


def _materialize(kind: str, n: int) -> List[Graph]:
    cached = _graph_cache.get((kind, n))
    if cached is None:
        level = _levels(kind, n)
        graphs = [_graph_from_adjacency(adj) for adj in level.values()]
        cached = sorted(graphs, key=lambda g: (g.n_edges, g.edges))
        _graph_cache[(kind, n)] = cached
    return cached


def all_graphs(n: int) -> List[Graph]:
    """Every graph on n vertices, one per isomorphism class.

    Vertices are labeled x1..xn; output order is deterministic (by edge
    count, then edge list).  n is capped because the permutation tables
    grow factorially.
    """
    if not 1 <= n <= MAX_GRAPH_VERTICES:
        raise ValueError(
            f"graph enumeration supports 1..{MAX_GRAPH_VERTICES} vertices, got {n}"
        )
    return list(_materialize("graphs", n))


def connected_graphs(n: int) -> List[Graph]:
    """Connected graphs on n vertices up to isomorphism."""
    return [g for g in all_graphs(n) if g.is_connected()]


def connected_bipartite_graphs(n: int) -> List[Graph]:
    """Connected bipartite graphs on n vertices up to isomorphism."""
    return [g for g in all_graphs(n) if g.is_connected() and is_bipartite(g)]


def trees(n: int) -> List[Graph]:
    """Trees on n vertices up to isomorphism.

    The tree cap is one vertex higher than the general cap: leaf extension
    only produces n - 1 candidates per parent, so n = 8 stays cheap.
    """
    if not 1 <= n <= MAX_TREE_VERTICES:
        raise ValueError(
            f"tree enumeration supports 1..{MAX_TREE_VERTICES} vertices, got {n}"
        )
    return list(_materialize("trees", n))


def forests(max_edges: int) -> List[Graph]:
    """Nonempty forests with at most max_edges edges, up to isomorphism.

    A forest is a multiset of trees; isolated vertices are omitted since
    they change no edge-ideal invariant.  Output labels are x1..xN per
    graph, in deterministic order.
    """
    if not 1 <= max_edges <= MAX_FOREST_EDGES:
        raise ValueError(
            f"forest enumeration supports 1..{MAX_FOREST_EDGES} edges, got {max_edges}"
        )
    pool: List[Tuple[int, Graph]] = []
    for k in range(1, max_edges + 1):
        for t in trees(k + 1):
            pool.append((k, t))

    out: List[Graph] = []

    def grow(start: int, budget: int, parts: List[Graph]) -> None:
        if parts:
            out.append(disjoint_union(parts))
        for i in range(start, len(pool)):
            k, t = pool[i]
            if k > budget:
                break
            grow(i, budget - k, parts + [t])

    grow(0, max_edges, [])
    return sorted(out, key=lambda g: (g.n_edges, g.n_vertices, g.edges))


FAMILY_SPECS = ("graphs", "connected", "connected-bipartite", "trees", "forests")


def enumerate_family(spec: str) -> List[Graph]:
    """Resolve an enumeration spec like "connected-bipartite:6".

    Supported kinds: graphs:N, connected:N, connected-bipartite:N, trees:N
    (N = vertex count), forests:E (E = maximum edge count).
    """
    kind, sep, arg = spec.partition(":")
    if not sep or kind not in FAMILY_SPECS or not arg.isdigit():
        raise ValueError(
            f"bad enumeration spec {spec!r}; expected kind:size with kind in "
            + ", ".join(FAMILY_SPECS)
        )
    size = int(arg)
    if kind == "graphs":
        return all_graphs(size)
    if kind == "connected":
        return connected_graphs(size)
    if kind == "connected-bipartite":
        return connected_bipartite_graphs(size)
    if kind == "trees":
        return trees(size)
    return forests(size)
