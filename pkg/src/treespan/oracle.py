"""Brute-force strong vertex span of any small connected graph.

Two players walking simultaneously is one walk in the strong-product-like
pair graph: a node is a position pair ``(u, v)`` and each player either stays
or steps to a neighbor. Keeping distance at least ``k`` restricts the walk to
pairs with ``d(u, v) >= k``. A pair of covering walks exists exactly when one
connected component of that restricted pair graph projects onto every vertex
in both coordinates: any walk stays inside one component, and a walk through
a whole component visits every pair in it.

Nothing here is shared with the tree algorithm; BFS and component labeling
are separate on purpose.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .graph_core import Graph, GraphError, Tree

DEFAULT_CAP = 64


@dataclass(frozen=True, eq=False)
class ProductGraph:
    """Pairs at distance ``>= k`` with simultaneous-move adjacency.

    ``nodes`` holds the ``(u, v)`` pairs, ``adjacency`` is a symmetric sparse
    matrix over the ``n * n`` dense pair index ``u * n + v`` and
    ``component_id`` labels each row of ``nodes``.
    """

    n: int
    k: int
    nodes: np.ndarray
    adjacency: object
    component_id: np.ndarray


def _adjacency_lists(g: Graph | Tree) -> list[list[int]]:
    graph = g.graph if isinstance(g, Tree) else g
    return graph.adjacency


def all_pairs_distances(g: Graph | Tree) -> np.ndarray:
    adj = _adjacency_lists(g)
    n = len(adj)
    dist = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if row[y] < 0:
                    row[y] = row[x] + 1
                    queue.append(y)
        if (row < 0).any():
            raise GraphError("graph is disconnected")
    return dist


def _closed_arcs(adj: list[list[int]]) -> tuple[np.ndarray, np.ndarray]:
    src = [x for x, nb in enumerate(adj) for _ in range(len(nb) + 1)]
    dst = [y for x, nb in enumerate(adj) for y in [x, *nb]]
    return np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64)


def product_graph(g: Graph | Tree, k: int, dist: np.ndarray | None = None) -> ProductGraph:
    adj = _adjacency_lists(g)
    n = len(adj)
    if dist is None:
        dist = all_pairs_distances(g)
    src, dst = _closed_arcs(adj)
    # every combination of one closed-neighborhood move per player
    a_src, b_src = np.meshgrid(src, src, indexing="ij")
    a_dst, b_dst = np.meshgrid(dst, dst, indexing="ij")
    a_src, b_src, a_dst, b_dst = (x.ravel() for x in (a_src, b_src, a_dst, b_dst))
    keep = (dist[a_src, b_src] >= k) & (dist[a_dst, b_dst] >= k)
    keep &= (a_src != a_dst) | (b_src != b_dst)
    rows = a_src[keep] * n + b_src[keep]
    cols = a_dst[keep] * n + b_dst[keep]
    size = n * n
    adjacency = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size)).tocsr()

    u, v = np.nonzero(dist >= k)
    _, labels = connected_components(adjacency, directed=False)
    return ProductGraph(n, k, np.column_stack([u, v]), adjacency, labels[u * n + v])


def feasible_at(g: Graph | Tree, k: int, dist: np.ndarray | None = None) -> bool:
    """Can both players cover every vertex while staying at distance ``>= k``?"""
    pg = product_graph(g, k, dist)
    if len(pg.nodes) == 0:
        return False
    n = pg.n
    n_comp = int(pg.component_id.max()) + 1

    def covering(coord: int) -> np.ndarray:
        # components whose pairs show every vertex in this coordinate
        seen = np.unique(pg.component_id * n + pg.nodes[:, coord])
        return np.bincount(seen // n, minlength=n_comp) == n

    return bool((covering(0) & covering(1)).any())


def radius(dist: np.ndarray) -> int:
    return int(dist.max(axis=1).min())


def product_span_oracle(
    g: Graph | Tree, *, cap: int = DEFAULT_CAP, check_monotone: bool = False
) -> int:
    """Largest ``k`` for which :func:`feasible_at` holds, scanning down from the radius.

    With ``check_monotone`` every ``k`` below the answer is also checked to
    be feasible.
    """
    graph = g.graph if isinstance(g, Tree) else g
    if graph.n > cap:
        raise GraphError(f"oracle limited to n <= {cap}, got n={graph.n}")
    if graph.n == 0:
        raise GraphError("empty graph")
    dist = all_pairs_distances(graph)
    best = 0
    for k in range(radius(dist), 0, -1):
        if feasible_at(graph, k, dist):
            best = k
            break
    if check_monotone:
        for k in range(best, -1, -1):
            if not feasible_at(graph, k, dist):
                raise AssertionError(f"feasibility not monotone: k={k} fails below k={best}")
    return best
