"""Compiled inner loops.

Everything here works on CSR adjacency (``indptr``, ``indices``) and plain
integer arrays so numba can compile it in nopython mode. The public modules
wrap these with validation and friendlier return types.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NO_VERTEX = -1


@njit(cache=True)
def bfs(indptr, indices, src):
    """Return ``(dist, parent, order)``; unreached vertices keep ``dist == -1``."""
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, np.int64)
    parent = np.full(n, NO_VERTEX, np.int64)
    queue = np.empty(n, np.int64)
    queue[0] = src
    dist[src] = 0
    head = 0
    tail = 1
    while head < tail:
        v = queue[head]
        head += 1
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                parent[u] = v
                queue[tail] = u
                tail += 1
    return dist, parent, queue[:tail]


@njit(cache=True)
def bfs_first_hop(indptr, indices, src):
    """BFS from ``src`` tagging each vertex with the neighbor of ``src`` it hangs off.

    ``hop[src] == -1``. On a tree the tag identifies the component of
    ``T - {src}`` the vertex belongs to.
    """
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, np.int64)
    hop = np.full(n, NO_VERTEX, np.int64)
    queue = np.empty(n, np.int64)
    queue[0] = src
    dist[src] = 0
    head = 0
    tail = 1
    while head < tail:
        v = queue[head]
        head += 1
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                hop[u] = u if v == src else hop[v]
                queue[tail] = u
                tail += 1
    return dist, hop


@njit(cache=True)
def neighbor_reaches(indptr, indices, v):
    """Reach of every component of ``T - {v}``, listed in adjacency order of ``v``."""
    dist, hop = bfs_first_hop(indptr, indices, v)
    n = indptr.shape[0] - 1
    best = np.zeros(n, np.int64)
    for u in range(n):
        h = hop[u]
        if h >= 0 and dist[u] > best[h]:
            best[h] = dist[u]
    start = indptr[v]
    deg = indptr[v + 1] - start
    out = np.empty(deg, np.int64)
    for k in range(deg):
        out[k] = best[indices[start + k]]
    return out


@njit(cache=True)
def height_scan(indptr, indices, root, radius):
    """Guarded top-3 height scan rooted at a central vertex.

    Post-order DFS with an explicit stack. Non-root vertices start with
    ``r1 = radius`` as a guard standing in for the parent-side component, the
    root starts at 0. Each finished child of height ``h`` offers ``h + 1`` to
    its parent's top-3. Returns ``(parent, r1, r2, r3, order, bad)`` where
    ``bad`` is the first non-root vertex at which a child reached the guard
    (``-1`` when the guard held everywhere).
    """
    n = indptr.shape[0] - 1
    r1 = np.full(n, radius, np.int64)
    r1[root] = 0
    r2 = np.zeros(n, np.int64)
    r3 = np.zeros(n, np.int64)
    parent = np.full(n, NO_VERTEX, np.int64)
    visited = np.zeros(n, np.bool_)
    cursor = indptr[:-1].copy()
    stack = np.empty(n, np.int64)
    order = np.empty(n, np.int64)
    bad = NO_VERTEX

    stack[0] = root
    visited[root] = True
    top = 1
    done = 0
    while top > 0:
        v = stack[top - 1]
        k = cursor[v]
        if k < indptr[v + 1]:
            cursor[v] = k + 1
            u = indices[k]
            if not visited[u]:
                visited[u] = True
                parent[u] = v
                stack[top] = u
                top += 1
            continue

        top -= 1
        order[done] = v
        done += 1
        p = parent[v]
        if p == NO_VERTEX:
            continue
        h = r2[v]
        cand = h + 1
        if p != root and cand >= radius and bad == NO_VERTEX:
            bad = p
        if cand > r1[p]:
            r3[p] = r2[p]
            r2[p] = r1[p]
            r1[p] = cand
        elif cand > r2[p]:
            r3[p] = r2[p]
            r2[p] = cand
        elif cand > r3[p]:
            r3[p] = cand
    return parent, r1, r2, r3, order, bad


@njit(cache=True)
def prufer_decode(seq, n):
    """Linear-time Prüfer decoding; returns an ``(n - 1, 2)`` edge array."""
    degree = np.ones(n, np.int64)
    for x in seq:
        degree[x] += 1
    edges = np.empty((n - 1, 2), np.int64)
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    k = 0
    for x in seq:
        edges[k, 0] = leaf
        edges[k, 1] = x
        k += 1
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges[k, 0] = leaf
    edges[k, 1] = n - 1
    return edges
