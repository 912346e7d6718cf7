"""Graph and tree containers plus the BFS machinery everything else uses.

Vertices are dense ids ``0..n-1`` and adjacency is stored in CSR form
(``indptr``/``indices`` numpy arrays) so traversals stay linear at 10**6
vertices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

#: Distance reported for vertices that cannot be reached from the source.
INFINITY = int(np.iinfo(np.int64).max)


class GraphError(ValueError):
    """Invalid graph input. ``position`` is the offending token index, if known."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (token {position})"
        super().__init__(message)
        self.position = position


class NotATreeError(GraphError):
    pass


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph in CSR form. Build with :meth:`from_edges`."""

    n: int
    indptr: np.ndarray
    indices: np.ndarray

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] | np.ndarray) -> "Graph":
        arr = np.asarray(edges, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise GraphError("edges must be pairs of vertex ids")
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        _check_edges(n, arr)
        return cls._from_checked(n, arr)

    @classmethod
    def _from_checked(cls, n: int, arr: np.ndarray) -> "Graph":
        src = np.concatenate([arr[:, 0], arr[:, 1]])
        dst = np.concatenate([arr[:, 1], arr[:, 0]])
        order = np.lexsort((dst, src))
        indices = dst[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(n, _frozen(indptr), _frozen(indices))

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int | None = None):
        """Degree of ``v``, or the whole degree array when ``v`` is omitted."""
        if v is None:
            return np.diff(self.indptr)
        return int(self.indptr[v + 1] - self.indptr[v])

    @property
    def adjacency(self) -> list[list[int]]:
        return [self.neighbors(v).tolist() for v in range(self.n)]

    def edges(self) -> np.ndarray:
        """Edge array of shape ``(m, 2)`` with ``u < v`` in each row."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
        keep = src < self.indices
        return np.column_stack([src[keep], self.indices[keep]])

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False)
class Tree:
    """A connected acyclic :class:`Graph`; obtain one via :func:`validate_tree`."""

    graph: Graph

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def adjacency(self) -> list[list[int]]:
        return self.graph.adjacency

    def neighbors(self, v: int) -> np.ndarray:
        return self.graph.neighbors(v)

    def degree(self, v: int | None = None):
        return self.graph.degree(v)

    def __repr__(self) -> str:
        return f"Tree(n={self.n})"


@dataclass(frozen=True)
class ComponentSet:
    """Components of ``T - {pivot}``, deepest first (ties: smallest member id)."""

    pivot: int
    components: tuple[frozenset[int], ...]
    border: tuple[tuple[int, ...], ...]
    reach: tuple[int, ...]


@dataclass(frozen=True)
class CenterInfo:
    centers: tuple[int, ...]
    radius: int
    diameter: int
    diameter_path: tuple[int, ...]


def _check_edges(n: int, arr: np.ndarray, token_base: int | None = None) -> None:
    # token_base: token index of arr[0, 0] in the source text, for error messages
    def pos(row: int, col: int = 0) -> int | None:
        return None if token_base is None else token_base + 2 * row + col

    bad = (arr < 0) | (arr >= n)
    if bad.any():
        flat = int(np.flatnonzero(bad.ravel())[0])
        row, col = divmod(flat, 2)
        raise GraphError(f"vertex id {int(arr[row, col])} out of range [0, {n})", pos(row, col))
    loops = np.flatnonzero(arr[:, 0] == arr[:, 1])
    if len(loops):
        row = int(loops[0])
        raise GraphError(f"self-loop at vertex {int(arr[row, 0])}", pos(row))
    if len(arr) > 1:
        key = np.minimum(arr[:, 0], arr[:, 1]) * n + np.maximum(arr[:, 0], arr[:, 1])
        order = np.argsort(key, kind="stable")
        dup = np.flatnonzero(key[order][1:] == key[order][:-1])
        if len(dup):
            row = int(order[dup + 1].min())
            u, v = sorted(arr[row].tolist())
            raise GraphError(f"duplicate edge {u}-{v}", pos(row))


_INT_TOKEN = re.compile(r"[+-]?\d+\Z")


def _tokens(text: str) -> list[str]:
    lines = (ln for ln in text.splitlines() if not ln.lstrip().startswith("#"))
    return " ".join(lines).split()


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` followed by whitespace-separated ``u v`` pairs.

    Lines whose first non-blank character is ``#`` are comments. Errors carry
    the 0-based index of the offending token.
    """
    tokens = _tokens(text)
    if not tokens:
        raise GraphError("empty input: expected vertex count", 0)
    try:
        values = np.array(tokens, dtype=np.int64)
    except (ValueError, OverflowError):
        for i, tok in enumerate(tokens):
            if not _INT_TOKEN.match(tok):
                raise GraphError(f"malformed token {tok!r}", i) from None
        raise GraphError("integer token out of range") from None
    n = int(values[0])
    if n < 0:
        raise GraphError("vertex count must be non-negative", 0)
    body = values[1:]
    if len(body) % 2:
        raise GraphError("dangling vertex id without a partner", len(tokens) - 1)
    arr = body.reshape(-1, 2)
    _check_edges(n, arr, token_base=1)
    return Graph._from_checked(n, arr)


def format_edge_list(g: Graph | Tree) -> str:
    graph = g.graph if isinstance(g, Tree) else g
    lines = [str(graph.n)]
    lines.extend(f"{u} {v}" for u, v in graph.edges().tolist())
    return "\n".join(lines) + "\n"


def validate_tree(g: Graph) -> Tree:
    if isinstance(g, Tree):
        return g
    if g.n == 0:
        raise NotATreeError("empty graph has no vertices")
    if g.m >= g.n:
        raise NotATreeError(f"cycle present: {g.m} edges on {g.n} vertices")
    dist, _, _ = _kernels.bfs(g.indptr, g.indices, 0)
    unreached = np.flatnonzero(dist < 0)
    if len(unreached):
        raise NotATreeError(f"disconnected: vertex {int(unreached[0])} unreachable from 0")
    return Tree(g)


def _as_graph(g: Graph | Tree) -> Graph:
    return g.graph if isinstance(g, Tree) else g


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range [0, {g.n})")


def bfs_distances(g: Graph | Tree, src: int, *, parents: bool = False):
    """Hop distances from ``src``; unreachable vertices get :data:`INFINITY`.

    With ``parents=True`` returns ``(dist, parent)`` where ``parent[src]`` and
    unreached entries are ``-1``.
    """
    graph = _as_graph(g)
    _check_vertex(graph, src)
    dist, parent, _ = _kernels.bfs(graph.indptr, graph.indices, src)
    dist[dist < 0] = INFINITY
    return (dist, parent) if parents else dist


def eccentricity(g: Graph | Tree, v: int) -> int:
    return int(bfs_distances(g, v).max())


def tree_path(parent: np.ndarray, target: int) -> list[int]:
    """Walk parent pointers from ``target`` back to the BFS source; returns source-first."""
    path = [target]
    while parent[path[-1]] != _kernels.NO_VERTEX:
        path.append(int(parent[path[-1]]))
    path.reverse()
    return path


def center_and_radius(t: Tree) -> CenterInfo:
    g = t.graph
    dist0, _, _ = _kernels.bfs(g.indptr, g.indices, 0)
    u = int(np.argmax(dist0))
    dist_u, parent_u, _ = _kernels.bfs(g.indptr, g.indices, u)
    w = int(np.argmax(dist_u))
    diameter = int(dist_u[w])
    path = tree_path(parent_u, w)
    if diameter % 2:
        centers = tuple(sorted((path[diameter // 2], path[diameter // 2 + 1])))
    else:
        centers = (path[diameter // 2],)
    return CenterInfo(centers, (diameter + 1) // 2, diameter, tuple(path))


def is_path(t: Tree) -> bool:
    return t.n == 0 or bool(t.degree().max(initial=0) <= 2)


def path_order(t: Tree) -> list[int]:
    """Vertices of a path tree listed end to end, starting at the smaller-id end."""
    if not is_path(t):
        raise NotATreeError("tree is not a path")
    if t.n == 1:
        return [0]
    deg = t.degree()
    start = int(np.flatnonzero(deg == 1)[0])
    _, _, order = _kernels.bfs(t.graph.indptr, t.graph.indices, start)
    return order.tolist()


def components_minus_vertex(t: Tree, v: int) -> ComponentSet:
    g = t.graph
    _check_vertex(g, v)
    dist, hop = _kernels.bfs_first_hop(g.indptr, g.indices, v)
    groups: dict[int, list[int]] = {int(u): [] for u in g.neighbors(v)}
    reach = dict.fromkeys(groups, 0)
    for u, h in enumerate(hop.tolist()):
        if h >= 0:
            groups[h].append(u)
            if dist[u] > reach[h]:
                reach[h] = int(dist[u])
    keys = sorted(groups, key=lambda h: (-reach[h], min(groups[h])))
    return ComponentSet(
        pivot=v,
        components=tuple(frozenset(groups[h]) for h in keys),
        border=tuple((h,) for h in keys),
        reach=tuple(reach[h] for h in keys),
    )
