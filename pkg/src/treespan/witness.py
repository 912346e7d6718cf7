"""Witness walk pairs: construction, verification and switch detection.

A walk is a vertex sequence where consecutive entries are equal (a stall) or
adjacent. Time steps in reports and certificates are 1-based, matching how
positions along the time path are usually numbered.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels
from .graph_core import Graph, Tree, bfs_distances, components_minus_vertex, path_order, tree_path
from .tree_span import strong_vertex_span

APSP_LIMIT = 2000


@dataclass(frozen=True)
class WalkPair:
    """Two equal-length walks; ``a`` is Alice's and ``b`` is Bob's."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.a) != len(self.b):
            raise ValueError(f"walk lengths differ: {len(self.a)} vs {len(self.b)}")
        if not self.a:
            raise ValueError("walks must have at least one step")

    def __len__(self) -> int:
        return len(self.a)

    def to_json(self, claimed_span: int) -> str:
        return json.dumps({"claimed_span": claimed_span, "A": list(self.a), "B": list(self.b)})

    @classmethod
    def from_json(cls, text: str) -> tuple["WalkPair", int]:
        data = json.loads(text)
        if not isinstance(data, dict) or not {"claimed_span", "A", "B"} <= data.keys():
            raise ValueError('walk JSON needs "claimed_span", "A" and "B"')
        return cls(tuple(data["A"]), tuple(data["B"])), int(data["claimed_span"])


@dataclass(frozen=True)
class VerifyReport:
    valid_a: bool
    valid_b: bool
    surjective_a: bool
    surjective_b: bool
    min_distance: int | None
    claimed: int
    first_violation: tuple[int, str] | None

    @property
    def passed(self) -> bool:
        return (
            self.valid_a
            and self.valid_b
            and self.surjective_a
            and self.surjective_b
            and self.min_distance is not None
            and self.min_distance >= self.claimed
        )


@dataclass(frozen=True)
class SwitchCertificate:
    """``b`` switches with ``a`` at ``v``.

    Components of ``T - {v}`` are identified by their border vertex, the
    unique neighbor of ``v`` inside them.
    """

    v: int
    i: int
    j: int
    alpha: int
    beta: int
    gamma: int


# -- construction -----------------------------------------------------------


def _closed_tour(t: Tree, start: int, allowed: np.ndarray) -> list[int]:
    """DFS walk from ``start`` over the subtree induced by ``allowed``, returning to ``start``."""
    walk = [start]
    seen = {start}
    stack = [(start, iter(t.neighbors(start).tolist()))]
    while stack:
        v, it = stack[-1]
        for u in it:
            if allowed[u] and u not in seen:
                seen.add(u)
                walk.append(u)
                stack.append((u, iter(t.neighbors(u).tolist())))
                break
        else:
            stack.pop()
            if stack:
                walk.append(stack[-1][0])
    return walk


def _route(parent_from_hub: np.ndarray, x: int, y: int) -> list[int]:
    """Path ``x -> hub -> y`` using BFS parents rooted at the hub."""
    return tree_path(parent_from_hub, x)[::-1] + tree_path(parent_from_hub, y)[1:]


class _Recorder:
    def __init__(self, a: int, b: int):
        self.a = [a]
        self.b = [b]

    def move_a(self, walk: list[int]) -> None:
        self._move(self.a, self.b, walk)

    def move_b(self, walk: list[int]) -> None:
        self._move(self.b, self.a, walk)

    @staticmethod
    def _move(mover: list[int], idle: list[int], walk: list[int]) -> None:
        assert walk[0] == mover[-1]
        mover.extend(walk[1:])
        idle.extend([idle[-1]] * (len(walk) - 1))


def _path_witness(t: Tree) -> WalkPair:
    order = path_order(t)
    n = len(order)
    a = list(order)
    b = order[::-1]
    if n % 2:
        # an odd path would put both walkers on the middle vertex at once;
        # delaying Bob by one step makes them swap across an edge instead
        b = [b[0], *b]
        a = [*a, a[-1]]
    return WalkPair(tuple(a), tuple(b))


def build_witness(t: Tree) -> tuple[WalkPair, int]:
    """Walk pair on ``t`` keeping distance equal to the strong vertex span.

    Around a vertex ``v`` of maximum triod size, Alice parks at the end of
    the deepest branch while Bob sweeps everything else, Alice then crosses
    to the third branch and Bob sweeps the deepest one. The roles then swap
    so Alice covers the tree too.
    """
    result = strong_vertex_span(t)
    if result.kind == "trivial":
        return WalkPair((0,), (0,)), 0
    if result.kind == "path":
        return _path_witness(t), 1

    v = result.witness_vertex
    depth = result.eta
    comps = components_minus_vertex(t, v)
    dist, parent = bfs_distances(t, v, parents=True)
    v1, v2, v3 = (min(u for u in comps.components[j] if dist[u] == depth) for j in range(3))

    in_first = np.zeros(t.n, dtype=bool)
    in_first[list(comps.components[0])] = True
    rest = ~in_first
    first_closure = in_first.copy()
    first_closure[v] = True

    rec = _Recorder(v1, v2)
    rec.move_b(_closed_tour(t, v2, rest))
    rec.move_a(_route(parent, v1, v3))
    rec.move_b(_route(parent, v2, v)[:-1] + _closed_tour(t, v, first_closure) + _route(parent, v, v1)[1:])
    rec.move_a(_closed_tour(t, v3, rest))
    rec.move_b(_route(parent, v1, v2))
    rec.move_a(_route(parent, v3, v)[:-1] + _closed_tour(t, v, first_closure))
    return WalkPair(tuple(rec.a), tuple(rec.b)), depth


# -- verification -----------------------------------------------------------


class _Distances:
    """Pairwise distance lookup: a full matrix for small graphs, cached BFS rows otherwise."""

    def __init__(self, g: Graph):
        self.g = g
        self.matrix = None
        self.rows: dict[int, np.ndarray] = {}
        if g.n <= APSP_LIMIT:
            self.matrix = np.stack([bfs_distances(g, s) for s in range(g.n)]) if g.n else None

    def __call__(self, x: int, y: int) -> int:
        if self.matrix is not None:
            return int(self.matrix[x, y])
        row = self.rows.get(x)
        if row is None:
            row = self.rows[x] = bfs_distances(self.g, x)
        return int(row[y])


def _first_bad_step(g: Graph, walk: Sequence[int]) -> int | None:
    for t in range(1, len(walk)):
        x, y = walk[t - 1], walk[t]
        if x != y and not g.has_edge(x, y):
            return t + 1
    return None


def verify_walk_pair(g: Graph | Tree, w: WalkPair, claimed: int) -> VerifyReport:
    """Check both walks are weak homomorphisms onto ``g`` and measure their separation."""
    graph = g.graph if isinstance(g, Tree) else g
    for label, walk in (("A", w.a), ("B", w.b)):
        for x in walk:
            if not 0 <= x < graph.n:
                raise IndexError(f"walk {label} uses vertex {x} outside [0, {graph.n})")

    violations: list[tuple[int, str]] = []
    bad_a = _first_bad_step(graph, w.a)
    bad_b = _first_bad_step(graph, w.b)
    if bad_a is not None:
        violations.append((bad_a, f"A jumps {w.a[bad_a - 2]}->{w.a[bad_a - 1]} along a non-edge"))
    if bad_b is not None:
        violations.append((bad_b, f"B jumps {w.b[bad_b - 2]}->{w.b[bad_b - 1]} along a non-edge"))
    surj_a = len(set(w.a)) == graph.n
    surj_b = len(set(w.b)) == graph.n

    min_distance = None
    if bad_a is None and bad_b is None:
        d = _Distances(graph)
        seps = [d(x, y) for x, y in zip(w.a, w.b)]
        min_distance = min(seps)
        if min_distance < claimed:
            step = next(i for i, s in enumerate(seps, 1) if s < claimed)
            violations.append((step, f"distance {seps[step - 1]} below claimed {claimed}"))
    if not surj_a:
        violations.append((len(w), "A is not surjective"))
    if not surj_b:
        violations.append((len(w), "B is not surjective"))

    first = min(violations) if violations else None
    return VerifyReport(bad_a is None, bad_b is None, surj_a, surj_b, min_distance, claimed, first)


def edge_coverage(t: Tree, walk: Sequence[int]) -> bool:
    """Whether every edge of ``t`` is traversed by some step of ``walk``."""
    used = {(min(x, y), max(x, y)) for x, y in zip(walk, walk[1:]) if x != y}
    return all((u, v) in used for u, v in t.graph.edges().tolist())


# -- switching --------------------------------------------------------------


def detect_switch(t: Tree, w: WalkPair, v: int) -> SwitchCertificate | None:
    """First certificate that ``b`` switches with ``a`` at ``v``, or ``None``.

    Picks the smallest ``j`` admitting a certificate and, for that ``j``, the
    largest ``i``. Call with the walks exchanged to test ``a`` switching
    with ``b``.
    """
    g = t.graph
    _, comp = _kernels.bfs_first_hop(g.indptr, g.indices, v)
    comp = comp.tolist()
    a, b = w.a, w.b
    last_visit = -1  # 0-based index of Bob's previous visit to v
    for j in range(len(w)):
        if b[j] != v:
            continue
        gamma = comp[a[j]]
        if gamma >= 0 and j - 1 > last_visit:
            beta = comp[b[j - 1]]
            for i in range(j - 1, last_visit, -1):
                if comp[b[i]] != beta:
                    # Bob changed branch without passing v: not a valid walk
                    break
                alpha = comp[a[i]]
                if alpha >= 0 and len({alpha, beta, gamma}) == 3:
                    return SwitchCertificate(v, i + 1, j + 1, alpha, beta, gamma)
        last_visit = j
    return None
