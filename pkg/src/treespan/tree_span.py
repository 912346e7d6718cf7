"""Strong vertex and edge span of trees in linear time.

For a non-path tree the span is the largest *triod size* over all vertices:
the reach of the third-deepest branch hanging off a vertex of degree at least
three. Rooting the tree at a central vertex means the deepest branch of every
other vertex is the one through its parent, so a single post-order pass that
keeps the top three branch depths per vertex (with the parent side stood in by
the radius) produces every triod size at once.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Literal

import numpy as np

from . import _kernels
from .graph_core import Tree, center_and_radius, eccentricity, is_path

SpanKind = Literal["trivial", "path", "triod"]


class InvariantViolation(AssertionError):
    """An internal guarantee of the algorithm did not hold; always a bug."""


@dataclass(frozen=True, eq=False)
class ReachTable:
    """Per-vertex branch-depth accumulators from :func:`height_scan`.

    For ``v != root``: ``r1[v]`` is the radius guard standing in for the
    parent-side branch, ``r2[v]`` the height of the subtree under ``v`` and
    ``r3[v]`` the triod size of ``v``. At the root all three are genuine top-3
    branch depths and ``r1[root]`` equals the radius.
    """

    root: int
    radius: int
    parent: np.ndarray
    r1: np.ndarray
    r2: np.ndarray
    r3: np.ndarray
    order: np.ndarray

    def subtree_height(self, v: int) -> int:
        return int(self.r1[v] if v == self.root else self.r2[v])


@dataclass(frozen=True)
class SpanResult:
    span: int
    kind: SpanKind
    witness_vertex: int | None
    eta: int
    radius: int

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "SpanResult":
        wv = data["witness_vertex"]
        return cls(
            span=int(data["span"]),
            kind=data["kind"],
            witness_vertex=None if wv is None else int(wv),
            eta=int(data["eta"]),
            radius=int(data["radius"]),
        )


def height_scan(t: Tree, c: int, *, radius: int | None = None) -> ReachTable:
    """Run the guarded top-3 height scan on ``t`` rooted at the central vertex ``c``.

    ``radius`` may be passed when already known; otherwise it is computed and
    ``c`` is checked to be a center. Raises :class:`InvariantViolation` if a
    child branch of a non-root vertex ever reaches the radius guard.
    """
    if radius is None:
        radius = center_and_radius(t).radius
        if eccentricity(t, c) != radius:
            raise ValueError(f"vertex {c} is not a center of the tree")
    g = t.graph
    parent, r1, r2, r3, order, bad = _kernels.height_scan(g.indptr, g.indices, c, radius)
    if bad != _kernels.NO_VERTEX:
        raise InvariantViolation(
            f"child branch at non-root vertex {bad} reached the radius guard {radius}"
        )
    for a in (parent, r1, r2, r3, order):
        a.setflags(write=False)
    return ReachTable(c, radius, parent, r1, r2, r3, order)


def eta(table: ReachTable, v: int) -> int:
    """Triod size of ``v``; zero whenever ``deg(v) < 3``."""
    return int(table.r3[v])


def _scan(t: Tree) -> ReachTable:
    info = center_and_radius(t)
    return height_scan(t, info.centers[0], radius=info.radius)


def tree_triod_size(t: Tree) -> tuple[int, int]:
    """``(max triod size, smallest vertex attaining it)``."""
    table = _scan(t)
    v = int(np.argmax(table.r3))
    return int(table.r3[v]), v


def strong_vertex_span(t: Tree) -> SpanResult:
    n = t.n
    if n == 1:
        return SpanResult(0, "trivial", None, 0, 0)
    if is_path(t):
        return SpanResult(1, "path", None, 0, n // 2)
    table = _scan(t)
    v = int(np.argmax(table.r3))
    value = int(table.r3[v])
    return SpanResult(value, "triod", v, value, table.radius)


def strong_edge_span(t: Tree) -> SpanResult:
    """Strong edge span of ``t``.

    On a tree a walk visits every vertex exactly when it traverses every edge,
    so this coincides with :func:`strong_vertex_span`.
    """
    return strong_vertex_span(t)


def brute_triod_size(t: Tree) -> int:
    """Largest triod size by direct enumeration of ``T - {v}`` for every ``v``.

    Quadratic; deliberately shares nothing with :func:`height_scan`.
    """
    return int(max(_brute_etas(t), default=0))


def _brute_etas(t: Tree) -> np.ndarray:
    g = t.graph
    deg = g.degree()
    out = np.zeros(t.n, dtype=np.int64)
    for v in np.flatnonzero(deg >= 3).tolist():
        reaches = _kernels.neighbor_reaches(g.indptr, g.indices, v)
        out[v] = np.sort(reaches)[-3]
    return out


def max_eta_vertices(t: Tree, *, brute: bool = False) -> frozenset[int]:
    """All vertices whose triod size equals the tree's maximum."""
    etas = _brute_etas(t) if brute else _scan(t).r3
    return frozenset(np.flatnonzero(etas == etas.max()).tolist())
