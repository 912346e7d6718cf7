"""Tree generators: Prüfer decoding, uniform random trees, exhaustive enumeration
and a few named families used throughout the tests."""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .graph_core import Graph, GraphError, Tree

ENUMERATE_CAP = 8


def _tree(n: int, edges: np.ndarray) -> Tree:
    # generators only emit valid trees, so skip the connectivity BFS
    return Tree(Graph._from_checked(n, edges.reshape(-1, 2)))


def prufer_decode(seq: Sequence[int] | np.ndarray, n: int | None = None) -> Tree:
    """Labeled tree on ``len(seq) + 2`` vertices encoded by ``seq``."""
    arr = np.asarray(seq, dtype=np.int64).ravel()
    if n is None:
        n = len(arr) + 2
    if n < 1 or (n >= 2 and len(arr) != n - 2):
        raise GraphError(f"Prüfer sequence for n={n} must have length {max(n - 2, 0)}")
    if n == 1:
        return _tree(1, np.empty((0, 2), np.int64))
    if len(arr) and (arr.min() < 0 or arr.max() >= n):
        raise GraphError(f"Prüfer entries must lie in [0, {n})")
    return _tree(n, _kernels.prufer_decode(arr, n))


def random_tree(n: int, rng: np.random.Generator | int | None = None) -> Tree:
    """Uniform random labeled tree on ``n`` vertices."""
    rng = np.random.default_rng(rng)
    if n < 1:
        raise GraphError("tree needs at least one vertex")
    return prufer_decode(rng.integers(0, n, size=max(n - 2, 0)), n)


def enumerate_trees(n: int) -> Iterator[Tree]:
    """All ``n**(n-2)`` labeled trees on ``n`` vertices, in Prüfer order."""
    if n < 1:
        raise GraphError("tree needs at least one vertex")
    if n > ENUMERATE_CAP:
        raise GraphError(f"enumeration capped at n <= {ENUMERATE_CAP}")
    if n == 1:
        yield prufer_decode([], 1)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def path_tree(n: int) -> Tree:
    return _tree(n, np.column_stack([np.arange(n - 1), np.arange(1, n)]))


def star_tree(leaves: int) -> Tree:
    """``K_{1,leaves}`` with the hub at vertex 0."""
    return _tree(leaves + 1, np.column_stack([np.zeros(leaves, np.int64), np.arange(1, leaves + 1)]))


def spider_tree(legs: Sequence[int]) -> Tree:
    """Hub 0 with pendant paths of the given lengths, numbered leg by leg."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return _tree(nxt, np.array(edges, dtype=np.int64))


def perfect_binary_tree(height: int) -> Tree:
    """Heap-numbered perfect binary tree with ``2**(height+1) - 1`` vertices."""
    n = 2 ** (height + 1) - 1
    child = np.arange(1, n)
    return _tree(n, np.column_stack([(child - 1) // 2, child]))
