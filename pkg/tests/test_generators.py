from __future__ import annotations

import itertools
from collections import Counter

import numpy as np
import pytest

from treespan import GraphError, enumerate_trees, perfect_binary_tree, prufer_decode, random_tree, validate_tree
from treespan.generators import spider_tree


def _canonical(t):
    return tuple(map(tuple, t.graph.edges().tolist()))


def _prufer_encode(t):
    # textbook quadratic encoder, used only to check the fast decoder
    adj = {v: set(t.neighbors(v).tolist()) for v in range(t.n)}
    seq = []
    for _ in range(t.n - 2):
        leaf = min(v for v, nb in adj.items() if len(nb) == 1)
        (nbr,) = adj.pop(leaf)
        adj[nbr].discard(leaf)
        seq.append(nbr)
    return seq


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125), (6, 1296)])
def test_enumeration_counts_and_distinct(n, count):
    found = [_canonical(t) for t in enumerate_trees(n)]
    assert len(found) == count == len(set(found))


def test_enumeration_yields_valid_trees():
    for t in enumerate_trees(5):
        assert validate_tree(t.graph) is not None


def test_enumeration_cap():
    with pytest.raises(GraphError, match="capped"):
        next(enumerate_trees(9))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_decode_inverts_encode(n):
    for seq in itertools.product(range(n), repeat=n - 2):
        assert _prufer_encode(prufer_decode(seq, n)) == list(seq)


def test_decode_rejects_bad_input():
    with pytest.raises(GraphError):
        prufer_decode([5], 3)
    with pytest.raises(GraphError):
        prufer_decode([0, 0], 3)


def test_random_tree_is_deterministic_per_seed():
    a = random_tree(50, 7)
    b = random_tree(50, 7)
    assert _canonical(a) == _canonical(b)


def test_random_tree_is_roughly_uniform():
    counts = Counter(_canonical(random_tree(4, rng)) for rng in [np.random.default_rng(s) for s in range(3200)])
    assert len(counts) == 16
    assert min(counts.values()) > 120 and max(counts.values()) < 280


def test_named_families():
    assert perfect_binary_tree(3).n == 15
    t = spider_tree([3, 2, 1])
    assert t.n == 7 and t.degree(0) == 3
