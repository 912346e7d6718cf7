from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings

from treespan import (
    InvariantViolation,
    SpanResult,
    bfs_distances,
    brute_triod_size,
    center_and_radius,
    components_minus_vertex,
    eta,
    height_scan,
    is_path,
    max_eta_vertices,
    path_tree,
    perfect_binary_tree,
    random_tree,
    spider_tree,
    star_tree,
    strong_edge_span,
    strong_vertex_span,
    tree_triod_size,
)

from .conftest import trees


def _scan(t):
    info = center_and_radius(t)
    return height_scan(t, info.centers[0]), info


class TestHeightScan:
    def test_star_trace(self):
        table = height_scan(star_tree(3), 0)
        assert table.r1.tolist() == [1, 1, 1, 1]
        assert table.r2.tolist() == [1, 0, 0, 0]
        assert table.r3.tolist() == [1, 0, 0, 0]
        assert table.subtree_height(0) == 1

    def test_path_has_no_triods(self):
        assert height_scan(path_tree(3), 1).r3.tolist() == [0, 0, 0]

    def test_perfect_binary_height_3(self):
        assert height_scan(perfect_binary_tree(3), 0).r3.max() == 2

    def test_order_is_post_order(self):
        t = random_tree(80, 3)
        table, _ = _scan(t)
        pos = {v: i for i, v in enumerate(table.order.tolist())}
        assert sorted(pos) == list(range(t.n))
        for v in range(t.n):
            if v != table.root:
                assert pos[v] < pos[int(table.parent[v])]

    def test_rejects_non_center(self):
        with pytest.raises(ValueError, match="not a center"):
            height_scan(path_tree(5), 0)

    def test_guard_violation_is_reported(self):
        # a radius too small for the tree must trip the guard check
        with pytest.raises(InvariantViolation):
            height_scan(path_tree(7), 3, radius=1)

    @settings(max_examples=200)
    @given(trees(max_n=60))
    def test_top3_ordering_and_root_radius(self, t):
        table, info = _scan(t)
        assert (table.r1 >= table.r2).all() and (table.r2 >= table.r3).all() and (table.r3 >= 0).all()
        assert table.r1[table.root] == info.radius
        others = np.arange(t.n) != table.root
        assert (table.r1[others] == info.radius).all()


class TestEta:
    def test_star_hub(self):
        assert eta(height_scan(star_tree(3), 0), 0) == 1

    def test_leaf(self):
        assert eta(height_scan(star_tree(3), 0), 2) == 0

    def test_spider_222(self):
        assert eta(height_scan(spider_tree([2, 2, 2]), 0), 0) == 2

    @settings(max_examples=150)
    @given(trees(max_n=60))
    def test_matches_definition_everywhere(self, t):
        table, _ = _scan(t)
        for v in range(t.n):
            reach = components_minus_vertex(t, v).reach
            expected = reach[2] if len(reach) >= 3 else 0
            assert eta(table, v) == expected


class TestTriodSize:
    def test_path(self):
        assert tree_triod_size(path_tree(10))[0] == 0

    def test_star(self):
        assert tree_triod_size(star_tree(3)) == (1, 0)

    def test_perfect_binary_height_4(self):
        value, v = tree_triod_size(perfect_binary_tree(4))
        assert value == 3 and v in (1, 2)
        assert v == 1  # smallest id on ties


class TestSpan:
    def test_single_vertex(self):
        assert strong_vertex_span(random_tree(1)) == SpanResult(0, "trivial", None, 0, 0)

    @pytest.mark.parametrize("n", [2, 3, 7, 10])
    def test_paths(self, n):
        r = strong_vertex_span(path_tree(n))
        assert (r.span, r.kind, r.witness_vertex) == (1, "path", None)
        assert r.radius == center_and_radius(path_tree(n)).radius

    def test_perfect_binary_height_3(self):
        assert strong_vertex_span(perfect_binary_tree(3)).span == 2

    def test_spider_321(self):
        r = strong_vertex_span(spider_tree([3, 2, 1]))
        assert (r.span, r.kind, r.witness_vertex, r.eta) == (1, "triod", 0, 1)

    @pytest.mark.parametrize("t", [random_tree(1), path_tree(2), star_tree(3), random_tree(40, 1)])
    def test_edge_span_equals_vertex_span(self, t):
        assert strong_edge_span(t) == strong_vertex_span(t)

    def test_json_round_trip(self):
        for t in (random_tree(1), path_tree(4), spider_tree([2, 2, 1])):
            r = strong_vertex_span(t)
            assert SpanResult.from_dict(r.to_dict()) == r

    @settings(max_examples=200)
    @given(trees(max_n=80))
    def test_result_invariants(self, t):
        r = strong_vertex_span(t)
        assert r.span <= r.radius
        if r.kind == "trivial":
            assert t.n == 1 and r.span == 0
        elif r.kind == "path":
            assert is_path(t) and r.span == 1
        else:
            assert r.span == r.eta >= 1 and t.degree(r.witness_vertex) >= 3


class TestBruteTriod:
    def test_star(self):
        assert brute_triod_size(star_tree(3)) == 1

    def test_path(self):
        assert brute_triod_size(path_tree(6)) == 0

    @settings(max_examples=200)
    @given(trees(max_n=120))
    def test_agrees_with_scan(self, t):
        r = strong_vertex_span(t)
        if r.kind == "triod":
            assert brute_triod_size(t) == r.span
        else:
            assert brute_triod_size(t) == 0


class TestMaxEtaVertices:
    def test_star(self):
        assert max_eta_vertices(star_tree(3)) == {0}

    def test_h_tree(self, h_tree):
        assert max_eta_vertices(h_tree) == max_eta_vertices(h_tree, brute=True) == {0, 1}

    def test_spider_222(self):
        assert max_eta_vertices(spider_tree([2, 2, 2])) == {0}


def lies_on_one_path(t, vertices) -> bool:
    s = sorted(vertices)
    if len(s) <= 2:
        return True
    da = bfs_distances(t, s[0])
    b = max(s, key=lambda x: da[x])
    db = bfs_distances(t, b)
    c = max(s, key=lambda x: db[x])
    dc = bfs_distances(t, c)
    return all(db[x] + dc[x] == db[c] for x in s)


def subtree_height_brute(t, root, v) -> int:
    """Height of the subtree under ``v`` when ``t`` hangs from ``root``."""
    if v == root:
        return int(bfs_distances(t, v).max())
    to_root = bfs_distances(t, root)
    dist = bfs_distances(t, v)
    cs = components_minus_vertex(t, v)
    below = [c for c in cs.components if all(to_root[u] > to_root[v] for u in c)]
    return max((int(dist[u]) for c in below for u in c), default=0)


@settings(max_examples=150)
@given(trees(min_n=2, max_n=50))
def test_max_eta_set_lies_on_a_path(t):
    assert lies_on_one_path(t, max_eta_vertices(t, brute=True))


@settings(max_examples=150)
@given(trees(min_n=2, max_n=50))
def test_parent_side_is_the_strictly_deepest_component(t):
    table, _ = _scan(t)
    for v in range(t.n):
        if v == table.root:
            continue
        cs = components_minus_vertex(t, v)
        assert int(table.parent[v]) in cs.components[0]
        if len(cs.reach) > 1:
            assert cs.reach[0] > cs.reach[1]


@settings(max_examples=150)
@given(trees(min_n=2, max_n=50))
def test_second_reach_is_subtree_height(t):
    table, info = _scan(t)
    for v in range(t.n):
        assert table.subtree_height(v) == subtree_height_brute(t, table.root, v)
    assert table.r1[table.root] == info.radius


@pytest.mark.parametrize("n", [2, 5, 64])
def test_bicentral_choice_is_smaller_center(n):
    t = path_tree(n)
    info = center_and_radius(t)
    assert info.centers[0] == min(info.centers)


@settings(max_examples=50)
@given(trees(min_n=2, max_n=40))
def test_either_center_gives_same_etas(t):
    info = center_and_radius(t)
    tables = [height_scan(t, c) for c in info.centers]
    assert all(np.array_equal(tables[0].r3, tb.r3) for tb in tables)
