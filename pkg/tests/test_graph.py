import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locdom.graph import (
    ADJACENT_TWINS,
    NON_ADJACENT_TWINS,
    SINGLETON,
    Graph,
    VertexSet,
    bits,
    graph_from_edge_text,
    graph_from_json_dict,
    graph_to_json_dict,
    is_connected,
    neighborhood,
    permute_graph,
    twin_partition,
)
from locdom.families import complete_graph, path_graph, random_graph, star_graph


# independent reference implementations, kept on plain Python sets

def nbr_sets(g):
    return [set(bits(g.adj[v])) for v in range(g.n)]


def naive_connected(g):
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in bits(g.adj[v]):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def twin_kind(g, u, v):
    nbrs = nbr_sets(g)
    if nbrs[u] | {u} == nbrs[v] | {v}:
        return ADJACENT_TWINS
    if nbrs[u] == nbrs[v]:
        return NON_ADJACENT_TWINS
    return None


def small_graph_corpus():
    graphs = []
    for n in range(1, 5):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for mask in range(1 << len(pairs)):
            graphs.append(Graph.from_edges(n, [pairs[j] for j in bits(mask)]))
    rng = random.Random(7)
    for _ in range(60):
        graphs.append(random_graph(rng, rng.randint(5, 9), rng.uniform(0.1, 0.9)))
    return graphs


class TestVertexSet:
    def test_members_and_len(self):
        s = VertexSet.of(6, [4, 1, 2])
        assert s.members == (1, 2, 4)
        assert len(s) == 3
        assert list(s) == [1, 2, 4]
        assert 2 in s and 3 not in s and 6 not in s

    def test_algebra(self):
        a = VertexSet.of(5, [0, 1, 3])
        b = VertexSet.of(5, [1, 2])
        assert (a | b).members == (0, 1, 2, 3)
        assert (a & b).members == (1,)
        assert (a - b).members == (0, 3)
        assert a.complement().members == (2, 4)
        assert b.issubset(a | b)
        assert not a.issubset(b)

    def test_lexicographic_order(self):
        # sorted-member order, not bitmask order: [1] > [0, 2]
        assert VertexSet.of(3, [0, 2]) < VertexSet.of(3, [1])
        assert VertexSet.of(3, [0, 1]) < VertexSet.of(3, [0, 2])
        assert VertexSet.of(3, []) < VertexSet.of(3, [0])

    def test_universe_mismatch(self):
        with pytest.raises(ValueError):
            VertexSet.of(3, [0]) | VertexSet.of(4, [0])

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            VertexSet.of(3, [3])
        with pytest.raises(ValueError):
            VertexSet(3, 1 << 3)

    @settings(max_examples=200, deadline=None)
    @given(
        u=st.integers(1, 10),
        data=st.data(),
    )
    def test_algebra_matches_builtin_sets(self, u, data):
        xs = data.draw(st.lists(st.integers(0, u - 1), max_size=u))
        ys = data.draw(st.lists(st.integers(0, u - 1), max_size=u))
        a, b = VertexSet.of(u, xs), VertexSet.of(u, ys)
        sa, sb = set(xs), set(ys)
        assert set((a | b).members) == sa | sb
        assert set((a & b).members) == sa & sb
        assert set((a - b).members) == sa - sb
        assert set(a.complement().members) == set(range(u)) - sa
        assert a.issubset(b) == (sa <= sb)


class TestGraphConstruction:
    def test_from_edges(self):
        g = Graph.from_edges(3, [(0, 1), (2, 1)])
        assert g.degree(1) == 2
        assert g.edges() == [(0, 1), (1, 2)]
        assert g.edge_count == 2

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_duplicate(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            Graph.from_edges(0, [])
        with pytest.raises(ValueError):
            Graph.from_edges(129, [])

    def test_rejects_asymmetric_rows(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0b00))


class TestNeighborhood:
    def test_complete_open(self):
        assert neighborhood(complete_graph(3), 0).members == (1, 2)

    def test_path_closed(self):
        assert neighborhood(path_graph(3), 1, closed=True).members == (0, 1, 2)

    def test_star_leaf_open(self):
        assert neighborhood(star_graph(5), 3).members == (0,)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            neighborhood(path_graph(3), 3)


class TestTwinPartition:
    def test_star(self):
        part = twin_partition(star_graph(5))
        layout = {(cls.vertices.members, cls.kind) for cls in part}
        assert layout == {((0,), SINGLETON), ((1, 2, 3, 4), NON_ADJACENT_TWINS)}

    def test_complete(self):
        part = twin_partition(complete_graph(4))
        assert len(part) == 1
        (cls,) = part.classes
        assert cls.vertices.members == (0, 1, 2, 3)
        assert cls.kind == ADJACENT_TWINS

    def test_path_has_no_twins(self):
        part = twin_partition(path_graph(5))
        assert all(cls.kind == SINGLETON for cls in part)
        # direct pairwise comparison oracle
        for u in range(5):
            for v in range(u + 1, 5):
                assert twin_kind(path_graph(5), u, v) is None

    def test_matches_pairwise_oracle_on_corpus(self):
        for g in small_graph_corpus():
            part = twin_partition(g)
            covered = sorted(v for cls in part for v in cls.vertices.members)
            assert covered == list(range(g.n))
            where = {}
            for idx, cls in enumerate(part.classes):
                if len(cls.vertices) >= 2:
                    assert cls.kind in (ADJACENT_TWINS, NON_ADJACENT_TWINS)
                else:
                    assert cls.kind == SINGLETON
                for v in cls.vertices:
                    where[v] = idx
                # defining equality holds literally inside every class
                members = cls.vertices.members
                for a in members:
                    for b in members:
                        if a < b:
                            assert twin_kind(g, a, b) == cls.kind
            # completeness: every twin pair ends up in one class
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    if twin_kind(g, u, v) is not None:
                        assert where[u] == where[v]

    def test_deterministic(self):
        g = star_graph(6)
        assert twin_partition(g) == twin_partition(g)

    def test_relabeling_invariance(self):
        rng = random.Random(11)
        for _ in range(25):
            g = random_graph(rng, rng.randint(2, 8), 0.5)
            perm = list(range(g.n))
            rng.shuffle(perm)
            before = {
                (frozenset(perm[v] for v in cls.vertices), cls.kind)
                for cls in twin_partition(g)
            }
            after = {
                (frozenset(cls.vertices.members), cls.kind)
                for cls in twin_partition(permute_graph(g, perm))
            }
            assert before == after


class TestConnectivity:
    def test_path_connected(self):
        assert is_connected(path_graph(5))

    def test_two_disjoint_edges(self):
        assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_single_vertex(self):
        assert is_connected(Graph.from_edges(1, []))

    def test_matches_naive_on_corpus(self):
        for g in small_graph_corpus():
            assert is_connected(g) == naive_connected(g)


class TestPermute:
    def test_roundtrip(self):
        g = star_graph(5)
        perm = [4, 0, 1, 2, 3]
        inverse = [perm.index(v) for v in range(5)]
        assert permute_graph(permute_graph(g, perm), inverse) == g

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            permute_graph(path_graph(3), [0, 0, 1])


class TestSerialization:
    def test_json_roundtrip(self):
        g = star_graph(4)
        d = graph_to_json_dict(g)
        assert d == {"n": 4, "edges": [[0, 1], [0, 2], [0, 3]]}
        assert graph_from_json_dict(json.loads(json.dumps(d))) == g

    def test_json_requires_u_less_than_v(self):
        with pytest.raises(ValueError):
            graph_from_json_dict({"n": 3, "edges": [[1, 0]]})

    def test_json_rejects_duplicates(self):
        with pytest.raises(ValueError):
            graph_from_json_dict({"n": 3, "edges": [[0, 1], [0, 1]]})

    def test_json_shape_errors(self):
        for bad in (
            [],
            {"n": 3},
            {"edges": []},
            {"n": "3", "edges": []},
            {"n": 3, "edges": [[0]]},
            {"n": 3, "edges": [[0, True]]},
        ):
            with pytest.raises(ValueError):
                graph_from_json_dict(bad)

    def test_edge_text(self):
        g = graph_from_edge_text("# a triangle\n0 1\n1 2 # last\n\n0 2\n")
        assert g == complete_graph(3)

    def test_edge_text_errors(self):
        with pytest.raises(ValueError):
            graph_from_edge_text("# nothing\n")
        with pytest.raises(ValueError):
            graph_from_edge_text("0 1 2\n")
