import pytest

from predim.embeddings import Embedding, canonical_embedding, enumerate_copies
from predim.errors import InputError
from predim.graphs import Graph, complete_graph, cycle_graph, induced, order_expand

from conftest import random_graph


def oracle_images(pattern, host):
    """Independent enumeration: grow partial injections vertex by vertex,
    checking full induced adjacency only at the leaves."""
    pat = list(pattern.vertices)
    images = set()

    def grow(partial):
        if len(partial) == len(pat):
            mapping = dict(zip(pat, partial))
            for i, u in enumerate(pat):
                for v in pat[i + 1 :]:
                    if pattern.has_edge(u, v) != host.has_edge(mapping[u], mapping[v]):
                        return
            images.add(frozenset(partial))
            return
        for c in host.vertices:
            if c not in partial:
                grow(partial + [c])

    grow([])
    return images


def test_single_vertex_copies_in_cycle():
    copies = enumerate_copies(Graph(["p"], []), cycle_graph(4))
    assert len(copies) == 4


def test_triangle_copies_in_k4():
    copies = enumerate_copies(complete_graph(3, "p"), complete_graph(4))
    assert len(copies) == 4
    assert all(len(e.image) == 3 for e in copies)


def test_counts_match_oracle_on_random_graphs(rng):
    for _ in range(40):
        pattern = random_graph(rng, rng.randint(1, 4), rng.random(), prefix="p")
        host = random_graph(rng, rng.randint(1, 6), rng.random())
        got = {e.image for e in enumerate_copies(pattern, host)}
        assert got == oracle_images(pattern, host)


def test_canonical_map_is_lexicographically_least(rng):
    pattern = cycle_graph(4, "p")
    host = cycle_graph(4)
    (emb,) = enumerate_copies(pattern, host)
    # every automorphic map of the image must be >= the chosen one
    from predim.embeddings import enumerate_maps

    keys = [
        tuple(m[v] for v in pattern.vertices)
        for m in enumerate_maps(pattern, host)
        if frozenset(m.values()) == emb.image
    ]
    assert min(keys) == emb.map_tuple()


def test_copies_are_deduplicated_by_image():
    # the 4-cycle has 8 automorphisms but one image
    assert len(enumerate_copies(cycle_graph(4, "p"), cycle_graph(4))) == 1


def test_ordered_pattern_requires_ordered_host():
    p = order_expand(Graph(["a", "b"], [("a", "b")]), ["a", "b"])
    with pytest.raises(InputError):
        enumerate_copies(p, cycle_graph(3))


def test_ordered_copies_preserve_positions():
    host = order_expand(
        Graph(["x", "y", "z"], [("x", "y"), ("y", "z")]), ["x", "y", "z"]
    )
    asc = order_expand(Graph(["a", "b"], [("a", "b")]), ["a", "b"])
    copies = enumerate_copies(asc, host)
    images = {e.image for e in copies}
    assert images == {frozenset({"x", "y"}), frozenset({"y", "z"})}
    for e in copies:
        assert e.mapping["a"] < e.mapping["b"]  # host order is alphabetical here


def test_unordered_pattern_ignores_host_order():
    host = order_expand(cycle_graph(4), ["v2", "v1", "v4", "v3"])
    assert len(enumerate_copies(Graph(["p"], []), host)) == 4


def test_embedding_validation():
    tri = complete_graph(3, "p")
    host = complete_graph(4)
    Embedding(tri, host, {"p1": "v1", "p2": "v2", "p3": "v3"})
    with pytest.raises(InputError):
        Embedding(tri, host, {"p1": "v1", "p2": "v2", "p3": "v2"})
    path = Graph(["p1", "p2", "p3"], [("p1", "p2"), ("p2", "p3")])
    with pytest.raises(InputError):
        Embedding(path, host, {"p1": "v1", "p2": "v2", "p3": "v3"})


def test_canonical_embedding_of_image():
    host = complete_graph(4)
    emb = canonical_embedding(complete_graph(3, "p"), host, {"v2", "v3", "v4"})
    assert emb.map_tuple() == ("v2", "v3", "v4")
    assert canonical_embedding(cycle_graph(3, "p"), cycle_graph(5), {"v1", "v2", "v3"}) is None


def test_compose():
    inner = Graph(["a"], [])
    mid = Graph(["m1", "m2"], [("m1", "m2")])
    outer_host = complete_graph(3)
    gamma = Embedding(inner, mid, {"a": "m2"})
    lam = Embedding(mid, outer_host, {"m1": "v1", "m2": "v3"})
    composed = gamma.compose(lam)
    assert composed.mapping == {"a": "v3"}
    assert composed.target is outer_host
