import random

from predim.graphs import Graph, complete_graph, cycle_graph, order_expand
from predim.isomorphism import (
    are_isomorphic,
    canonical_form,
    find_isomorphism,
    pair_canonical_form,
)

from conftest import random_graph


def shuffled_copy(rng, g, prefix="w"):
    names = list(g.vertices)
    renamed = {v: f"{prefix}{i}" for i, v in enumerate(rng.sample(names, len(names)))}
    return (
        Graph(renamed.values(), [(renamed[u], renamed[v]) for u, v in g.edges]),
        renamed,
    )


def test_identity_isomorphic():
    g = cycle_graph(5)
    assert are_isomorphic(g, g)


def test_six_cycle_not_two_triangles():
    c6 = cycle_graph(6)
    two_triangles = Graph(
        ["a", "b", "c", "d", "e", "f"],
        [("a", "b"), ("b", "c"), ("c", "a"), ("d", "e"), ("e", "f"), ("f", "d")],
    )
    assert not are_isomorphic(c6, two_triangles)


def test_random_relabelings_are_isomorphic(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        h, renamed = shuffled_copy(rng, g)
        assert are_isomorphic(g, h)
        iso = find_isomorphism(g, h)
        assert iso is not None
        assert all(h.has_edge(iso[u], iso[v]) for u, v in g.edges)


def test_nonisomorphic_same_degree_sequence():
    # C6 vs two triangles share the degree sequence (2,2,2,2,2,2)
    c6 = cycle_graph(6)
    k3k3 = Graph(
        ["a", "b", "c", "d", "e", "f"],
        [("a", "b"), ("b", "c"), ("c", "a"), ("d", "e"), ("e", "f"), ("f", "d")],
    )
    assert find_isomorphism(c6, k3k3) is None


def test_ordered_isomorphism_requires_matching_positions():
    g = Graph(["a", "b", "c"], [("a", "b")], order=["a", "b", "c"])
    h = Graph(["x", "y", "z"], [("x", "y")], order=["x", "y", "z"])
    assert are_isomorphic(g, h)
    h_bad = Graph(["x", "y", "z"], [("x", "y")], order=["z", "x", "y"])
    assert not are_isomorphic(g, h_bad)


def test_mixed_order_compares_reducts():
    g = cycle_graph(4)
    assert are_isomorphic(g, order_expand(g, ["v2", "v1", "v3", "v4"]))


def test_canonical_form_characterizes_isomorphism(rng):
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 7), rng.random())
        h, _ = shuffled_copy(rng, g)
        assert canonical_form(g) == canonical_form(h)
        other = random_graph(rng, g.num_vertices, rng.random(), prefix="u")
        same = canonical_form(g) == canonical_form(other)
        assert same == are_isomorphic(g, other)


def test_canonical_form_on_complete_graphs():
    assert canonical_form(complete_graph(6)) == canonical_form(complete_graph(6, "w"))


def test_colored_canonical_form_distinguishes_splits():
    # path x - y - z: marking an end vs the middle are different colored graphs
    g = Graph(["x", "y", "z"], [("x", "y"), ("y", "z")])
    end = pair_canonical_form({"x"}, {"y", "z"}, g)
    middle = pair_canonical_form({"y"}, {"x", "z"}, g)
    other_end = pair_canonical_form({"z"}, {"x", "y"}, g)
    assert end == other_end
    assert end != middle
