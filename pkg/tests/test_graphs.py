import json

import pytest

from predim.errors import InputError
from predim.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    free_amalgam,
    graph_from_json,
    graph_to_json,
    induced,
    order_expand,
    reduct,
)

from conftest import make_graph


def test_basic_construction():
    g = Graph(["b", "a"], [("a", "b")])
    assert g.vertices == ("a", "b")
    assert g.edges == (("a", "b"),)
    assert g.has_edge("b", "a")
    assert g.degree("a") == 1


def test_rejects_self_loop():
    with pytest.raises(InputError):
        Graph(["a"], [("a", "a")])


def test_rejects_unknown_endpoint():
    with pytest.raises(InputError):
        Graph(["a"], [("a", "b")])


def test_rejects_duplicate_vertices():
    with pytest.raises(InputError):
        Graph(["a", "a"], [])


def test_order_must_be_permutation():
    with pytest.raises(InputError):
        Graph(["a", "b"], [], order=["a"])
    with pytest.raises(InputError):
        Graph(["a", "b"], [], order=["a", "a"])


def test_induced_complete_graph_restriction():
    k4 = complete_graph(4)
    tri = induced(k4, ["v1", "v2", "v3"])
    assert tri.num_vertices == 3 and tri.num_edges == 3


def test_induced_two_adjacent_vertices_of_cycle():
    c6 = cycle_graph(6)
    e = induced(c6, ["v1", "v2"])
    assert e.num_edges == 1


def test_induced_restricts_order():
    g = Graph(["a", "b", "c"], [("a", "b")], order=["c", "a", "b"])
    sub = induced(g, ["a", "c"])
    assert sub.order == ("c", "a")


def test_free_amalgam_two_edges_glued_on_endpoint():
    left = Graph(["x", "y"], [("x", "y")])
    right = Graph(["p", "q"], [("p", "q")])
    am = free_amalgam(left, right, {"p": "y"})
    assert am.graph.num_vertices == 3
    assert am.graph.num_edges == 2
    # path: no edge between the two free ends
    free_end = am.right_map["q"]
    assert not am.graph.has_edge("x", free_end)


def test_free_amalgam_edge_count_identity(rng):
    from conftest import random_graph

    for _ in range(20):
        b = random_graph(rng, rng.randint(2, 6), 0.5, prefix="b")
        c = random_graph(rng, rng.randint(2, 6), 0.5, prefix="c")
        k = rng.randint(0, min(b.num_vertices, c.num_vertices))
        # glue an induced-isomorphic part: use an empty part or a single vertex
        glue = {}
        if k >= 1:
            glue = {c.vertices[0]: b.vertices[0]}
        am = free_amalgam(b, c, glue)
        shared = len(glue)
        assert am.graph.num_vertices == b.num_vertices + c.num_vertices - shared
        shared_edges = 0  # glued parts here have at most one vertex
        assert am.graph.num_edges == b.num_edges + c.num_edges - shared_edges


def test_free_amalgam_rejects_non_isomorphic_glue():
    left = Graph(["x", "y"], [("x", "y")])
    right = Graph(["p", "q"], [])
    with pytest.raises(InputError):
        free_amalgam(left, right, {"p": "x", "q": "y"})


def test_free_amalgam_renames_collisions():
    left = Graph(["a", "b"], [("a", "b")])
    right = Graph(["a", "b"], [("a", "b")])
    am = free_amalgam(left, right, {"a": "a"})
    assert am.right_map["a"] == "a"
    assert am.right_map["b"] not in ("a", "b")


def test_order_expand_reduct_roundtrip():
    g = cycle_graph(4)
    ordered = order_expand(g, ["v3", "v1", "v2", "v4"])
    assert ordered.order == ("v3", "v1", "v2", "v4")
    assert reduct(ordered) == g


def test_json_roundtrip():
    g = Graph(["a", "b", "c"], [("a", "b"), ("b", "c")], order=["b", "a", "c"])
    data = graph_to_json(g)
    again = graph_from_json(json.loads(json.dumps(data)))
    assert again == g


@pytest.mark.parametrize(
    "data",
    [
        {"vertices": ["a", "a"], "edges": []},
        {"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]},
        {"vertices": ["a"], "edges": [["a", "a"]]},
        {"vertices": ["a"], "edges": [["a"]]},
        {"vertices": "ab", "edges": []},
        {"vertices": ["a"], "edges": [], "extra": 1},
    ],
)
def test_json_rejects_malformed(data):
    with pytest.raises(InputError):
        graph_from_json(data)


def test_graph_equality_and_hash():
    g1 = make_graph(3, [(0, 1)])
    g2 = make_graph(3, [(0, 1)])
    assert g1 == g2 and hash(g1) == hash(g2)
    assert g1 != order_expand(g1, g1.vertices)
