"""Finite simple graphs with named vertices and an optional total vertex order.

Vertices are opaque strings; subsets are sets of names, so everything is
stable across serialization.  Graphs are immutable and hashable.  The order,
when present, is a permutation of the vertex set and models the linear
ordering of an ordered expansion; the underlying graph (the reduct) is
unchanged by attaching or dropping it.
"""

import json
from functools import cached_property

from .errors import InputError

__all__ = [
    "Graph",
    "Amalgam",
    "induced",
    "free_amalgam",
    "order_expand",
    "reduct",
    "graph_from_json",
    "graph_to_json",
    "load_graph",
    "cycle_graph",
    "complete_graph",
]


def _edge(u, v):
    if u == v:
        raise InputError(f"self-loop at {u!r} is not allowed")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable finite simple graph."""

    __slots__ = ("vertices", "edges", "order", "__dict__")

    def __init__(self, vertices, edges=(), order=None):
        vs = tuple(sorted(vertices))
        if len(vs) != len(set(vs)):
            raise InputError("duplicate vertex names")
        vset = set(vs)
        es = set()
        for pair in edges:
            u, v = pair
            if u not in vset or v not in vset:
                raise InputError(f"edge {pair!r} uses an undeclared vertex")
            es.add(_edge(u, v))
        self.vertices = vs
        self.edges = tuple(sorted(es))
        if order is not None:
            order = tuple(order)
            if sorted(order) != list(vs):
                raise InputError("order must be a permutation of the vertex set")
        self.order = order

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return len(self.edges)

    @cached_property
    def vertex_set(self):
        return frozenset(self.vertices)

    @cached_property
    def adjacency(self):
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(nbrs) for v, nbrs in adj.items()}

    def neighbors(self, v):
        try:
            return self.adjacency[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def degree(self, v):
        return len(self.neighbors(v))

    def has_edge(self, u, v):
        if u == v:
            return False
        return _edge(u, v) in self._edge_set

    @cached_property
    def _edge_set(self):
        return frozenset(self.edges)

    def check_subset(self, subset):
        """Validate a vertex subset against this graph; return it as a frozenset."""
        s = frozenset(subset)
        unknown = s - self.vertex_set
        if unknown:
            raise InputError(f"unknown vertices: {sorted(unknown)}")
        return s

    def is_ordered(self):
        return self.order is not None

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.edges == other.edges
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.vertices, self.edges, self.order))

    def __repr__(self):
        tag = ", ordered" if self.order is not None else ""
        return f"Graph({self.num_vertices} vertices, {self.num_edges} edges{tag})"


def induced(graph, subset):
    """The subgraph of `graph` on `subset`, with the order restricted if present."""
    s = graph.check_subset(subset)
    edges = [e for e in graph.edges if e[0] in s and e[1] in s]
    order = None
    if graph.order is not None:
        order = tuple(v for v in graph.order if v in s)
    return Graph(s, edges, order)


def order_expand(graph, sequence):
    """Attach a total vertex order; the underlying reduct is unchanged."""
    return Graph(graph.vertices, graph.edges, tuple(sequence))


def reduct(graph):
    """Drop the vertex order, keeping vertices and edges."""
    if graph.order is None:
        return graph
    return Graph(graph.vertices, graph.edges)


class Amalgam:
    """Result of a free amalgamation: the glued graph plus both embeddings.

    `left_map` sends vertices of the left factor into the result (identity),
    `right_map` sends vertices of the right factor into the result.
    """

    def __init__(self, graph, left_map, right_map, shared):
        self.graph = graph
        self.left_map = left_map
        self.right_map = right_map
        self.shared = shared  # image of the common part in the result

    def right_image(self):
        return frozenset(self.right_map.values())


def _fresh_name(name, taken):
    candidate = name
    while candidate in taken:
        candidate = candidate + "'"
    return candidate


def free_amalgam(left, right, glue):
    """Free amalgam of `left` and `right` over a common part.

    `glue` maps some vertices of `right` onto vertices of `left` and must be an
    isomorphism between the induced subgraphs on its domain and its image (the
    common part A).  The result keeps the names of `left`; unglued vertices of
    `right` are renamed only on collision.  No edges beyond those of the two
    factors are introduced, so the edge count is e(left) + e(right) - e(A).
    """
    glue = dict(glue)
    dom = right.check_subset(glue.keys())
    img = left.check_subset(glue.values())
    if len(img) != len(dom):
        raise InputError("glue map is not injective")
    for u in dom:
        for v in dom:
            if u < v and right.has_edge(u, v) != left.has_edge(glue[u], glue[v]):
                raise InputError(
                    "glue is not an isomorphism of the induced common parts "
                    f"(pair {u!r},{v!r})"
                )

    left_map = {v: v for v in left.vertices}
    right_map = dict(glue)
    taken = set(left.vertices)
    for v in right.vertices:
        if v in right_map:
            continue
        name = _fresh_name(v, taken)
        right_map[v] = name
        taken.add(name)

    vertices = set(left.vertices) | set(right_map.values())
    edges = set(left.edges)
    for u, v in right.edges:
        edges.add(_edge(right_map[u], right_map[v]))
    graph = Graph(vertices, edges)
    return Amalgam(graph, left_map, right_map, img)


def graph_from_json(data):
    """Build a Graph from the JSON object form, with strict validation.

    Expected shape: {"vertices": [...], "edges": [["a","b"], ...], "order": [...]?}
    Duplicate vertices, duplicate edges (in either orientation) and self-loops
    are rejected.
    """
    if not isinstance(data, dict):
        raise InputError("graph JSON must be an object")
    unknown_keys = set(data) - {"vertices", "edges", "order"}
    if unknown_keys:
        raise InputError(f"unknown graph JSON keys: {sorted(unknown_keys)}")
    vertices = data.get("vertices")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InputError("'vertices' must be a list of strings")
    if len(set(vertices)) != len(vertices):
        raise InputError("duplicate vertex names")
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise InputError("'edges' must be a list of pairs")
    seen = set()
    pairs = []
    for item in edges:
        if not (isinstance(item, list) and len(item) == 2):
            raise InputError(f"edge {item!r} is not a pair")
        u, v = item
        e = _edge(u, v)
        if e in seen:
            raise InputError(f"duplicate edge {item!r}")
        seen.add(e)
        pairs.append(e)
    order = data.get("order")
    return Graph(vertices, pairs, order)


def graph_to_json(graph):
    """Serialize deterministically (sorted vertices and edges)."""
    data = {
        "vertices": list(graph.vertices),
        "edges": [list(e) for e in graph.edges],
    }
    if graph.order is not None:
        data["order"] = list(graph.order)
    return data


def load_graph(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read graph file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc
    return graph_from_json(data)


def cycle_graph(n, prefix="v"):
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = [(names[i], names[(i + 1) % n]) for i in range(n)]
    return Graph(names, edges)


def complete_graph(n, prefix="v"):
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    return Graph(names, edges)
