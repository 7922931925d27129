"""Maximum subgraph density and the degeneracy-style parameter.

The maximum density of G is max e(S)/|S| over non-empty subsets; the
companion parameter is the largest minimum degree over subgraphs, computed by
peeling.  Both are exact.  Density has two engines: exhaustive enumeration at
desk scale, and a Dinkelbach-style iteration over the same min-cut machinery
used for closures (each round asks for a subset strictly denser than the
current guess; the framing keeps all arithmetic in integers).
"""

from fractions import Fraction

from .bitview import BitView
from .budget import ensure_budget
from .errors import InputError
from .predimension import Dinic, ENUM_LIMIT

__all__ = ["DensityReport", "max_density", "degeneracy"]


class DensityReport:
    def __init__(self, value, witness, engine):
        self.value = value
        self.witness = witness
        self.engine = engine

    def __repr__(self):
        return f"DensityReport({self.value} on {sorted(self.witness)})"


def max_density(graph, engine="auto", budget=None):
    """max{e(S)/|S| : non-empty S} with an achieving subset."""
    if graph.num_vertices == 0:
        raise InputError("maximum density needs a non-empty graph")
    if engine == "auto":
        engine = "enum" if graph.num_vertices <= ENUM_LIMIT else "flow"
    if engine == "enum":
        return _max_density_enum(graph, budget)
    if engine == "flow":
        return _max_density_flow(graph)
    raise InputError(f"unknown engine {engine!r}")


def _max_density_enum(graph, budget=None):
    budget = ensure_budget(budget)
    view = BitView(graph)
    n = graph.num_vertices
    best = Fraction(0)
    best_mask = 1  # single vertex, density 0
    for mask in range(1, 1 << n):
        if mask % 1024 == 0:
            budget.tick(1024)
        value = Fraction(view.edges_within(mask), mask.bit_count())
        if value > best or (
            value == best and _subset_key(view, mask) < _subset_key(view, best_mask)
        ):
            best = value
            best_mask = mask
    return DensityReport(best, view.set_of(best_mask), "enum")


def _subset_key(view, mask):
    return (mask.bit_count(), tuple(sorted(view.set_of(mask))))


def _denser_subset(graph, value):
    """A subset with e(S) - value*|S| maximal; None when no subset beats `value`.

    Project-selection min-cut: edges are profit q, vertices cost p, for
    value = p/q.  The maximal residual cut side is returned so the witness
    carries full dense cores rather than a fragment.
    """
    p, q = value.numerator, value.denominator
    edges = list(graph.edges)
    vid = {v: i + 2 for i, v in enumerate(graph.vertices)}
    n = 2 + graph.num_vertices + len(edges)
    inf = q * len(edges) + p * graph.num_vertices + 1
    net = Dinic(n)
    for j, (u, v) in enumerate(edges):
        enode = 2 + graph.num_vertices + j
        net.add_edge(0, enode, q)
        net.add_edge(enode, vid[u], inf)
        net.add_edge(enode, vid[v], inf)
    for v in graph.vertices:
        net.add_edge(vid[v], 1, p)
    cut = net.max_flow(0, 1)
    gain = q * len(edges) - cut  # max of q*e(S) - p*|S| over all S
    if gain <= 0:
        return None
    coreach = net.residual_coreachable(1)
    return frozenset(v for v in graph.vertices if not coreach[vid[v]])


def _max_density_flow(graph):
    witness = graph.vertex_set
    value = Fraction(graph.num_edges, graph.num_vertices)
    while True:
        better = _denser_subset(graph, value)
        if better is None:
            return DensityReport(value, witness, "flow")
        witness = better
        count = sum(1 for u, v in graph.edges if u in better and v in better)
        value = Fraction(count, len(better))


def degeneracy(graph):
    """max over subgraphs of the minimum degree, by peeling.

    Peeling removes a minimum-degree vertex at each step; the answer is the
    largest minimum degree ever seen.  Equality with the subgraph definition
    is covered by the tests.
    """
    if graph.num_vertices == 0:
        raise InputError("degeneracy needs a non-empty graph")
    degrees = {v: graph.degree(v) for v in graph.vertices}
    alive = set(graph.vertices)
    best = 0
    while alive:
        v = min(alive, key=lambda u: (degrees[u], u))
        best = max(best, degrees[v])
        alive.remove(v)
        for w in graph.neighbors(v):
            if w in alive:
                degrees[w] -= 1
    return best
