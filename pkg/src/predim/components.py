"""Intersection structure of closed copies inside a finite window.

Two closed copies of B are adjacent over A when their images share at least
one closed copy of A; the connected components of that adjacency, distances
inside them, and the cycle structure decide whether a pair behaves like a
tree on the window.  Cycle clause conventions (two copies form a 2-cycle when
they share two distinct closed copies; longer cycles need pairwise disjoint
connector sets) follow the intersection reading that makes the tree-pair
coloring construction go through.
"""

from collections import deque

from .budget import ensure_budget
from .closures import is_closed
from .embeddings import enumerate_copies
from .errors import InputError
from .graphs import reduct

__all__ = [
    "ClosedEmbeddingSet",
    "ComponentGraph",
    "CycleWitness",
    "TreePairVerdict",
    "closed_embeddings",
    "build_component_graph",
    "find_cycle",
    "is_tree_pair_window",
]


class ClosedEmbeddingSet:
    """All induced copies of a pattern whose image is closed in the window."""

    def __init__(self, pattern, window, alpha, copies):
        self.pattern = pattern
        self.window = window
        self.alpha = alpha
        self.copies = tuple(copies)

    @property
    def images(self):
        return tuple(e.image for e in self.copies)

    def __len__(self):
        return len(self.copies)

    def __iter__(self):
        return iter(self.copies)


def closed_embeddings(pattern, window, alpha, engine="auto", budget=None):
    """Copies of `pattern` in `window` that are self-sufficient there.

    Closedness ignores any vertex order, so ordered windows filter exactly
    like their reducts.
    """
    budget = ensure_budget(budget)
    copies = enumerate_copies(pattern, window, budget)
    plain = reduct(window)
    kept = [
        emb
        for emb in copies
        if is_closed(emb.image, None, plain, alpha, engine=engine, budget=budget)
    ]
    return ClosedEmbeddingSet(pattern, window, alpha, kept)


class ComponentGraph:
    """Adjacency of closed B-copies over closed A-copies in their intersections."""

    def __init__(self, copies, connector_pattern, edge_labels, components, distances):
        self.copies = copies  # ClosedEmbeddingSet of B
        self.connector_pattern = connector_pattern
        self.edge_labels = edge_labels  # (i, j) with i < j -> tuple of A-images
        self.components = components  # tuple of tuples of node indices
        self.distances = distances  # (i, j) with i < j -> hop count

    @property
    def num_nodes(self):
        return len(self.copies)

    def neighbors(self, i):
        out = []
        for (a, b) in self.edge_labels:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def labels(self, i, j):
        key = (i, j) if i < j else (j, i)
        return self.edge_labels.get(key, ())

    def distance(self, i, j):
        if i == j:
            return 0
        key = (i, j) if i < j else (j, i)
        return self.distances.get(key)


def build_component_graph(copies, connector, alpha, engine="auto", budget=None):
    """Connect copies whose image intersections contain a closed copy of
    `connector`; label edges with those connecting copies.

    Connector closedness is judged in the window (not merely inside the
    intersecting images), which is the finite reading of closedness in an
    ambient structure.
    """
    budget = ensure_budget(budget)
    window = copies.window
    closed_connectors = closed_embeddings(connector, window, copies.alpha,
                                          engine=engine, budget=budget)
    connector_images = list(closed_connectors.images)

    labels = {}
    n = len(copies.copies)
    images = copies.images
    for i in range(n):
        for j in range(i + 1, n):
            budget.tick()
            meet = images[i] & images[j]
            if len(meet) < 1:
                continue
            inside = tuple(
                sorted((im for im in connector_images if im <= meet), key=sorted)
            )
            if inside:
                labels[(i, j)] = inside

    adjacency = {i: set() for i in range(n)}
    for (i, j) in labels:
        adjacency[i].add(j)
        adjacency[j].add(i)

    seen = set()
    components = []
    for start in range(n):
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in sorted(adjacency[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        components.append(tuple(sorted(comp)))

    distances = {}
    for src in range(n):
        dist = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        for dst, d in dist.items():
            if src < dst:
                distances[(src, dst)] = d
    return ComponentGraph(copies, connector, labels, tuple(components), distances)


class CycleWitness:
    def __init__(self, nodes, connectors):
        self.nodes = tuple(nodes)  # node indices in cyclic order
        self.connectors = tuple(connectors)  # one connecting A-image per slot

    @property
    def length(self):
        return len(self.nodes)

    def describe(self, cg):
        return {
            "length": self.length,
            "copies": [sorted(cg.copies.copies[i].image) for i in self.nodes],
            "connectors": [sorted(c) for c in self.connectors],
        }


def find_cycle(cg, budget=None):
    """A minimal cycle of copies over the connector pattern, or None.

    Length 2: one pair sharing two distinct closed connector copies.
    Length >= 3: a simple adjacency cycle whose consecutive-edge connector
    sets are pairwise disjoint (no two slots share a closed connector copy).
    """
    budget = ensure_budget(budget)
    for (i, j), labels in sorted(cg.edge_labels.items()):
        if len(labels) >= 2:
            return CycleWitness((i, j), (labels[0], labels[1]))

    n = cg.num_nodes
    for length in range(3, n + 1):
        witness = _simple_cycle_search(cg, length, budget)
        if witness is not None:
            return witness
    return None


def _simple_cycle_search(cg, length, budget):
    # canonical start: smallest node first, second neighbour below the last
    # one to kill reversal duplicates
    for start in range(cg.num_nodes):
        path = [start]
        found = _extend_cycle(cg, start, path, length, budget)
        if found is not None:
            return found
    return None


def _extend_cycle(cg, start, path, length, budget):
    budget.tick()
    u = path[-1]
    if len(path) == length:
        if start not in [w for w in cg.neighbors(u)]:
            return None
        slots = list(zip(path, path[1:] + [start]))
        if path[1] > path[-1]:  # reversal representative
            return None
        label_sets = [frozenset(cg.labels(a, b)) for a, b in slots]
        for x in range(len(label_sets)):
            for y in range(x + 1, len(label_sets)):
                if label_sets[x] & label_sets[y]:
                    return None
        connectors = [sorted(cg.labels(a, b), key=sorted)[0] for a, b in slots]
        return CycleWitness(path, connectors)
    for w in cg.neighbors(u):
        if w in path or w < start:
            continue
        path.append(w)
        found = _extend_cycle(cg, start, path, length, budget)
        if found is not None:
            return found
        path.pop()
    return None


class TreePairVerdict:
    def __init__(self, verdict, cg, violation=None, shared_pair=None):
        self.verdict = verdict  # "tree_pair_on_window" | "violated"
        self.component_graph = cg
        self.violation = violation  # CycleWitness when violated
        self.shared_pair = shared_pair  # pair of node indices sharing >= 2 copies

    def __bool__(self):
        return self.verdict == "tree_pair_on_window"

    def describe(self):
        data = {
            "verdict": self.verdict,
            "closed_copies": len(self.component_graph.copies),
            "components": [list(c) for c in self.component_graph.components],
        }
        if self.violation is not None:
            data["violation"] = self.violation.describe(self.component_graph)
        if self.shared_pair is not None:
            data["pair_with_two_shared_copies"] = list(self.shared_pair)
        return data


def is_tree_pair_window(pattern_a, pattern_b, window, alpha, engine="auto", budget=None):
    """Check the tree-pair conditions for (A; B) over a finite window.

    (a) two distinct closed B-copies share at most one closed A-copy, and
    (b) no cycles of copies over A exist.  A 2-cycle is exactly a violation
    of (a), so one cycle search decides both clauses; the verdict carries a
    replayable witness when violated.
    """
    budget = ensure_budget(budget)
    anchors = closed_embeddings(pattern_a, pattern_b, alpha, engine=engine, budget=budget)
    if len(anchors) == 0:
        raise InputError("the small pattern has no closed copy inside the big one")
    copies = closed_embeddings(pattern_b, window, alpha, engine=engine, budget=budget)
    cg = build_component_graph(copies, pattern_a, alpha, engine=engine, budget=budget)
    witness = find_cycle(cg, budget)
    if witness is None:
        return TreePairVerdict("tree_pair_on_window", cg)
    shared = witness.nodes[:2] if witness.length == 2 else None
    return TreePairVerdict("violated", cg, violation=witness, shared_pair=shared)
