"""Induced-copy enumeration: one embedding per image set.

An embedding realizes a pattern graph inside a host on a concrete image set.
Copies are counted by image, not by map: each image set is represented by its
lexicographically least vertex map, which keeps counts matching the intended
"number of copies" reading and keeps all downstream enumeration deterministic.
"""

from .budget import ensure_budget
from .errors import InputError
from .graphs import induced

__all__ = ["Embedding", "enumerate_copies", "enumerate_maps", "canonical_embedding"]


class Embedding:
    """A realized copy of `source` inside `target` via `mapping`."""

    __slots__ = ("source", "target", "mapping", "_image")

    def __init__(self, source, target, mapping, check=True):
        self.source = source
        self.target = target
        self.mapping = dict(mapping)
        self._image = frozenset(self.mapping.values())
        if check:
            self._validate()

    def _validate(self):
        if set(self.mapping) != set(self.source.vertices):
            raise InputError("mapping must be defined on every source vertex")
        if len(self._image) != self.source.num_vertices:
            raise InputError("mapping is not injective")
        self.target.check_subset(self._image)
        for i, u in enumerate(self.source.vertices):
            for v in self.source.vertices[i + 1 :]:
                if self.source.has_edge(u, v) != self.target.has_edge(
                    self.mapping[u], self.mapping[v]
                ):
                    raise InputError("mapping does not induce the source graph")
        if self.source.is_ordered():
            if not self.target.is_ordered():
                raise InputError("ordered pattern needs an ordered target")
            pos = {v: i for i, v in enumerate(self.target.order)}
            seq = [pos[self.mapping[v]] for v in self.source.order]
            if seq != sorted(seq):
                raise InputError("mapping does not preserve the order")

    @property
    def image(self):
        return self._image

    def map_tuple(self):
        return tuple(self.mapping[v] for v in self.source.vertices)

    def compose(self, outer):
        """outer o self: self maps into outer.source's graph."""
        if outer.source != self.target:
            raise InputError("embeddings do not compose: middle graphs differ")
        composed = {v: outer.mapping[w] for v, w in self.mapping.items()}
        return Embedding(self.source, outer.target, composed, check=False)

    def __eq__(self, other):
        if not isinstance(other, Embedding):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.mapping == other.mapping
        )

    def __hash__(self):
        return hash((self.source, self.target, self.map_tuple()))

    def __repr__(self):
        return f"Embedding(image={sorted(self._image)})"


def _all_maps(pattern, host, budget, images_only=None):
    """Backtracking enumeration of all induced-copy maps of `pattern` in `host`.

    Pattern vertices are placed most-constrained-first (placed neighbours,
    then degree); candidates come from intersecting the host neighbourhoods
    of already-placed neighbours.
    """
    pat_vertices = list(pattern.vertices)
    if not pat_vertices:
        raise InputError("pattern must be non-empty")
    deg = {v: pattern.degree(v) for v in pat_vertices}

    order = []
    placed = set()
    while len(order) < len(pat_vertices):
        best = None
        for v in pat_vertices:
            if v in placed:
                continue
            anchored = sum(1 for w in pattern.neighbors(v) if w in placed)
            key = (-anchored, -deg[v], v)
            if best is None or key < best[0]:
                best = (key, v)
        order.append(best[1])
        placed.add(best[1])

    prior_neighbors = []
    prior_nonneighbors = []
    for i, v in enumerate(order):
        before = order[:i]
        nbrs = pattern.neighbors(v)
        prior_neighbors.append([w for w in before if w in nbrs])
        prior_nonneighbors.append([w for w in before if w not in nbrs])

    host_vertices = host.vertices
    results = []
    assignment = {}
    used = set()

    def place(i):
        if i == len(order):
            results.append(dict(assignment))
            return
        u = order[i]
        anchors = prior_neighbors[i]
        if anchors:
            candidates = set(host.neighbors(assignment[anchors[0]]))
            for w in anchors[1:]:
                candidates &= host.neighbors(assignment[w])
        else:
            candidates = host_vertices
        du = deg[u]
        for c in candidates:
            budget.tick()
            if c in used or host.degree(c) < du:
                continue
            if images_only is not None and c not in images_only:
                continue
            if any(host.has_edge(c, assignment[w]) for w in prior_nonneighbors[i]):
                continue
            assignment[u] = c
            used.add(c)
            place(i + 1)
            del assignment[u]
            used.remove(c)

    place(0)
    return results


def enumerate_copies(pattern, host, budget=None):
    """All induced copies of `pattern` in `host`, one Embedding per image set.

    The representative for each image is the lexicographically least vertex
    map; results are sorted by image.  An ordered pattern requires an ordered
    host and only keeps order-preserving copies; an unordered pattern ignores
    any host order.
    """
    budget = ensure_budget(budget)
    if pattern.num_vertices == 0:
        raise InputError("pattern must be non-empty")
    if pattern.is_ordered():
        if not host.is_ordered():
            raise InputError("ordered pattern cannot be searched in an unordered host")
        plain = enumerate_copies(_unordered(pattern), _unordered(host), budget)
        out = []
        host_pos = {v: i for i, v in enumerate(host.order)}
        for emb in plain:
            image_sorted = sorted(emb.image, key=host_pos.get)
            mapping = dict(zip(pattern.order, image_sorted))
            if _is_induced_map(pattern, host, mapping):
                out.append(Embedding(pattern, host, mapping, check=False))
        return tuple(sorted(out, key=lambda e: tuple(sorted(e.image))))

    maps = _all_maps(pattern, host, budget)
    by_image = {}
    for mapping in maps:
        emb_key = tuple(mapping[v] for v in pattern.vertices)
        image = frozenset(mapping.values())
        cur = by_image.get(image)
        if cur is None or emb_key < cur:
            by_image[image] = emb_key
    out = [
        Embedding(pattern, host, dict(zip(pattern.vertices, key)), check=False)
        for key in by_image.values()
    ]
    return tuple(sorted(out, key=lambda e: tuple(sorted(e.image))))


def enumerate_maps(pattern, host, budget=None):
    """Every induced-copy map of an unordered pattern, as dicts (not deduped by image)."""
    budget = ensure_budget(budget)
    if pattern.is_ordered():
        raise InputError("enumerate_maps expects an unordered pattern")
    return _all_maps(pattern, host, budget)


def canonical_embedding(pattern, host, image):
    """The canonical (lex-least map) embedding of `pattern` onto `image`, or None."""
    budget = ensure_budget(None)
    image = host.check_subset(image)
    if len(image) != pattern.num_vertices:
        return None
    maps = _all_maps(pattern, host, budget, images_only=image)
    best = None
    for mapping in maps:
        key = tuple(mapping[v] for v in pattern.vertices)
        if best is None or key < best:
            best = key
    if best is None:
        return None
    return Embedding(pattern, host, dict(zip(pattern.vertices, best)), check=False)


def _unordered(graph):
    from .graphs import reduct

    return reduct(graph)


def _is_induced_map(pattern, host, mapping):
    for i, u in enumerate(pattern.vertices):
        for v in pattern.vertices[i + 1 :]:
            if pattern.has_edge(u, v) != host.has_edge(mapping[u], mapping[v]):
                return False
    return True
