"""Graph isomorphism testing and small-graph canonical forms.

Isomorphism search is backtracking guided by iterated neighbourhood-colour
refinement (1-WL).  Canonical forms use individualization-refinement and are
meant for small keys (bound tables, census deduplication); they are guarded
by a size limit rather than tuned for large symmetric graphs.
"""

from .errors import InputError
from .graphs import reduct

__all__ = ["are_isomorphic", "find_isomorphism", "canonical_form", "pair_canonical_form"]


def _refine(adj, colors):
    """Iterate colour refinement to a fixed point. Colours are ints."""
    while True:
        signatures = {
            v: (colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in adj
        }
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures.values())))}
        new = {v: palette[signatures[v]] for v in adj}
        if new == colors:
            return colors
        colors = new


def _joint_refinement(a, b):
    """Refine the disjoint union so colours are comparable across both graphs."""
    adj = {}
    colors = {}
    for tag, g in (("a", a), ("b", b)):
        for v in g.vertices:
            adj[(tag, v)] = frozenset((tag, w) for w in g.neighbors(v))
            colors[(tag, v)] = 0
    colors = _refine(adj, colors)
    ca = {v: colors[("a", v)] for v in a.vertices}
    cb = {v: colors[("b", v)] for v in b.vertices}
    return ca, cb


def find_isomorphism(a, b):
    """An isomorphism a -> b as a dict, or None. Ignores vertex orders."""
    a, b = reduct(a), reduct(b)
    if a.num_vertices != b.num_vertices or a.num_edges != b.num_edges:
        return None
    if sorted(a.degree(v) for v in a.vertices) != sorted(b.degree(v) for v in b.vertices):
        return None
    ca, cb = _joint_refinement(a, b)
    if sorted(ca.values()) != sorted(cb.values()):
        return None

    by_color = {}
    for v in b.vertices:
        by_color.setdefault(cb[v], []).append(v)
    # most constrained first: smallest candidate class, then name
    order = sorted(a.vertices, key=lambda v: (len(by_color.get(ca[v], ())), v))

    mapping = {}
    used = set()

    def extend(i):
        if i == len(order):
            return True
        u = order[i]
        for c in by_color.get(ca[u], ()):
            if c in used:
                continue
            ok = True
            for w, cw in mapping.items():
                if a.has_edge(u, w) != b.has_edge(c, cw):
                    ok = False
                    break
            if ok:
                mapping[u] = c
                used.add(c)
                if extend(i + 1):
                    return True
                del mapping[u]
                used.remove(c)
        return False

    return dict(mapping) if extend(0) else None


def are_isomorphic(a, b):
    """Graph isomorphism; order-preserving when both graphs carry an order.

    When exactly one side is ordered, the orders cannot both be respected and
    the reducts are compared instead.
    """
    if a.is_ordered() and b.is_ordered():
        if len(a.order) != len(b.order):
            return False
        # an order-preserving bijection is unique: position i to position i
        pos = dict(zip(a.order, b.order))
        return all(
            a.has_edge(u, v) == b.has_edge(pos[u], pos[v])
            for i, u in enumerate(a.order)
            for v in a.order[i + 1 :]
        )
    return find_isomorphism(a, b) is not None


_CANON_LIMIT = 11


def canonical_form(graph, colors=None):
    """A canonical key: equal for two graphs iff they are isomorphic
    (respecting the optional vertex colouring).

    Individualization-refinement with leaf-code minimization.  Intended for
    small graphs; raises on inputs past the size guard.
    """
    graph = reduct(graph)
    n = graph.num_vertices
    if n > _CANON_LIMIT:
        raise InputError(f"canonical form limited to {_CANON_LIMIT} vertices, got {n}")
    if n == 0:
        return ("canon", 0, ())
    adj = {v: graph.neighbors(v) for v in graph.vertices}
    if colors is None:
        base = {v: 0 for v in graph.vertices}
    else:
        base = {v: int(colors[v]) for v in graph.vertices}

    best = [None]

    def encode(ordering):
        index = {v: i for i, v in enumerate(ordering)}
        bits = 0
        for u, v in graph.edges:
            i, j = index[u], index[v]
            if i > j:
                i, j = j, i
            bits |= 1 << (i * n + j)
        return (tuple(base[v] for v in ordering), bits)

    def search(colors_now):
        classes = {}
        for v in graph.vertices:
            classes.setdefault(colors_now[v], []).append(v)
        keys = sorted(classes)
        target = next((k for k in keys if len(classes[k]) > 1), None)
        if target is None:
            ordering = [classes[k][0] for k in keys]
            code = encode(ordering)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        fresh = max(keys) + 1
        for v in sorted(classes[target]):
            child = dict(colors_now)
            child[v] = fresh
            search(_refine(adj, child))

    search(_refine(adj, base))
    return ("canon", n, best[0])


def pair_canonical_form(base_part, ext_part, host):
    """Canonical key of the two-part structure (A, B) inside a host graph.

    Vertices of the base part are coloured apart from the extension part, so
    the key identifies pairs up to isomorphisms that respect the split.
    """
    from .graphs import induced

    a = host.check_subset(base_part)
    b = host.check_subset(ext_part)
    if a & b:
        raise InputError("pair parts must be disjoint")
    sub = induced(host, a | b)
    colors = {v: (0 if v in a else 1) for v in sub.vertices}
    return canonical_form(sub, colors)
