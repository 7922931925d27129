"""Bitmask view of a graph for fast subset arithmetic.

Maps a fixed universe of vertices to bit positions so that subsets are ints,
edge counts are popcounts, and scaled pre-dimension values stay in exact
integer arithmetic.
"""


class BitView:
    def __init__(self, graph, universe=None):
        names = sorted(universe) if universe is not None else list(graph.vertices)
        if universe is not None:
            graph.check_subset(universe)
        self.names = names
        self.index = {v: i for i, v in enumerate(names)}
        inside = set(names)
        adj = [0] * len(names)
        for u, v in graph.edges:
            if u in inside and v in inside:
                adj[self.index[u]] |= 1 << self.index[v]
                adj[self.index[v]] |= 1 << self.index[u]
        self.adj = adj
        self.full = (1 << len(names)) - 1

    def mask_of(self, subset):
        m = 0
        for v in subset:
            m |= 1 << self.index[v]
        return m

    def set_of(self, mask):
        return frozenset(v for v, i in self.index.items() if mask >> i & 1)

    def edges_within(self, mask):
        count = 0
        m = mask
        while m:
            low = m & -m
            i = low.bit_length() - 1
            # count each edge once: only neighbours below i
            count += (self.adj[i] & mask & (low - 1)).bit_count()
            m ^= low
        return count

    def scaled_delta(self, mask, p, q):
        """q * delta(subset) as an int, for alpha = p/q."""
        return p * mask.bit_count() - q * self.edges_within(mask)
