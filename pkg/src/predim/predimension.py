"""Pre-dimension calculus: delta values and exact minimization over subset ranges.

The pre-dimension of a finite graph is alpha * |V| - |E| for a rational
coefficient alpha >= 1.  Self-sufficiency questions all reduce to exact
minimization of delta over {C : lower <= C <= upper} inside a host graph.
Two engines compute that minimum:

* "enum"  — exhaustive bitmask scan of the free vertices.  Exponential, used
  at desk scale where the full sweep doubles as a certificate.
* "flow"  — a max-flow/min-cut reduction.  delta is submodular, and
  minimizing q*delta(C) = p*|C| - q*e(C) over supersets of a forced set is a
  project-selection problem: every edge of the host is a unit of profit q
  requiring both endpoints, every free vertex costs p.  Integer capacities
  keep the arithmetic exact, and the minimum/maximum residual cuts give the
  inclusion-minimal and inclusion-maximal minimizers (the minimizers form a
  lattice).

Both engines return identical values; the test suite cross-checks them
exhaustively on small instances.
"""

from collections import deque
from fractions import Fraction
from itertools import combinations

from .bitview import BitView
from .budget import ensure_budget
from .errors import InputError
from .graphs import induced

__all__ = [
    "delta",
    "relative_delta",
    "MinDeltaResult",
    "min_delta_over",
    "first_violation_by_size",
    "ENUM_LIMIT",
]

# Free-vertex count up to which the exhaustive engine is the default.
ENUM_LIMIT = 16


def delta(graph, alpha):
    """alpha * |V(G)| - |E(G)|, exactly."""
    return Fraction(alpha) * graph.num_vertices - graph.num_edges


def relative_delta(subset, base, host, alpha):
    """delta(subset ∪ base) - delta(base), on induced subgraphs of the host."""
    s = host.check_subset(subset)
    b = host.check_subset(base)
    return delta(induced(host, s | b), alpha) - delta(induced(host, b), alpha)


class MinDeltaResult:
    """Outcome of minimizing delta over {C : lower <= C <= upper}.

    `minimal` and `maximal` are the inclusion-minimal and inclusion-maximal
    minimizing sets (both always exist: minimizers of a submodular function
    over a lattice form a lattice).
    """

    def __init__(self, value, minimal, maximal, engine):
        self.value = value
        self.minimal = minimal
        self.maximal = maximal
        self.engine = engine

    def __repr__(self):
        return f"MinDeltaResult(value={self.value}, minimal={sorted(self.minimal)})"


def _alpha_ratio(alpha):
    a = Fraction(alpha)
    if a <= 0:
        raise InputError("alpha must be positive")
    return a.numerator, a.denominator


def min_delta_over(host, lower, upper=None, alpha=2, engine="auto", budget=None):
    """Exact min of delta(C) over lower <= C <= upper inside `host`."""
    lo = host.check_subset(lower)
    up = host.vertex_set if upper is None else host.check_subset(upper)
    if not lo <= up:
        raise InputError("lower set is not contained in the upper set")
    free = len(up - lo)
    if engine == "auto":
        engine = "enum" if free <= ENUM_LIMIT else "flow"
    if engine == "enum":
        return _min_delta_enum(host, lo, up, alpha, budget)
    if engine == "flow":
        return _min_delta_flow(host, lo, up, alpha)
    raise InputError(f"unknown engine {engine!r}")


def _min_delta_enum(host, lower, upper, alpha, budget=None):
    budget = ensure_budget(budget)
    p, q = _alpha_ratio(alpha)
    view = BitView(host, upper)
    base = view.mask_of(lower)
    free_bits = [1 << i for i in range(len(view.names)) if not base >> i & 1]
    k = len(free_bits)

    best = None
    meet = join = 0
    for m in range(1 << k):
        if m % 1024 == 0:
            budget.tick(1024 if m else 1)
        mask = base
        mm = m
        while mm:
            low = mm & -mm
            mask |= free_bits[low.bit_length() - 1]
            mm ^= low
        val = view.scaled_delta(mask, p, q)
        if best is None or val < best:
            best = val
            meet = join = mask
        elif val == best:
            meet &= mask
            join |= mask
    # The meet/join of minimizers are minimizers themselves (submodularity);
    # assert cheaply rather than trust the algebra.
    assert view.scaled_delta(meet, p, q) == best
    assert view.scaled_delta(join, p, q) == best
    return MinDeltaResult(
        Fraction(best, q), view.set_of(meet) | lower, view.set_of(join) | lower, "enum"
    )


def first_violation_by_size(host, lower, upper, alpha, budget=None):
    """Smallest C with lower <= C <= upper and delta(C) < delta(lower), or None.

    Scans extensions in order of increasing size, so the returned set has
    minimum cardinality among all violating sets.
    """
    budget = ensure_budget(budget)
    p, q = _alpha_ratio(alpha)
    lo = host.check_subset(lower)
    up = host.vertex_set if upper is None else host.check_subset(upper)
    view = BitView(host, up)
    base = view.mask_of(lo)
    threshold = view.scaled_delta(base, p, q)
    extra = sorted(up - lo)
    for size in range(1, len(extra) + 1):
        for combo in combinations(extra, size):
            budget.tick()
            mask = base | view.mask_of(combo)
            if view.scaled_delta(mask, p, q) < threshold:
                return lo | frozenset(combo)
    return None


# ---------------------------------------------------------------------------
# Max-flow engine


class Dinic:
    def __init__(self, n):
        self.n = n
        self.head = [[] for _ in range(n)]
        self.to = []
        self.cap = []

    def add_edge(self, u, v, cap):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _bfs(self, s, t):
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for eid in self.head[u]:
                v = self.to[eid]
                if self.cap[eid] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        self.level = level
        return level[t] >= 0

    def _dfs(self, u, t, limit):
        # recursion depth is bounded by the BFS level of t; the closure
        # networks built below are 4 layers deep, so this stays shallow
        if u == t:
            return limit
        while self.iters[u] < len(self.head[u]):
            eid = self.head[u][self.iters[u]]
            v = self.to[eid]
            if self.cap[eid] > 0 and self.level[v] == self.level[u] + 1:
                pushed = self._dfs(v, t, min(limit, self.cap[eid]))
                if pushed > 0:
                    self.cap[eid] -= pushed
                    self.cap[eid ^ 1] += pushed
                    return pushed
            self.iters[u] += 1
        return 0

    def max_flow(self, s, t):
        flow = 0
        infinity = sum(self.cap) + 1
        while self._bfs(s, t):
            self.iters = [0] * self.n
            while True:
                pushed = self._dfs(s, t, infinity)
                if pushed == 0:
                    break
                flow += pushed
        return flow

    def residual_reachable(self, s):
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for eid in self.head[u]:
                v = self.to[eid]
                if self.cap[eid] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen

    def residual_coreachable(self, t):
        # vertices that can still reach t in the residual graph
        seen = [False] * self.n
        seen[t] = True
        queue = deque([t])
        while queue:
            u = queue.popleft()
            for eid in self.head[u]:
                # edge (v -> u) has residual capacity iff cap of that edge > 0;
                # eid here is (u -> v), its partner eid^1 is (v -> u)
                v = self.to[eid]
                if self.cap[eid ^ 1] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen


def _min_delta_flow(host, lower, upper, alpha):
    p, q = _alpha_ratio(alpha)
    sub = induced(host, upper)
    free = sorted(upper - lower)
    vid = {v: i + 2 for i, v in enumerate(free)}  # 0 = source, 1 = sink
    edges = list(sub.edges)
    n = 2 + len(free) + len(edges)
    inf = q * len(edges) + p * len(free) + 1
    net = Dinic(n)
    for j, (u, v) in enumerate(edges):
        enode = 2 + len(free) + j
        net.add_edge(0, enode, q)
        if u in vid:
            net.add_edge(enode, vid[u], inf)
        if v in vid:
            net.add_edge(enode, vid[v], inf)
    for v in free:
        net.add_edge(vid[v], 1, p)
    cut = net.max_flow(0, 1)
    gain = q * len(edges) - cut  # max of q*e(C) - p*|C \ lower|
    value = Fraction(alpha) * len(lower) - Fraction(gain, q)

    reach = net.residual_reachable(0)
    minimal = lower | frozenset(v for v in free if reach[vid[v]])
    coreach = net.residual_coreachable(1)
    maximal = lower | frozenset(v for v in free if not coreach[vid[v]])
    return MinDeltaResult(value, minimal, maximal, "flow")
