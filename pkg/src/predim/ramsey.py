"""Density-based refutations of vertex Ramsey arrowing.

The refutation certificate is the strict inequality
m(C) < r/2 * eta*(B): whenever it holds, some r-coloring of C's vertices has
no monochromatic induced copy of B.  The exhaustive coloring search is an
independent oracle that can confirm a certificate on small hosts, and is also
usable on its own; it never reports a wrong verdict — running out of budget
is a distinct outcome.
"""

from fractions import Fraction

from .budget import ensure_budget
from .classes import member
from .closures import is_closed, is_strictly_closed
from .errors import BudgetExhausted
from .density import degeneracy, max_density
from .embeddings import enumerate_copies
from .errors import InputError
from .graphs import cycle_graph, order_expand
from .rational import fraction_str

__all__ = [
    "RamseyCertificate",
    "ColoringSearchResult",
    "non_ramsey_certificate",
    "search_bad_coloring",
    "one_point_refutation",
]

SEARCH_SIZE_LIMIT = 14


class RamseyCertificate:
    def __init__(self, B, C, r, m_C, eta_star_B, verdict, bad_coloring=None, coloring_status=None):
        self.B = B
        self.C = C
        self.r = r
        self.m_C = m_C
        self.eta_star_B = eta_star_B
        self.verdict = verdict  # "refuted" | "inconclusive"
        self.bad_coloring = bad_coloring
        self.coloring_status = coloring_status

    def describe(self):
        data = {
            "verdict": self.verdict,
            "max_density_C": fraction_str(self.m_C),
            "min_degree_parameter_B": self.eta_star_B,
            "r": self.r,
            "bound": fraction_str(Fraction(self.r * self.eta_star_B, 2)),
        }
        if self.coloring_status is not None:
            data["coloring_search"] = self.coloring_status
        if self.bad_coloring is not None:
            data["bad_coloring"] = {v: c for v, c in sorted(self.bad_coloring.items())}
        return data


class ColoringSearchResult:
    def __init__(self, status, coloring=None):
        self.status = status  # "found" | "exhausted" | "unknown"
        self.coloring = coloring


def search_bad_coloring(host, pattern, r, budget=None):
    """A vertex r-coloring of `host` with no monochromatic induced copy of
    `pattern`, or proof by exhaustion that none exists.

    The search fixes the order in which new colors appear (colorings are
    ranked up to color permutation), which is sound because the property is
    invariant under renaming colors.  Budget exhaustion yields "unknown",
    never a wrong verdict.
    """
    if r < 1:
        raise InputError("need at least one color")
    budget = ensure_budget(budget)
    try:
        copies = [sorted(e.image) for e in enumerate_copies(pattern, host, budget)]
    except BudgetExhausted:
        return ColoringSearchResult("unknown")
    vertices = sorted(
        host.vertices,
        key=lambda v: (-sum(1 for im in copies if v in im), v),
    )
    position = {v: i for i, v in enumerate(vertices)}
    # for each copy, the last of its vertices in placement order: the copy is
    # fully colored exactly when that vertex is placed
    watch = {}
    for im in copies:
        last = max(im, key=position.get)
        watch.setdefault(last, []).append(im)

    coloring = {}

    def place(i, used):
        budget.tick()
        if i == len(vertices):
            return True
        v = vertices[i]
        for color in range(min(used + 1, r)):
            coloring[v] = color
            ok = True
            for im in watch.get(v, ()):
                first = coloring[im[0]]
                if all(coloring[w] == first for w in im[1:]):
                    ok = False
                    break
            if ok and place(i + 1, max(used, color + 1)):
                return True
            del coloring[v]
        return False

    try:
        if place(0, 0):
            return ColoringSearchResult("found", dict(coloring))
        return ColoringSearchResult("exhausted")
    except BudgetExhausted:
        return ColoringSearchResult("unknown")


def non_ramsey_certificate(B, C, r, budget=None, search_limit=SEARCH_SIZE_LIMIT):
    """Certificate that C does not arrow (B) in r colors, via the density bound.

    Refuted means m(C) < r/2 * eta*(B) holds exactly; on hosts up to
    `search_limit` vertices a concrete bad coloring is searched for and
    attached as oracle confirmation.
    """
    if r < 2:
        raise InputError("the arrowing relation needs r >= 2")
    budget = ensure_budget(budget)
    m_C = max_density(C, budget=budget).value
    eta = degeneracy(B)
    refuted = m_C < Fraction(r * eta, 2)
    bad = None
    status = None
    if refuted and C.num_vertices <= search_limit:
        result = search_bad_coloring(C, B, r, budget)
        status = result.status
        if result.status == "found":
            bad = result.coloring
        elif result.status == "exhausted":
            # the density bound guarantees a bad coloring exists; exhaustion
            # here would contradict it
            raise RuntimeError("density certificate contradicted by exhaustive search")
    return RamseyCertificate(
        B, C, r, m_C, eta,
        "refuted" if refuted else "inconclusive",
        bad_coloring=bad,
        coloring_status=status,
    )


class OnePointReport:
    def __init__(self, spec, n, r, ordered, checks, valid):
        self.spec = spec
        self.n = n
        self.r = r
        self.ordered = ordered
        self.checks = checks
        self.valid = valid

    def describe(self):
        data = dict(self.spec.describe())
        data.update(
            {
                "cycle_length": self.n,
                "colors": self.r,
                "ordered": self.ordered,
                "checks": self.checks,
                "refutation_schema_valid": self.valid,
            }
        )
        return data


def one_point_refutation(spec, n, r, ordered=False, engine="auto", budget=None):
    """Single-vertex Ramsey refutation schema over a cycle.

    Builds the n-cycle L, checks it belongs to the class, that every vertex is
    a closed (strictly closed for k_f) singleton in L, that its min-degree
    parameter is 2, and that r exceeds alpha — which yields
    m(C) <= alpha < r/2 * 2 for every member C, so no member arrows L.
    The coloring side is blind to any vertex order, hence the same schema
    covers the ordered expansion.
    """
    if n < 3:
        raise InputError("the cycle needs at least 3 vertices")
    if r <= spec.alpha:
        raise InputError(
            f"the bound needs r > alpha: {r} <= {fraction_str(spec.alpha)}"
        )
    budget = ensure_budget(budget)
    L = cycle_graph(n)
    if ordered:
        L = order_expand(L, sorted(L.vertices))
    checks = {}
    verdict = member(L, spec, engine=engine, budget=budget)
    checks["cycle_in_class"] = bool(verdict)
    closed_check = is_strictly_closed if spec.variant == "k_f" else is_closed
    checks["all_vertices_closed"] = all(
        bool(closed_check({v}, None, L, spec.alpha, engine=engine, budget=budget))
        for v in L.vertices
    )
    eta = degeneracy(L)
    checks["min_degree_parameter"] = eta
    checks["min_degree_parameter_is_2"] = eta == 2
    # members have every subset's delta >= 0, i.e. e(S) <= alpha |S|, so the
    # maximum density of any member is at most alpha
    checks["universal_density_bound"] = (
        f"m(C) <= {fraction_str(spec.alpha)} < {fraction_str(Fraction(r * eta, 2))}"
    )
    checks["bound_strict"] = Fraction(spec.alpha) < Fraction(r * eta, 2)
    valid = (
        checks["cycle_in_class"]
        and checks["all_vertices_closed"]
        and checks["min_degree_parameter_is_2"]
        and checks["bound_strict"]
    )
    return OnePointReport(spec, n, r, ordered, checks, valid)
