"""Membership in the smooth classes cut out by a pre-dimension.

Three variants share a coefficient alpha >= 1:

* k_plus — every subset has non-negative delta (the hereditary positive class);
* k_f    — every subset A' additionally satisfies delta(A') >= f(|A'|) for a
           monotone control function f, with the strict closedness relation;
* k_mu   — the collapsed class: the number of pairwise disjoint copies of an
           extension that is 0-minimally algebraic over a base is capped by a
           finite bound table.

The bound table stores explicit (base, extension) pairs; pairs not listed are
unconstrained, which matches supplying a bound function that is large off the
table.
"""

import enum
from fractions import Fraction

from .budget import ensure_budget
from .closures import is_closed
from .errors import InputError
from .graphs import Graph, free_amalgam, graph_from_json, graph_to_json, induced
from .bitview import BitView
from .embeddings import enumerate_maps
from .isomorphism import pair_canonical_form
from .predimension import delta, min_delta_over
from .rational import fraction_str, parse_fraction

__all__ = [
    "ClassSpec",
    "MembershipVerdict",
    "ZeroAlgebraicStatus",
    "member",
    "classify_zero_algebraic",
    "build_zero_min_witness",
    "extend_window",
    "WindowExtension",
    "default_control_function",
    "classspec_from_json",
    "classspec_to_json",
]

VARIANTS = ("k_plus", "k_f", "k_mu")


def default_control_function(n):
    """The sample control function shipped for k_f: floor(log2(n + 1)).

    Monotone, unbounded, integer-valued; no claim is made that it yields an
    amalgamation class.
    """
    if n < 0:
        raise InputError("size must be non-negative")
    return Fraction((n + 1).bit_length() - 1)


class MuEntry:
    """One row of the bound table: a base part, an extension over it, a cap.

    `pair` is a single graph containing both parts; `base` names the base
    vertices inside it.  The extension must be 0-minimally algebraic over the
    base and the cap must be at least delta(base).
    """

    def __init__(self, pair, base, bound, alpha):
        self.pair = pair
        self.base = pair.check_subset(base)
        self.ext = pair.vertex_set - self.base
        if not self.base:
            raise InputError("bound-table base part must be non-empty")
        if not self.ext:
            raise InputError("bound-table extension part must be non-empty")
        self.bound = int(bound)
        if self.bound < 0:
            raise InputError("bounds must be non-negative")
        base_delta = delta(induced(pair, self.base), alpha)
        if Fraction(self.bound) < base_delta:
            raise InputError(
                f"bound {self.bound} is below delta(base) = {fraction_str(base_delta)}"
            )
        status = classify_zero_algebraic(self.ext, self.base, pair, alpha)
        if status is not ZeroAlgebraicStatus.ZERO_MINIMALLY_ALGEBRAIC:
            raise InputError(
                "bound-table extension is not 0-minimally algebraic over its base"
            )
        self.key = pair_canonical_form(self.base, self.ext, pair)


class ClassSpec:
    def __init__(self, alpha, variant, f_table=None, mu_entries=None):
        self.alpha = Fraction(alpha)
        if self.alpha < 1:
            raise InputError("alpha must be at least 1")
        if variant not in VARIANTS:
            raise InputError(f"variant must be one of {VARIANTS}")
        self.variant = variant
        self.f_table = None
        self.mu_entries = None
        if variant == "k_f":
            if f_table is None:
                self.f_table = None  # closed-form default
            else:
                table = {int(n): Fraction(v) for n, v in f_table}
                sizes = sorted(table)
                values = [table[n] for n in sizes]
                if any(a > b for a, b in zip(values, values[1:])):
                    raise InputError("control function table must be non-decreasing")
                if len(values) > 1 and values[0] == values[-1]:
                    raise InputError("control function table must grow on its range")
                self.f_table = table
        elif f_table is not None:
            raise InputError("a control function only makes sense for k_f")
        if variant == "k_mu":
            if not mu_entries:
                raise InputError("k_mu needs a bound table")
            self.mu_entries = list(mu_entries)
        elif mu_entries:
            raise InputError("a bound table only makes sense for k_mu")

    def f_value(self, n):
        if self.f_table is None:
            return default_control_function(n)
        if n not in self.f_table:
            raise InputError(f"control function table does not cover size {n}")
        return self.f_table[n]

    def describe(self):
        return {"alpha": fraction_str(self.alpha), "variant": self.variant}


class MembershipVerdict:
    def __init__(self, member, witness=None, reason=""):
        self.member = member
        self.witness = witness
        self.reason = reason

    def __bool__(self):
        return self.member

    def __repr__(self):
        if self.member:
            return "MembershipVerdict(member)"
        return f"MembershipVerdict(non-member: {self.reason})"


def member(graph, spec, engine="auto", budget=None):
    """Class membership with a replayable witness on failure."""
    budget = ensure_budget(budget)
    if spec.variant == "k_plus":
        return _member_plus(graph, spec, engine, budget)
    if spec.variant == "k_f":
        return _member_f(graph, spec, budget)
    return _member_mu(graph, spec, engine, budget)


def _member_plus(graph, spec, engine, budget):
    if graph.num_vertices == 0:
        return MembershipVerdict(True)
    res = min_delta_over(graph, frozenset(), None, spec.alpha, engine=engine, budget=budget)
    if res.value >= 0:
        return MembershipVerdict(True)
    return MembershipVerdict(
        False,
        witness=res.minimal,
        reason=f"subset with delta = {fraction_str(res.value)} < 0",
    )


def _member_f(graph, spec, budget):
    # the f constraint subsumes k_plus only when f >= 0, so check both
    plus = _member_plus(graph, spec, "auto", budget)
    if not plus.member:
        return plus
    view = BitView(graph)
    p, q = spec.alpha.numerator, spec.alpha.denominator
    bounds = {}
    for n in range(graph.num_vertices + 1):
        bounds[n] = spec.f_value(n)
    for mask in range(1 << graph.num_vertices):
        budget.tick()
        n = mask.bit_count()
        if Fraction(view.scaled_delta(mask, p, q), q) < bounds[n]:
            witness = view.set_of(mask)
            return MembershipVerdict(
                False,
                witness=witness,
                reason=f"subset of size {n} below the control bound {fraction_str(bounds[n])}",
            )
    return MembershipVerdict(True)


def _member_mu(graph, spec, engine, budget):
    plus = _member_plus(graph, spec, engine, budget)
    if not plus.member:
        return plus
    for entry in spec.mu_entries:
        for base_image, ext_images in _pair_occurrences(entry, graph, budget).items():
            count = _max_disjoint(ext_images, budget)
            if count > entry.bound:
                return MembershipVerdict(
                    False,
                    witness=(base_image, entry.pair, count),
                    reason=(
                        f"{count} pairwise disjoint copies of the bounded extension "
                        f"over {sorted(base_image)} exceed the cap {entry.bound}"
                    ),
                )
    return MembershipVerdict(True)


def _pair_occurrences(entry, graph, budget):
    """All realizations of a bound-table pair in `graph`, grouped by base image."""
    occurrences = {}
    for mapping in enumerate_maps(entry.pair, graph, budget):
        base_image = frozenset(mapping[v] for v in entry.base)
        ext_image = frozenset(mapping[v] for v in entry.ext)
        occurrences.setdefault(base_image, set()).add(ext_image)
    return occurrences


def _max_disjoint(sets, budget):
    """Exact maximum number of pairwise disjoint sets (greedy undercounts)."""
    family = sorted(sets, key=sorted)
    best = 0

    def extend(i, used, count):
        nonlocal best
        if count > best:
            best = count
        if i == len(family) or count + (len(family) - i) <= best:
            return
        budget.tick()
        if not (family[i] & used):
            extend(i + 1, used | family[i], count + 1)
        extend(i + 1, used, count)

    extend(0, frozenset(), 0)
    return best


class ZeroAlgebraicStatus(enum.Enum):
    NONE = "none"
    ZERO_ALGEBRAIC = "zero_algebraic"
    ZERO_MINIMALLY_ALGEBRAIC = "zero_minimally_algebraic"


def _is_zero_algebraic(ext_mask, base_mask, view, p, q, budget):
    base_val = view.scaled_delta(base_mask, p, q)
    if view.scaled_delta(base_mask | ext_mask, p, q) != base_val:
        return False
    # walk all proper non-empty submasks of the extension
    m = (ext_mask - 1) & ext_mask
    while m:
        budget.tick()
        if view.scaled_delta(base_mask | m, p, q) <= base_val:
            return False
        m = (m - 1) & ext_mask
    return True


def classify_zero_algebraic(ext, base, host, alpha, budget=None):
    """Is `ext` 0-algebraic / 0-minimally algebraic over `base` in `host`?

    0-algebraic: delta(ext/base) = 0 while every proper non-empty piece of the
    extension adds strictly positive delta.  Minimality asks that no proper
    subset of the base already supports the same relation.
    """
    budget = ensure_budget(budget)
    b = host.check_subset(base)
    e = host.check_subset(ext)
    if not b or not e:
        raise InputError("both parts must be non-empty")
    if b & e:
        raise InputError("base and extension must be disjoint")
    alpha = Fraction(alpha)
    p, q = alpha.numerator, alpha.denominator
    view = BitView(host, b | e)
    base_mask = view.mask_of(b)
    ext_mask = view.mask_of(e)
    if not _is_zero_algebraic(ext_mask, base_mask, view, p, q, budget):
        return ZeroAlgebraicStatus.NONE
    # proper subsets of the base, including the empty set
    m = (base_mask - 1) & base_mask
    while True:
        budget.tick()
        if _is_zero_algebraic(ext_mask, m, view, p, q, budget):
            return ZeroAlgebraicStatus.ZERO_ALGEBRAIC
        if m == 0:
            break
        m = (m - 1) & base_mask
    return ZeroAlgebraicStatus.ZERO_MINIMALLY_ALGEBRAIC


def build_zero_min_witness(base, m):
    """A cycle of length m wired to `base` so that it is 0-minimally algebraic
    over it at alpha = 2, with total relative delta zero.

    Each cycle vertex gets exactly one strut into the base: vertex i to the
    i-th base vertex while they last, then everything to the last one.
    Distinct m give non-isomorphic witnesses (the cycle length differs).
    """
    if base.num_vertices == 0:
        raise InputError("base must be non-empty")
    if m < max(3, base.num_vertices):
        raise InputError(f"cycle length must be at least max(3, |base|) = {max(3, base.num_vertices)}")
    anchors = list(base.order) if base.is_ordered() else list(base.vertices)
    taken = set(base.vertices)
    cycle = []
    for i in range(1, m + 1):
        name = f"c{i}"
        while name in taken:
            name += "'"
        taken.add(name)
        cycle.append(name)
    edges = list(base.edges)
    for i in range(m):
        edges.append((cycle[i], cycle[(i + 1) % m]))
    n = len(anchors)
    for i in range(m):
        target = anchors[i] if i < n else anchors[n - 1]
        edges.append((cycle[i], target))
    return Graph(list(base.vertices) + cycle, edges)


class WindowExtension:
    def __init__(self, window, base_map, attached_map, attached_image, shared):
        self.window = window
        self.base_map = base_map
        self.attached_map = attached_map
        self.attached_image = attached_image
        self.shared = shared


def extend_window(window, anchor, pattern, glue, alpha, engine="auto", budget=None):
    """Extend a finite window by a free amalgam of `pattern` over a closed anchor.

    Preconditions (checked, with witnesses in the error message): the anchor is
    closed in the window, and the glued part is closed in the pattern.  The
    guarantees that the window stays closed in the result and the new copy's
    image is closed are re-verified rather than assumed.
    """
    budget = ensure_budget(budget)
    a = window.check_subset(anchor)
    verdict = is_closed(a, None, window, alpha, engine=engine, budget=budget)
    if not verdict:
        raise InputError(
            f"anchor is not closed in the window; violated by {sorted(verdict.violator)}"
        )
    glue = dict(glue)
    if frozenset(glue.values()) != a:
        raise InputError("glue must cover exactly the anchor set")
    dom = pattern.check_subset(glue.keys())
    verdict = is_closed(dom, None, pattern, alpha, engine=engine, budget=budget)
    if not verdict:
        raise InputError(
            f"glued part is not closed in the pattern; violated by {sorted(verdict.violator)}"
        )
    amalgam = free_amalgam(window, pattern, glue)
    result = amalgam.graph
    image = amalgam.right_image()
    check_window = is_closed(window.vertex_set, None, result, alpha, engine=engine, budget=budget)
    check_image = is_closed(image, None, result, alpha, engine=engine, budget=budget)
    if not check_window or not check_image:
        bad = check_window.violator or check_image.violator
        raise InputError(
            f"free amalgam lost closedness (violated by {sorted(bad)}); "
            "the inputs do not belong to a free-amalgamation class at this alpha"
        )
    return WindowExtension(result, amalgam.left_map, amalgam.right_map, image, amalgam.shared)


def classspec_from_json(data):
    if not isinstance(data, dict):
        raise InputError("class spec JSON must be an object")
    alpha = parse_fraction(data.get("alpha", "2"))
    variant = data.get("variant", "k_plus")
    f_table = None
    if data.get("f") is not None:
        try:
            f_table = [(int(n), parse_fraction(v)) for n, v in data["f"]]
        except (TypeError, ValueError) as exc:
            raise InputError("control function table must be [[size, bound], ...]") from exc
    mu_entries = None
    if data.get("mu") is not None:
        mu_entries = []
        for item in data["mu"]:
            if not isinstance(item, dict) or not {"A", "B", "bound"} <= set(item):
                raise InputError("bound table entries need 'A', 'B' and 'bound'")
            base_graph = graph_from_json(item["A"])
            pair_graph = graph_from_json(item["B"])
            if not base_graph.vertex_set <= pair_graph.vertex_set:
                raise InputError("entry base must be part of the pair graph")
            if induced(pair_graph, base_graph.vertex_set) != base_graph:
                raise InputError("entry base does not match the pair graph")
            mu_entries.append(MuEntry(pair_graph, base_graph.vertex_set, item["bound"], alpha))
    return ClassSpec(alpha, variant, f_table=f_table, mu_entries=mu_entries)


def classspec_to_json(spec):
    data = {"alpha": fraction_str(spec.alpha), "variant": spec.variant}
    if spec.variant == "k_f" and spec.f_table is not None:
        data["f"] = [[str(n), fraction_str(v)] for n, v in sorted(spec.f_table.items())]
    if spec.variant == "k_mu":
        data["mu"] = [
            {
                "A": graph_to_json(induced(e.pair, e.base)),
                "B": graph_to_json(e.pair),
                "bound": e.bound,
            }
            for e in spec.mu_entries
        ]
    return data
