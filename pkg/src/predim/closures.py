"""Self-sufficiency: closedness tests and the closure operator.

A set A is closed in B (inside a host graph) when delta(C) >= delta(A) for
every intermediate A <= C <= B.  The closure of S is the unique smallest
closed superset of S; it is computed by repeatedly absorbing the
inclusion-minimal delta-minimizer, which is always contained in the closure.
"""

from itertools import combinations

from .budget import ensure_budget
from .errors import InputError
from .graphs import induced
from .predimension import (
    ENUM_LIMIT,
    delta,
    first_violation_by_size,
    min_delta_over,
)

__all__ = ["ClosednessVerdict", "ClosureResult", "is_closed", "is_strictly_closed", "closure"]


class ClosednessVerdict:
    """Boolean verdict with a violating intermediate set on failure."""

    def __init__(self, closed, violator=None, engine=None):
        self.closed = closed
        self.violator = violator
        self.engine = engine

    def __bool__(self):
        return self.closed

    def __repr__(self):
        if self.closed:
            return "ClosednessVerdict(closed)"
        return f"ClosednessVerdict(violated by {sorted(self.violator)})"


class ClosureResult:
    def __init__(self, closure, certificate):
        self.closure = closure
        self.certificate = tuple(certificate)  # violating sets absorbed, in order

    def __repr__(self):
        return f"ClosureResult({sorted(self.closure)}, {len(self.certificate)} absorptions)"


def _validate_chain(sub, sup, host):
    a = host.check_subset(sub)
    b = host.vertex_set if sup is None else host.check_subset(sup)
    if not a <= b:
        raise InputError("the lower set must be contained in the upper set")
    return a, b


def is_closed(sub, sup, host, alpha, engine="auto", budget=None):
    """Is delta(C) >= delta(sub) for every sub <= C <= sup?

    On failure the verdict carries a violating C: of minimum cardinality when
    the exhaustive engine ran, otherwise the inclusion-minimal set of minimum
    delta (minimum-cardinality search does not scale past desk size).
    """
    a, b = _validate_chain(sub, sup, host)
    budget = ensure_budget(budget)
    base = delta(induced(host, a), alpha)
    use_enum = engine == "enum" or (engine == "auto" and len(b - a) <= ENUM_LIMIT)
    if use_enum:
        violator = first_violation_by_size(host, a, b, alpha, budget)
        return ClosednessVerdict(violator is None, violator, "enum")
    res = min_delta_over(host, a, b, alpha, engine="flow")
    if res.value >= base:
        return ClosednessVerdict(True, None, "flow")
    return ClosednessVerdict(False, res.minimal, "flow")


def is_strictly_closed(sub, sup, host, alpha, engine="auto", budget=None):
    """Is delta(C) > delta(sub) for every proper extension sub < C <= sup?"""
    a, b = _validate_chain(sub, sup, host)
    budget = ensure_budget(budget)
    base = delta(induced(host, a), alpha)
    use_enum = engine == "enum" or (engine == "auto" and len(b - a) <= ENUM_LIMIT)
    if use_enum:
        # scan by size so the witness has minimum cardinality
        view_extra = sorted(b - a)
        for size in range(1, len(view_extra) + 1):
            for combo in combinations(view_extra, size):
                budget.tick()
                c = a | frozenset(combo)
                if delta(induced(host, c), alpha) <= base:
                    return ClosednessVerdict(False, c, "enum")
        return ClosednessVerdict(True, None, "enum")
    res = min_delta_over(host, a, b, alpha, engine="flow")
    if res.value < base:
        return ClosednessVerdict(False, res.minimal, "flow")
    if res.value == base and res.maximal != a:
        # delta is attained with equality by some proper extension
        return ClosednessVerdict(False, res.maximal, "flow")
    return ClosednessVerdict(True, None, "flow")


def closure(subset, host, alpha, within=None, engine="auto", budget=None):
    """The unique smallest closed superset of `subset` in the host.

    Absorption loop: while the current set is not closed, replace it by the
    inclusion-minimal minimizer of delta over its supersets.  Each absorbed
    set is recorded as the certificate.  Idempotent and monotone in S.
    """
    budget = ensure_budget(budget)
    current = host.check_subset(subset)
    upper = host.vertex_set if within is None else host.check_subset(within)
    if not current <= upper:
        raise InputError("the set must be contained in the closure bound")
    certificate = []
    while True:
        budget.tick()
        res = min_delta_over(host, current, upper, alpha, engine=engine, budget=budget)
        base = delta(induced(host, current), alpha)
        if res.value >= base:
            # the minimum over supersets is attained at the set itself: closed
            # (ties with proper supersets do not violate closedness)
            return ClosureResult(current, certificate)
        certificate.append(res.minimal)
        current = res.minimal
