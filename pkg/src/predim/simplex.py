"""Exact rational linear programming by the two-phase simplex method.

Minimizes c.x subject to A_ub x <= b_ub, A_eq x = b_eq, x >= 0, entirely in
Fraction arithmetic.  Bland's rule guarantees termination.  Dual values are
read off the final tableau so certificates can be cross-checked by strong
duality.  Problem sizes here are tiny (a dozen variables, a few dozen
constraints), so clarity wins over sparsity tricks.
"""

from fractions import Fraction

from .errors import InputError

__all__ = ["LPResult", "solve_lp"]

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class LPResult:
    def __init__(self, status, value=None, x=None, duals=None):
        self.status = status
        self.value = value
        self.x = x
        self.duals = duals

    def __repr__(self):
        return f"LPResult({self.status}, value={self.value})"


def _pivot(tableau, basis, row, col):
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    for r, line in enumerate(tableau):
        if r != row and line[col] != 0:
            factor = line[col]
            tableau[r] = [a - factor * b for a, b in zip(line, tableau[row])]
    basis[row] = col


def _run_simplex(tableau, basis, allowed):
    """Bland's rule on the cost row (last row). `allowed` masks enterable columns."""
    m = len(tableau) - 1
    width = len(tableau[0])
    while True:
        cost = tableau[-1]
        col = next(
            (j for j in range(width - 1) if allowed[j] and cost[j] < 0),
            None,
        )
        if col is None:
            return OPTIMAL
        ratios = [
            (tableau[r][-1] / tableau[r][col], basis[r], r)
            for r in range(m)
            if tableau[r][col] > 0
        ]
        if not ratios:
            return UNBOUNDED
        _, _, row = min(ratios)
        _pivot(tableau, basis, row, col)


def solve_lp(c, a_ub=(), b_ub=(), a_eq=(), b_eq=()):
    """Minimize c.x with x >= 0 under inequality and equality constraints."""
    c = [Fraction(v) for v in c]
    n = len(c)
    rows = []
    senses = []
    for coeffs, rhs in zip(a_ub, b_ub):
        if len(coeffs) != n:
            raise InputError("inequality row has wrong width")
        rows.append(([Fraction(v) for v in coeffs], Fraction(rhs)))
        senses.append("<=")
    for coeffs, rhs in zip(a_eq, b_eq):
        if len(coeffs) != n:
            raise InputError("equality row has wrong width")
        rows.append(([Fraction(v) for v in coeffs], Fraction(rhs)))
        senses.append("=")
    m = len(rows)

    # normalize right-hand sides to be non-negative
    for i, (coeffs, rhs) in enumerate(rows):
        if rhs < 0:
            rows[i] = ([-v for v in coeffs], -rhs)
            senses[i] = {"<=": ">=", ">=": "<=", "=": "="}[senses[i]]

    # columns: x (n) | slack/surplus (one per inequality) | artificials
    slack_of = {}
    next_col = n
    for i, s in enumerate(senses):
        if s in ("<=", ">="):
            slack_of[i] = next_col
            next_col += 1
    art_of = {}
    for i, s in enumerate(senses):
        if s in ("=", ">="):
            art_of[i] = next_col
            next_col += 1
        else:  # "<=" rows start with their slack in the basis
            pass
    width = next_col + 1  # + rhs

    tableau = []
    basis = []
    for i, (coeffs, rhs) in enumerate(rows):
        line = [Fraction(0)] * width
        for j, v in enumerate(coeffs):
            line[j] = v
        s = senses[i]
        if s == "<=":
            line[slack_of[i]] = Fraction(1)
            basis.append(slack_of[i])
        elif s == ">=":
            line[slack_of[i]] = Fraction(-1)
            line[art_of[i]] = Fraction(1)
            basis.append(art_of[i])
        else:
            line[art_of[i]] = Fraction(1)
            basis.append(art_of[i])
        line[-1] = rhs
        tableau.append(line)

    artificial_cols = set(art_of.values())

    # phase 1: minimize the sum of artificials
    cost = [Fraction(0)] * width
    for j in artificial_cols:
        cost[j] = Fraction(1)
    tableau.append(cost)
    for r in range(m):
        if basis[r] in artificial_cols:
            tableau[-1] = [a - b for a, b in zip(tableau[-1], tableau[r])]
    allowed = [True] * (width - 1)
    status = _run_simplex(tableau, basis, allowed)
    assert status == OPTIMAL  # phase 1 is bounded below by 0
    # the cost row's rhs holds -objective
    if -tableau[-1][-1] != 0:
        return LPResult(INFEASIBLE)
    # drive any artificial still in the basis out (degenerate rows)
    for r in range(m):
        if basis[r] in artificial_cols:
            col = next(
                (
                    j
                    for j in range(width - 1)
                    if j not in artificial_cols and tableau[r][j] != 0
                ),
                None,
            )
            if col is not None:
                _pivot(tableau, basis, r, col)
            # an all-zero row is redundant; the artificial stays basic at 0

    # phase 2
    tableau.pop()
    cost = [Fraction(0)] * width
    for j in range(n):
        cost[j] = c[j]
    tableau.append(cost)
    for r in range(m):
        if tableau[-1][basis[r]] != 0:
            factor = tableau[-1][basis[r]]
            tableau[-1] = [a - factor * b for a, b in zip(tableau[-1], tableau[r])]
    allowed = [j not in artificial_cols for j in range(width - 1)]
    status = _run_simplex(tableau, basis, allowed)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)

    x = [Fraction(0)] * n
    for r in range(m):
        if basis[r] < n:
            x[basis[r]] = tableau[r][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))

    # duals: for a slack column, reduced cost = -y_i; for an artificial
    # (cost 0 in phase 2), reduced cost = -y_i as well
    duals = [Fraction(0)] * m
    final_cost = tableau[-1]
    for i in range(m):
        col = slack_of.get(i)
        if senses[i] == ">=":
            # surplus has coefficient -1: reduced cost = +y_i
            duals[i] = final_cost[col]
        elif senses[i] == "<=":
            duals[i] = -final_cost[col]
        else:
            duals[i] = -final_cost[art_of[i]]
    return LPResult(OPTIMAL, value, tuple(x), tuple(duals))
