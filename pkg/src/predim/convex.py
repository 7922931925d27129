"""Feasibility of the convex Ramsey matrix condition.

A 0/1 matrix Y satisfies the condition at threshold t when some probability
combination of its rows has column spread at most t (the spread equals the
worst value over Dirac weights).  Choosing a row subset with strictly
positive probabilities is equivalent to allowing zeros over all rows, so a
single exact LP decides the condition: minimize the spread over the whole
probability simplex.

The default threshold is 1/2; it is a parameter because the same machinery
answers the epsilon-relaxed question.
"""

from fractions import Fraction
from itertools import combinations

from .budget import ensure_budget
from .errors import BudgetExhausted, InputError
from .matrices import BinaryMatrix, dirac_weights, worst_dirac_value
from .rational import fraction_str
from .simplex import OPTIMAL, solve_lp

__all__ = [
    "FeasibilityVerdict",
    "SPREAD_THRESHOLD",
    "TREE_PAIR_MATRIX",
    "decide_convex_ramsey",
    "constant_column_fast_path",
    "constant_row_fast_path",
    "spread_optimum",
    "classify_all",
    "ClassificationSummary",
    "paper_dual_explanation",
]

# the amenability-flavored threshold; any spread <= 1/2 defeats every pair of
# product measures by the Dirac reduction
SPREAD_THRESHOLD = Fraction(1, 2)

# the full-coloring matrix produced by the tree-pair coloring construction
TREE_PAIR_MATRIX = BinaryMatrix(
    [
        (1, 1, 1, 1, 0, 0),
        (1, 1, 1, 0, 1, 0),
        (1, 1, 1, 0, 0, 1),
        (0, 1, 1, 0, 0, 0),
        (1, 0, 1, 0, 0, 0),
        (1, 1, 0, 0, 0, 0),
    ]
)


class FeasibilityVerdict:
    def __init__(self, feasible, worst_value, threshold, certificate=None,
                 dirac_witness=None, fast_path=None, duals=None, explanation=None):
        self.feasible = feasible
        self.worst_value = worst_value  # exact LP optimum (minimal spread)
        self.threshold = threshold
        self.certificate = certificate  # probability row achieving the optimum
        self.dirac_witness = dirac_witness  # (plus, minus) column pair, fast path
        self.fast_path = fast_path
        self.duals = duals
        self.explanation = explanation

    def __bool__(self):
        return self.feasible

    def describe(self):
        data = {
            "feasible": self.feasible,
            "worst_value": fraction_str(self.worst_value),
            "threshold": fraction_str(self.threshold),
        }
        if self.certificate is not None:
            data["certificate"] = [fraction_str(x) for x in self.certificate]
        if self.dirac_witness is not None:
            data["dirac_witness"] = list(self.dirac_witness)
        if self.fast_path is not None:
            data["fast_path"] = self.fast_path
        if self.explanation is not None:
            data["explanation"] = self.explanation
        return data


def constant_column_fast_path(matrix, threshold=SPREAD_THRESHOLD):
    """Infeasible immediately when an all-1 and an all-0 column coexist.

    Any probability row then yields spread exactly 1 between those columns,
    so the verdict holds whenever the threshold is below 1.
    """
    if threshold >= 1:
        return None
    ones = None
    zeros = None
    for j in range(matrix.num_cols):
        col = matrix.column(j)
        if ones is None and all(x == 1 for x in col):
            ones = j
        if zeros is None and all(x == 0 for x in col):
            zeros = j
    if ones is None or zeros is None:
        return None
    return FeasibilityVerdict(
        False,
        Fraction(1),
        threshold,
        dirac_witness=(ones, zeros),
        fast_path="constant_columns",
    )


def constant_row_fast_path(matrix, threshold=SPREAD_THRESHOLD):
    """Feasible immediately when some row is constant: point mass on it."""
    if threshold < 0:
        return None
    for i, row in enumerate(matrix.rows):
        if len(set(row)) == 1:
            cert = tuple(
                Fraction(1) if k == i else Fraction(0) for k in range(matrix.num_rows)
            )
            return FeasibilityVerdict(
                True, Fraction(0), threshold, certificate=cert, fast_path="constant_row"
            )
    return None


def spread_optimum(matrix):
    """Exact minimum of the column spread of R*Y over the probability simplex.

    LP: minimize t subject to (R*Y)_j - (R*Y)_k <= t for all ordered column
    pairs, sum R = 1, R >= 0, t >= 0.
    """
    n, m = matrix.num_rows, matrix.num_cols
    c = [Fraction(0)] * n + [Fraction(1)]
    a_ub = []
    b_ub = []
    for j in range(m):
        for k in range(m):
            if j == k:
                continue
            row = [Fraction(matrix.rows[i][j] - matrix.rows[i][k]) for i in range(n)]
            row.append(Fraction(-1))
            a_ub.append(row)
            b_ub.append(Fraction(0))
    a_eq = [[Fraction(1)] * n + [Fraction(0)]]
    b_eq = [Fraction(1)]
    result = solve_lp(c, a_ub, b_ub, a_eq, b_eq)
    if result.status != OPTIMAL:
        raise RuntimeError(f"spread LP ended {result.status}; it is always solvable")
    return result


def decide_convex_ramsey(matrix, threshold=SPREAD_THRESHOLD, use_fast_paths=True):
    """Does some probability row over Y keep every Dirac value within the threshold?

    Zero probabilities encode the row-subset choice, so one LP over all rows
    decides the condition.  The verdict is replayable: feasible certificates
    satisfy worst_dirac_value(R, Y) = worst_value <= threshold, infeasible
    verdicts carry the exact optimum, which exceeds the threshold.
    """
    threshold = Fraction(threshold)
    if threshold < 0:
        raise InputError("threshold must be non-negative")
    if use_fast_paths:
        verdict = constant_row_fast_path(matrix, threshold)
        if verdict is not None:
            return _attach_explanation(matrix, verdict)
        verdict = constant_column_fast_path(matrix, threshold)
        if verdict is not None:
            return _attach_explanation(matrix, verdict)
    lp = spread_optimum(matrix)
    optimum = lp.value
    certificate = lp.x[: matrix.num_rows]
    verdict = FeasibilityVerdict(
        optimum <= threshold,
        optimum,
        threshold,
        certificate=certificate if optimum <= threshold else None,
        duals=lp.duals,
    )
    return _attach_explanation(matrix, verdict)


def _attach_explanation(matrix, verdict):
    if not verdict.feasible and matrix.row_set() == TREE_PAIR_MATRIX.row_set():
        verdict.explanation = paper_dual_explanation()
    return verdict


def paper_dual_explanation():
    """The human-readable inequality system that defeats the tree-pair matrix.

    With A_i the probability of rows carrying a 1 in column 3+i and B, C, D
    the probabilities of rows carrying a 0 in columns 1..3, a spread within
    1/2 forces nine inequalities whose sum reads
    3*(A1+A2+A3+B+C+D) >= 9/2, impossible for disjoint row groups of total
    probability at most 1.
    """
    lines = [
        "ones in the first three columns give R*Y entries >= 1 - (B|C|D);",
        "zeros in the last three columns give R*Y entries <= A_i;",
        "spread <= 1/2 then needs:",
    ]
    for left in ("A1", "A2", "A3"):
        for right in ("B", "C", "D"):
            lines.append(f"  {left} + {right} >= 1/2")
    lines.append("summing: 3*(A1+A2+A3+B+C+D) >= 9*(1/2), so the total is >= 3/2;")
    lines.append("the index groups are disjoint, so the total is <= 1 - contradiction.")
    return "\n".join(lines)


class ClassificationSummary:
    def __init__(self, rows, cols, threshold, total, feasible, infeasible,
                 infeasible_matrices, partial):
        self.rows = rows
        self.cols = cols
        self.threshold = threshold
        self.total = total
        self.feasible = feasible
        self.infeasible = infeasible
        self.infeasible_matrices = infeasible_matrices  # canonical (row-sorted) reps
        self.partial = partial

    def describe(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "threshold": fraction_str(self.threshold),
            "classes_total": self.total,
            "feasible": self.feasible,
            "infeasible": self.infeasible,
            "partial": self.partial,
            "infeasible_matrices": [
                [list(r) for r in rows] for rows in self.infeasible_matrices
            ],
        }


def classify_all(n, m, threshold=SPREAD_THRESHOLD, budget=None):
    """Census of all n x m matrices with distinct rows, up to row permutation.

    Each permutation class is represented by its row-sorted (minimal) member;
    the summary counts feasible/infeasible classes and lists the infeasible
    representatives.  Runs under a budget; an exhausted budget yields a
    partial summary flagged as such.
    """
    if n < 1 or m < 1:
        raise InputError("need at least one row and one column")
    budget = ensure_budget(budget)
    all_rows = [tuple((v >> j) & 1 for j in range(m - 1, -1, -1)) for v in range(1 << m)]
    total = feasible = infeasible = 0
    bad = []
    partial = False
    try:
        for combo in combinations(all_rows, n):
            budget.tick()
            matrix = BinaryMatrix(combo)
            total += 1
            if decide_convex_ramsey(matrix, threshold).feasible:
                feasible += 1
            else:
                infeasible += 1
                bad.append(matrix.rows)
    except BudgetExhausted:
        partial = True
    return ClassificationSummary(n, m, threshold, total, feasible, infeasible, bad, partial)
