"""Coloring matrices, probability rows, and weight columns.

A coloring matrix stacks the 0/1 color rows of the closed copies of a pattern
under a fixed enumeration of its sub-copies; duplicate rows are never kept.
Weight columns are differences of two probability vectors, so they sum to
zero; the extreme ones are the Dirac weights with a single +1 and a single -1.
"""

from fractions import Fraction

from .errors import InputError
from .rational import parse_fraction

__all__ = [
    "BinaryMatrix",
    "dirac_weights",
    "worst_dirac_value",
    "general_weight_value",
    "as_probability_vector",
    "as_weight_vector",
    "parse_matrix",
    "format_matrix",
]


class BinaryMatrix:
    """0/1 matrix with pairwise distinct rows."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        normalized = []
        for row in rows:
            r = tuple(int(x) for x in row)
            if any(x not in (0, 1) for x in r):
                raise InputError("matrix entries must be 0 or 1")
            normalized.append(r)
        if not normalized:
            raise InputError("matrix needs at least one row")
        widths = {len(r) for r in normalized}
        if len(widths) != 1:
            raise InputError("rows have inconsistent lengths")
        if 0 in widths:
            raise InputError("matrix needs at least one column")
        if len(set(normalized)) != len(normalized):
            raise InputError("duplicate rows are not allowed")
        self.rows = tuple(normalized)

    @property
    def num_rows(self):
        return len(self.rows)

    @property
    def num_cols(self):
        return len(self.rows[0])

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def row_set(self):
        return frozenset(self.rows)

    def __eq__(self, other):
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"BinaryMatrix({self.num_rows}x{self.num_cols})"


def parse_matrix(text):
    """One row per line, space-separated 0/1 entries."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise InputError(f"bad matrix line: {line!r}") from exc
    return BinaryMatrix(rows)


def format_matrix(matrix):
    return "\n".join(" ".join(str(x) for x in row) for row in matrix.rows) + "\n"


def as_probability_vector(entries, length=None):
    vec = tuple(parse_fraction(x) if not isinstance(x, Fraction) else x for x in entries)
    if length is not None and len(vec) != length:
        raise InputError(f"expected {length} entries, got {len(vec)}")
    if any(x < 0 for x in vec):
        raise InputError("probabilities must be non-negative")
    if sum(vec) != 1:
        raise InputError("probabilities must sum to exactly 1")
    return vec


def as_weight_vector(entries, length=None):
    vec = tuple(parse_fraction(x) if not isinstance(x, Fraction) else x for x in entries)
    if length is not None and len(vec) != length:
        raise InputError(f"expected {length} entries, got {len(vec)}")
    if sum(vec) != 0:
        raise InputError("weight vectors must sum to 0")
    return vec


def dirac_weights(m):
    """All m(m-1) weight columns with one +1 and one -1, in index order."""
    if m < 2:
        raise InputError("Dirac weights need at least two coordinates")
    out = []
    for plus in range(m):
        for minus in range(m):
            if plus == minus:
                continue
            vec = [Fraction(0)] * m
            vec[plus] = Fraction(1)
            vec[minus] = Fraction(-1)
            out.append(tuple(vec))
    return out


def _row_times_matrix(R, X):
    if len(R) != X.num_rows:
        raise InputError(
            f"dimension mismatch: {len(R)} probabilities for {X.num_rows} rows"
        )
    return tuple(
        sum(R[i] * X.rows[i][j] for i in range(X.num_rows))
        for j in range(X.num_cols)
    )


def worst_dirac_value(R, X):
    """max over Dirac weights W of R*X*W: the spread of the columns of R*X."""
    R = as_probability_vector(R, X.num_rows)
    q = _row_times_matrix(R, X)
    if len(q) < 2:
        return Fraction(0)
    return max(q) - min(q)


def general_weight_value(R, X, V):
    """Exact R*X*V for a zero-sum weight column V."""
    R = as_probability_vector(R, X.num_rows)
    V = as_weight_vector(V, X.num_cols)
    q = _row_times_matrix(R, X)
    return sum(qj * vj for qj, vj in zip(q, V))
