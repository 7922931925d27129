"""The inductive coloring construction on tree-pair windows.

Given a target matrix Y, a cycle-free component structure of closed B-copies,
and a fixed enumeration of the closed A-copies inside the pattern B, colors
are assigned copy by copy outward from a root: the root gets a designated row
of Y, and every copy at distance one from colored territory gets the least
row of Y agreeing with the already-colored connector copy.  The resulting
full-coloring matrix collects the distinct realized rows.
"""

from .errors import InputError
from .matrices import BinaryMatrix

__all__ = ["ColoringResult", "build_coloring", "full_coloring_matrix"]


class ColoringResult:
    def __init__(self, colors, assigned_rows):
        self.colors = colors  # frozenset image of an A-copy -> 0/1
        self.assigned_rows = assigned_rows  # node index -> row tuple

    def as_map(self):
        return dict(self.colors)


def _positions(cg, row_enum, node):
    lam = cg.copies.copies[node]
    return [eta.compose(lam).image for eta in row_enum]


def build_coloring(matrix, cg, row_enum, root_row_index=0, roots=None, budget=None):
    """Color every closed A-copy in the window so each B-copy realizes a row
    of `matrix`.

    Needs a cycle-free component structure; the root of each component (the
    least copy unless `roots` picks specific nodes) takes the designated row,
    neighbours take the least compatible row, which makes the output
    deterministic.  Raises when some constraint matches no row of the matrix.
    """
    from .components import find_cycle

    if not 0 <= root_row_index < matrix.num_rows:
        raise InputError("designated row index out of range")
    roots = frozenset(roots or ())
    if any(not 0 <= r < cg.num_nodes for r in roots):
        raise InputError("root indices out of range")
    if len(row_enum) != matrix.num_cols:
        raise InputError(
            f"matrix has {matrix.num_cols} columns but the enumeration has {len(row_enum)}"
        )
    cycle = find_cycle(cg, budget)
    if cycle is not None:
        raise InputError(
            f"the window is not tree-like (cycle of length {cycle.length}); "
            "the construction needs a cycle-free component structure"
        )

    colors = {}
    assigned = {}

    def paint(node, row):
        assigned[node] = row
        for i, image in enumerate(_positions(cg, row_enum, node)):
            if image in colors and colors[image] != row[i]:
                raise InputError(
                    f"inconsistent color forced on copy {sorted(image)}"
                )
            colors[image] = row[i]

    for component in cg.components:
        chosen = sorted(roots & set(component))
        if len(chosen) > 1:
            raise InputError("at most one root per component")
        root = chosen[0] if chosen else min(component)
        paint(root, matrix.rows[root_row_index])
        pending = sorted(set(component) - {root})
        frontier = [root]
        while frontier:
            nxt = []
            for node in sorted(pending):
                if not any(f in cg.neighbors(node) for f in frontier):
                    continue
                constraints = {}
                for i, image in enumerate(_positions(cg, row_enum, node)):
                    if image in colors:
                        constraints[i] = colors[image]
                candidates = [
                    row
                    for row in matrix.rows
                    if all(row[i] == v for i, v in constraints.items())
                ]
                if not candidates:
                    raise InputError(
                        "no row of the matrix is compatible with the forced "
                        f"entries {sorted(constraints.items())}"
                    )
                paint(node, candidates[0])
                nxt.append(node)
            if not nxt:
                break
            pending = [x for x in pending if x not in nxt]
            frontier = nxt
    return ColoringResult(colors, assigned)


def full_coloring_matrix(coloring, copies, row_enum):
    """Distinct color rows of the closed B-copies under the fixed enumeration.

    The coloring maps A-copy images to 0/1 and must cover every copy inside
    every listed B-copy; rows appear in first-appearance order.
    """
    table = dict(coloring)
    rows = []
    seen = set()
    for idx, lam in enumerate(copies.copies):
        vector = []
        for eta in row_enum:
            image = eta.compose(lam).image
            if image not in table:
                raise InputError(f"coloring undefined on copy {sorted(image)}")
            value = table[image]
            if value not in (0, 1):
                raise InputError("colors must be 0 or 1")
            vector.append(value)
        vector = tuple(vector)
        if vector not in seen:
            seen.add(vector)
            rows.append(vector)
    return BinaryMatrix(rows)
