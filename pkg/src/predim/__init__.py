"""Exact pre-dimension calculus on finite graphs.

Everything runs in exact rational arithmetic: pre-dimension values and
self-sufficient closures, smooth-class membership (positive, controlled, and
collapsed variants), density-based refutations of vertex Ramsey arrowing,
the matrix form of the convex Ramsey condition with an exact LP decision, and
the construction plus mechanical verification of a tree-pair witness.
"""

from fractions import Fraction

from .budget import Budget
from .classes import (
    ClassSpec,
    MembershipVerdict,
    ZeroAlgebraicStatus,
    build_zero_min_witness,
    classify_zero_algebraic,
    classspec_from_json,
    extend_window,
    member,
)
from .closures import ClosureResult, closure, is_closed, is_strictly_closed
from .coloring import build_coloring, full_coloring_matrix
from .components import (
    build_component_graph,
    closed_embeddings,
    find_cycle,
    is_tree_pair_window,
)
from .convex import (
    SPREAD_THRESHOLD,
    TREE_PAIR_MATRIX,
    classify_all,
    constant_column_fast_path,
    decide_convex_ramsey,
)
from .density import DensityReport, degeneracy, max_density
from .embeddings import Embedding, canonical_embedding, enumerate_copies
from .errors import BudgetExhausted, InputError, PredimError
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    free_amalgam,
    graph_from_json,
    graph_to_json,
    induced,
    order_expand,
    reduct,
)
from .isomorphism import are_isomorphic, canonical_form, find_isomorphism
from .matrices import (
    BinaryMatrix,
    dirac_weights,
    general_weight_value,
    parse_matrix,
    worst_dirac_value,
)
from .measures import FiniteMeasure, compose_measures, evaluate_measure
from .predimension import delta, min_delta_over, relative_delta
from .ramsey import non_ramsey_certificate, one_point_refutation, search_bad_coloring
from .rational import fraction_str, parse_fraction
from .witness import (
    WitnessBundle,
    all_rows_window,
    build_ordered_witness,
    build_window,
    build_witness,
    verify_claims,
)

__version__ = "0.1.0"
