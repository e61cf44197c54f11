"""Linear resolutions, linear quotients and variable-decomposability of
squarefree monomial ideals, decided from the first-linear-syzygy graph and
cross-checked against exact Betti numbers."""

from .betti import BettiTable, betti_table, has_linear_resolution, has_linear_relations_oracle, projdim
from .complexes import (
    SimplicialComplex,
    alexander_dual,
    cm_shape_report,
    dual_ideal,
    facet_graph,
    is_cohen_macaulay,
    is_shellable,
    is_vertex_decomposable_pure,
    simplicial_complex,
    stanley_reisner_complex,
    stanley_reisner_ideal,
)
from .config import Caps
from .errors import GenerationError, InputError, LinsyzError, PreconditionError, ResourceError
from .graph import GraphShape, SyzygyGraph, build_syzygy_graph, classify_shape, has_linear_relations_combinatorial
from .ideal import RATIONALS, FieldSpec, MonomialIdeal, colon, gf, ideal, lcm_of, minimalize, split_by_variable
from .structure import (
    cycle_criterion,
    decide_linear_resolution,
    find_admissible_order,
    is_admissible_order,
    is_variable_decomposable,
    leaf_extension_check,
    line_criterion,
    scarf_complex,
    scarf_matches_graph,
    tree_criterion,
)

__version__ = "0.1.0"
