"""Decide (graded) Invariant Basis Number for Leavitt path algebras of finite graphs."""

from .constructions import (
    Group,
    cayley_graph,
    conjugacy_classes,
    cycle_graph,
    cyclic_cayley,
    cyclic_group,
    direct_product,
    family,
    group_from_table,
    hopf_graph,
    line_graph,
    symmetric_group,
)
from .deciders import (
    Certificate,
    GrIbnVerdict,
    IbnVerdict,
    bounded_certificate_search,
    column_sum_shortcut,
    decide_gribn,
    decide_ibn,
    exact_certificate,
    sufficient_ibn_maximal,
    verify_certificate,
)
from .exactmat import mat_pow, rank_q, solve_in_rowspan
from .graph import (
    Condensation,
    Graph,
    VertexClassification,
    cartesian_product,
    classify_vertices,
    condensation,
    covering_window,
    hs_check,
    hs_enumerate,
    maximal_sinks_and_cycles,
    quotient,
    reaches,
)
from .graphio import format_graph_text, load_graph, parse_graph, to_dot
from .monoid import (
    NormalForm,
    OracleVerdict,
    TalentedElement,
    certificate_to_equation,
    equal,
    equal_oracle,
    expand_to_level,
    format_element,
    parse_element,
    shift,
)

__version__ = "0.1.0"
