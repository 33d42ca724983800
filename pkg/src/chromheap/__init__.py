"""Exact combinatorics of graph colorings, acyclic orientations, and heaps.

The package computes chromatic polynomials, truncated heap generating
series, and chromatic symmetric functions over exact rational arithmetic,
and verifies a family of reciprocity identities by comparing independent
counting and algebraic routes on the same graph.
"""

from .chromatic import (
    bivariate_polynomial,
    chi_hat,
    chromatic_polynomial,
    count_bivariate_colorings,
    count_independent_tuples,
    count_multicolorings,
    count_proper_colorings,
    multicolor_polynomial,
)
from .config import DEFAULT_BUDGET, Budget
from .errors import ChromheapError
from .graphs import Graph, blowup, from_edge_list, load_graph, parse_graph, vset
from .orientations import (
    acyclic_count_table,
    acyclic_orientation_list,
    count_bipolar,
    enumerate_acyclic,
    lambda_histogram,
    source_component_histogram,
    source_components,
    sources,
    unique_source_min_table,
)
from .polynomials import BivariatePoly, Poly
from .reciprocity import (
    check_bivariate_reciprocity,
    check_clique_quotient_reciprocity,
    check_derivative_reciprocity,
    check_greene_zaslavsky,
    check_shifted_reciprocity,
    check_sink_rooted,
    check_stanley_reciprocity,
)
from .reports import IdentityReport, ReciprocityReport
from .selfcheck import run_selfcheck
from .series import (
    TruncatedSeries,
    direct_heap_count,
    direct_pyramid_count,
    heap_series,
    pyramid_series,
    restricted_heap_series,
    trivial_series,
    verify_heap_identities,
)
from .symfunc import (
    MultiPoly,
    PPoly,
    csf_from_colorings,
    csf_powersum,
    expand_finite,
    multicolor_csf,
    multicolor_csf_from_colorings,
    omega,
    orientation_lambda_tally,
    specialize_p_to_q,
    specialize_p_to_value,
    verify_combined,
    verify_descent_expansion,
    verify_orientation_expansion,
    verify_split_alphabet,
    verify_superfication,
)

__version__ = "0.1.0"

__all__ = [
    "BivariatePoly",
    "Budget",
    "ChromheapError",
    "DEFAULT_BUDGET",
    "Graph",
    "IdentityReport",
    "MultiPoly",
    "PPoly",
    "Poly",
    "ReciprocityReport",
    "TruncatedSeries",
    "acyclic_count_table",
    "acyclic_orientation_list",
    "bivariate_polynomial",
    "blowup",
    "check_bivariate_reciprocity",
    "check_clique_quotient_reciprocity",
    "check_derivative_reciprocity",
    "check_greene_zaslavsky",
    "check_shifted_reciprocity",
    "check_sink_rooted",
    "check_stanley_reciprocity",
    "chi_hat",
    "chromatic_polynomial",
    "count_bipolar",
    "count_bivariate_colorings",
    "count_independent_tuples",
    "count_multicolorings",
    "count_proper_colorings",
    "csf_from_colorings",
    "csf_powersum",
    "direct_heap_count",
    "direct_pyramid_count",
    "enumerate_acyclic",
    "expand_finite",
    "from_edge_list",
    "heap_series",
    "lambda_histogram",
    "load_graph",
    "multicolor_csf",
    "multicolor_csf_from_colorings",
    "multicolor_polynomial",
    "omega",
    "orientation_lambda_tally",
    "parse_graph",
    "pyramid_series",
    "restricted_heap_series",
    "run_selfcheck",
    "source_component_histogram",
    "source_components",
    "sources",
    "specialize_p_to_q",
    "specialize_p_to_value",
    "trivial_series",
    "unique_source_min_table",
    "verify_combined",
    "verify_descent_expansion",
    "verify_heap_identities",
    "verify_orientation_expansion",
    "verify_split_alphabet",
    "verify_superfication",
    "vset",
]
