"""Exact counting of domatic partitions of graphs.

Two engines compute the same quantities: a brute-force oracle for any
small graph, and a memoized support-vertex recursion for trees of
essentially arbitrary size. Closed forms cover paths and coronas.
"""

from .canon import TreeCode, canonical_code, tree_centers
from .graph import (
    Graph,
    ParseError,
    corona,
    gen_caterpillar,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_star,
    is_connected,
    is_tree,
    min_degree,
    parse_edge_list,
    random_tree,
    to_edge_list,
    tree_from_pruefer,
)
from .oracle import (
    domatic_number,
    domatic_polynomial_oracle,
    dp_count,
    gamma,
    is_dominating,
    minimum_dominating_set,
    w2_oracle,
)
from .polynomial import DomaticPolynomial
from .reductions import (
    bouquet,
    ones,
    quasi_star_vertices,
    reduce_bouquet_minus2,
    reduce_minus1,
    support_vertices,
)
from .treecount import (
    MemoTable,
    default_support_choice,
    dp_tree_polynomial,
    w2_corona_closed,
    w2_path_closed,
    w2_tree,
)

__all__ = [
    "DomaticPolynomial",
    "Graph",
    "MemoTable",
    "ParseError",
    "TreeCode",
    "bouquet",
    "canonical_code",
    "corona",
    "default_support_choice",
    "domatic_number",
    "domatic_polynomial_oracle",
    "dp_count",
    "dp_tree_polynomial",
    "gamma",
    "gen_caterpillar",
    "gen_complete",
    "gen_cycle",
    "gen_path",
    "gen_star",
    "is_connected",
    "is_dominating",
    "is_tree",
    "min_degree",
    "minimum_dominating_set",
    "ones",
    "parse_edge_list",
    "quasi_star_vertices",
    "random_tree",
    "reduce_bouquet_minus2",
    "reduce_minus1",
    "support_vertices",
    "to_edge_list",
    "tree_centers",
    "tree_from_pruefer",
    "w2_corona_closed",
    "w2_oracle",
    "w2_path_closed",
    "w2_tree",
]
