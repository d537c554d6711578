"""Magic labelings of fuzzy graphs: exact constructions, verification,
and grid search.

A fuzzy graph assigns membership values in [0, 1] to vertices (alpha) and
edges (beta).  It is magic when both maps are injective, every edge value
stays strictly below the sum of its endpoint values, and the quantity
alpha(u) + beta(uv) + alpha(v) is the same constant m(G) <= 1 on every
edge.  This package builds such labelings in closed form for paths, stars
and odd cycles, verifies arbitrary graphs with certificate-style reports,
and searches small coefficient grids exhaustively.

All arithmetic is exact (``fractions.Fraction``); nothing is ever rounded
except at the presentation layer.
"""

from .construct import (
    Family,
    FamilySpec,
    MagicLabeling,
    label_cycle,
    label_family,
    label_path,
    label_star,
    magic_coefficient,
    minimal_unit,
    paper_unit,
)
from .graph import (
    DegreeSummary,
    FuzzyGraph,
    build_graph,
    check_product_condition,
    check_sum_condition,
    crisp_order_size,
    degrees,
    is_fuzzy_labeling,
)
from .labels import Label, as_label, format_label, format_percent, parse_label
from .search import (
    GraphStructure,
    SearchSpec,
    cycle_structure,
    enumerate_magic,
    explore_family,
    minimal_magic_coefficient,
    path_structure,
    star_structure,
)
from .verify import (
    VerificationReport,
    is_fuzzy_magic_and_labeling,
    magic_constant_of,
    verify_magic,
)

__all__ = [
    "Family",
    "FamilySpec",
    "MagicLabeling",
    "label_cycle",
    "label_family",
    "label_path",
    "label_star",
    "magic_coefficient",
    "minimal_unit",
    "paper_unit",
    "DegreeSummary",
    "FuzzyGraph",
    "build_graph",
    "check_product_condition",
    "check_sum_condition",
    "crisp_order_size",
    "degrees",
    "is_fuzzy_labeling",
    "Label",
    "as_label",
    "format_label",
    "format_percent",
    "parse_label",
    "GraphStructure",
    "SearchSpec",
    "cycle_structure",
    "enumerate_magic",
    "explore_family",
    "minimal_magic_coefficient",
    "path_structure",
    "star_structure",
    "VerificationReport",
    "is_fuzzy_magic_and_labeling",
    "magic_constant_of",
    "verify_magic",
]

__version__ = "0.1.0"
