"""Pattern mining over binary contexts.

Pipeline: parse or discretize tabular data into a binary context, mine
itemset families (frequent, closed, generators, minimal rare), generate
association-rule bases and implication bases with interestingness
measures, build the concept lattice, then filter/rank/highlight the
results.  A command-line front-end (``galmine``) exposes every stage.
"""

from galmine.context import (
    BinaryContext,
    ContextStats,
    parse_cxt,
    parse_tab,
    write_cxt,
    write_tab,
)
from galmine.errors import (
    ConstraintError,
    GalmineError,
    ParseError,
    ResourceError,
    UnknownLabelError,
)
from galmine.lattice import Concept, ConceptLattice, build_lattice, export_dot, export_json
from galmine.miner import (
    STRATEGIES,
    EquivalenceClass,
    MinedSet,
    mine_closed,
    mine_equivalence_classes,
    mine_frequent,
    mine_generators,
    mine_minimal_rare,
    resolve_minsup,
)
from galmine.postprocess import FilterSpec, colorize, filter_rules, strip_color, top_k
from galmine.preprocess import BinningSpec, NumericTable, convert, discretize, parse_csv
from galmine.rules import (
    AssociationRule,
    all_rules,
    closed_rules,
    duquenne_guigues,
    generic_basis,
    measures,
    mnr_rules,
    rare_rules,
)
from galmine.toolbox import GenSpec, random_context, render_equivalence_classes

__version__ = "0.1.0"

__all__ = [
    "AssociationRule",
    "BinaryContext",
    "BinningSpec",
    "Concept",
    "ConceptLattice",
    "ConstraintError",
    "ContextStats",
    "EquivalenceClass",
    "FilterSpec",
    "GalmineError",
    "GenSpec",
    "MinedSet",
    "NumericTable",
    "ParseError",
    "ResourceError",
    "STRATEGIES",
    "UnknownLabelError",
    "all_rules",
    "build_lattice",
    "closed_rules",
    "colorize",
    "convert",
    "discretize",
    "duquenne_guigues",
    "export_dot",
    "export_json",
    "filter_rules",
    "generic_basis",
    "measures",
    "mine_closed",
    "mine_equivalence_classes",
    "mine_frequent",
    "mine_generators",
    "mine_minimal_rare",
    "mnr_rules",
    "parse_csv",
    "parse_cxt",
    "parse_tab",
    "random_context",
    "rare_rules",
    "render_equivalence_classes",
    "resolve_minsup",
    "strip_color",
    "top_k",
    "write_cxt",
    "write_tab",
    "__version__",
]
