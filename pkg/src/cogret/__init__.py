"""Retracts, foldings and absolute retracts in cographs.

Decision procedures for "is H a retract of G" on threshold graphs,
trivially perfect graphs and general cographs, all returning verifiable
certificates, together with brute-force oracles, folding and achromatic
numbers, an absolute-retract test and a 3-partition hardness-instance
generator.
"""

from .absolute import AbsoluteVerdict, counterexample_embedding, is_absolute_retract
from .cotree import (
    Cotree,
    GraphClass,
    Internal,
    Leaf,
    NotCographError,
    build_cotree,
    canonical_key,
    chromatic_number,
    classify,
    clique_number,
    cotree_to_graph,
    format_cotree,
    normalize,
    parse_cotree,
)
from .folding import (
    CompleteColoring,
    FoldError,
    FoldSequence,
    apply_fold,
    folding_number_universal,
    threshold_folding_number,
    verify_fold_sequence,
)
from .graph_core import (
    Graph,
    NoRetract,
    ParseError,
    RetractCertificate,
    complement,
    components,
    compose_certificates,
    format_edge_list,
    format_graph6,
    induced_subgraph,
    is_homomorphism,
    parse_edge_list,
    parse_graph6,
    random_cograph,
    verify_retract_certificate,
)
from .matching import BipartiteInstance, Matching, max_matching, saturates_right
from .oracle import (
    BudgetExceededError,
    SearchBudget,
    brute_achromatic,
    brute_chromatic,
    brute_clique,
    brute_folding_number,
    brute_hom,
    brute_retract,
)
from .reduction import (
    ThreePartitionInstance,
    brute_3partition,
    encode,
    validate,
)
from .retract_cograph import (
    PartitionedInstance,
    fpt_retract,
    hom_exists,
    partitioned_retract,
    retract,
)
from .retract_threshold import (
    EliminationOrder,
    NotThresholdError,
    threshold_elimination,
    threshold_retract,
)
from .retract_tp import NotTriviallyPerfectError, tp_retract, universal_vertices

__all__ = [
    "AbsoluteVerdict",
    "BipartiteInstance",
    "BudgetExceededError",
    "CompleteColoring",
    "Cotree",
    "EliminationOrder",
    "FoldError",
    "FoldSequence",
    "Graph",
    "GraphClass",
    "Internal",
    "Leaf",
    "Matching",
    "NoRetract",
    "NotCographError",
    "NotThresholdError",
    "NotTriviallyPerfectError",
    "ParseError",
    "PartitionedInstance",
    "RetractCertificate",
    "SearchBudget",
    "ThreePartitionInstance",
    "apply_fold",
    "brute_3partition",
    "brute_achromatic",
    "brute_chromatic",
    "brute_clique",
    "brute_folding_number",
    "brute_hom",
    "brute_retract",
    "build_cotree",
    "canonical_key",
    "chromatic_number",
    "classify",
    "clique_number",
    "complement",
    "components",
    "compose_certificates",
    "cotree_to_graph",
    "counterexample_embedding",
    "encode",
    "folding_number_universal",
    "format_cotree",
    "format_edge_list",
    "format_graph6",
    "fpt_retract",
    "hom_exists",
    "induced_subgraph",
    "is_absolute_retract",
    "is_homomorphism",
    "max_matching",
    "normalize",
    "parse_cotree",
    "parse_edge_list",
    "parse_graph6",
    "partitioned_retract",
    "random_cograph",
    "retract",
    "saturates_right",
    "threshold_elimination",
    "threshold_folding_number",
    "threshold_retract",
    "tp_retract",
    "universal_vertices",
    "validate",
    "verify_fold_sequence",
    "verify_retract_certificate",
]
