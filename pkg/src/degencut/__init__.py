"""Exact toolkit for degeneracy, vertex cuts, and edge-count bounds.

The package is organized around one question: which vertex cuts of a graph
induce a k-degenerate subgraph, and what does their absence force about the
edge count? It provides k-core peeling and degeneracy, flow-based vertex
connectivity with minimum-cut enumeration, searches for k-degenerate cuts,
two extremal constructions, an exact discharging engine over Q[sqrt(k)], and
an exhaustive desk-scale verification harness with a CLI.
"""

from .connectivity import (
    CutCertificate,
    certify_cut,
    components,
    is_connected,
    is_cut,
    minimum_cuts,
    vertex_connectivity,
)
from .constructions import (
    RingSpec,
    join_extremal,
    random_ring_spec,
    ring_of_cliques,
)
from .cut_search import (
    SearchBudgetExceeded,
    classify_cut,
    exists_min_degenerate_cut,
    find_degenerate_cut,
    find_min_degenerate_cut,
)
from .degeneracy import CoreCertificate, degeneracy, is_k_degenerate, max_k_core
from .discharging import (
    DischargingScheme,
    SendRule,
    degree_excess_tenths_scheme,
    high_degree_transfer_scheme,
    run_discharging,
)
from .enumeration import (
    EnumerationSpec,
    canonical_form,
    canonical_graph,
    enumerate_labeled,
    partition_prefixes,
)
from .graph import (
    Graph,
    complement,
    complete,
    complete_bipartite,
    cycle,
    empty_graph,
    from_edges,
    induced_subgraph,
    join,
    path,
    petersen,
    random_graph,
    remove_vertices,
)
from .graph6 import Graph6Error, iter_graph6, parse_graph6, to_graph6
from .surd import QuadSurd
from .verify import (
    THEOREMS,
    ClaimReport,
    VerificationReport,
    Violation,
    bound_thm1,
    bound_thm2,
    check_claim1,
    check_claim2,
    check_min_degree,
    hyp_thm3,
    spot_check_no_cut,
    verify_theorem,
    verify_theorem_exhaustive,
)

__version__ = "0.1.0"

__all__ = [
    "THEOREMS",
    "CoreCertificate",
    "CutCertificate",
    "ClaimReport",
    "DischargingScheme",
    "EnumerationSpec",
    "Graph",
    "Graph6Error",
    "QuadSurd",
    "RingSpec",
    "SearchBudgetExceeded",
    "SendRule",
    "VerificationReport",
    "Violation",
    "bound_thm1",
    "bound_thm2",
    "canonical_form",
    "canonical_graph",
    "certify_cut",
    "check_claim1",
    "check_claim2",
    "check_min_degree",
    "classify_cut",
    "complement",
    "complete",
    "complete_bipartite",
    "components",
    "cycle",
    "degeneracy",
    "degree_excess_tenths_scheme",
    "empty_graph",
    "enumerate_labeled",
    "exists_min_degenerate_cut",
    "find_degenerate_cut",
    "find_min_degenerate_cut",
    "from_edges",
    "high_degree_transfer_scheme",
    "hyp_thm3",
    "induced_subgraph",
    "is_connected",
    "is_cut",
    "is_k_degenerate",
    "iter_graph6",
    "join",
    "join_extremal",
    "max_k_core",
    "minimum_cuts",
    "parse_graph6",
    "partition_prefixes",
    "path",
    "petersen",
    "random_graph",
    "random_ring_spec",
    "remove_vertices",
    "ring_of_cliques",
    "run_discharging",
    "spot_check_no_cut",
    "to_graph6",
    "verify_theorem",
    "verify_theorem_exhaustive",
    "vertex_connectivity",
]
