"""Matching-extendability deciders, witnesses, families, and rule censuses."""

from .decision import (
    DECIDER_CAP,
    WITNESS_SEARCH_CAP,
    BlockedExtension,
    CharacterizationViolation,
    DecompositionWitness,
    NkdParams,
    NoKMatching,
    Verdict,
    find_decomposition_witness,
    is_k_extendable,
    is_n_critical,
    is_nkd_by_characterization,
    is_nkd_by_definition,
    nkd_holds,
    validate_params,
    verify_decomposition_witness,
    verify_witness,
)
from .errors import (
    FormatError,
    GraphConstructionError,
    ParameterError,
    SearchCapExceeded,
)
from .families import (
    family_blowup_bipartite,
    family_cliques_plus_edge,
    family_cliques_plus_edge_cone,
    family_gadget_chain,
    cliques_plus_edge_distinguished_edge,
    gadget_chain_distinguished_edge,
)
from .graph import Graph, build
from .graphio import read_edge_list, read_graph6, write_edge_list, write_graph6
from .harness import (
    CENSUS_ORDER_CAP,
    THEOREM_IDS,
    CensusResult,
    TheoremReport,
    Violation,
    check_graph,
    run_census,
    valid_triples,
)
from .matching import (
    SUBSET_SEARCH_CAP,
    Matching,
    berge_violating_set,
    deficiency,
    enumerate_k_matchings,
    has_defect_matching,
    has_k_matching,
    maximum_matching,
    nu,
)
from .structure import (
    ComponentProfile,
    components,
    is_bipartite,
    is_connected,
    is_factor_critical,
    is_n_factor_critical,
    odd_count_after_deletion,
)

__version__ = "0.1.0"
