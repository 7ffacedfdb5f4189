"""Exact locating-domination toolkit for graphs and their functigraphs."""

from .families import (
    FamilySpec,
    all_graphs,
    all_maps,
    canonical_form,
    complete_graph,
    connected_graphs,
    constant_map,
    cycle_graph,
    h_graph,
    identity_map,
    make_family,
    make_map,
    nonisomorphic_connected_graphs,
    path_graph,
    pendant_gap_graph,
    permutation_map,
    random_connected_graph,
    random_graph,
    random_map_with_signature,
    signature_map,
    signatures,
    star_graph,
)
from .functigraph import (
    BIJECTIVE,
    CONSTANT,
    MID_NO_MATCHING,
    MID_WITH_MATCHING,
    FunctionClass,
    FunctionMap,
    Functigraph,
    Signature,
    build_functigraph,
    classify,
    functi_matchings,
    functigraph_from_json_dict,
    functigraph_to_json_dict,
    preimage_signature,
)
from .graph import (
    ADJACENT_TWINS,
    MAX_ORDER,
    NON_ADJACENT_TWINS,
    SINGLETON,
    Graph,
    TwinClass,
    TwinPartition,
    VertexSet,
    graph_from_edge_text,
    graph_from_json_dict,
    graph_to_json_dict,
    is_connected,
    neighborhood,
    permute_graph,
    twin_partition,
)
from .solver import (
    ORACLE_MAX_ORDER,
    SearchStats,
    SolveResult,
    info_lower_bound,
    is_locating_dominating,
    lambda_exact,
    lambda_oracle,
    trace,
    twin_lower_bound,
)
from .theorems import (
    SATURATED,
    TWIN_PAIR,
    CaseRow,
    FunctigraphBounds,
    Report,
    TheoremCase,
    VerifyConfig,
    complete_case_id,
    hi_case_id,
    hi_target_kind,
    predicted_bounds_functigraph,
    predicted_lambda_complete,
    predicted_lambda_hi,
    verify_suite,
)

__version__ = "0.1.0"
