"""Path-length-weighted distances on weighted DAGs."""

from ._plwd import (
    Document,
    Error,
    Graph,
    Label,
    Report,
    WeightSequence,
    brute_force_distance,
    classic_shortest_path,
    compute,
    document_from_graph,
    dominates,
    edge_monotonicity,
    export_dot,
    gen_monotone_dag,
    gen_random_dag,
    gen_star,
    gen_tree,
    parse_document,
    pareto_filter,
    report_to_json,
)

__all__ = [
    "Document",
    "Error",
    "Graph",
    "Label",
    "Report",
    "WeightSequence",
    "brute_force_distance",
    "classic_shortest_path",
    "compute",
    "document_from_graph",
    "dominates",
    "edge_monotonicity",
    "export_dot",
    "gen_monotone_dag",
    "gen_random_dag",
    "gen_star",
    "gen_tree",
    "parse_document",
    "pareto_filter",
    "report_to_json",
]
__version__ = "0.1.0"
