"""Center-based node-removal attacks on complex networks."""
from .attack import (
    ALL_STRATEGIES,
    AttackStrategy,
    AttackSummary,
    AttackTrace,
    Info,
    TraceRow,
    mean_destruction,
    run_attack,
    run_initial,
    run_recalculated,
    summarize,
    sweep,
)
from .centrality import (
    CentralityKind,
    CentralityTiers,
    betweenness,
    central_set,
    centrality,
    centrality_tiers,
    degrees,
    eccentricities,
    remoteness,
)
from .chart import render_chart
from .errors import DomainError, InvalidArgumentError, NetVulnError, ParseError
from .generators import GeneratorSpec, Model, barabasi_albert, erdos_renyi, extract_giant, watts_strogatz
from .graph import (
    ComponentPartition,
    Graph,
    bfs_distances,
    connected_components,
    from_edges,
    largest_connected_component,
    remove_nodes,
)
from .io import read_edge_list, read_gml, read_graph, read_pajek, write_edge_list, write_trace_csv
from .metrics import NetworkStats, local_clustering, network_stats

__version__ = "0.1.0"
