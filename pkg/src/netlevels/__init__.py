"""Edge classification by center levels and degree-distribution fitting."""

from netlevels.centrality import (
    UNREACHABLE,
    DisconnectedGraphError,
    EccentricityProfile,
    LevelAssignment,
    assign_levels,
    bfs_distances,
    eccentricities_of,
    eccentricity_profile,
)
from netlevels.classifier import (
    AgreementReport,
    DegreeSequences,
    EdgeClassification,
    EdgeType,
    agreement,
    classify_edges,
    parse_truth_table,
    split_degree_sequences,
)
from netlevels.distfit import (
    AnalysisReport,
    CCDFTable,
    FitError,
    PowerLawFit,
    WeibullFit,
    build_ccdf,
    fit_power_law,
    fit_report,
    fit_weibull,
    pearson,
)
from netlevels.generators import BAConfig, EBAConfig, generate, generate_ba, generate_eba
from netlevels.graph import (
    ConnectivityReport,
    Graph,
    ParseError,
    connected_components,
    largest_component,
    parse_edge_list,
    read_edge_list,
)
from netlevels.rng import rng_stream

__version__ = "0.1.0"
