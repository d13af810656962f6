"""Spectral paths on weighted graphs.

Grounded-Laplacian eigenfunctions, greedy descent paths and their
stretch, equitable-partition quotients, counterexample families with
unbounded stretch, provably shortest spread-paths, and an experiments
harness with CSV/JSON/PNG reporting.
"""

from .errors import (
    AllVertexWeightsZero,
    BadParams,
    DisconnectedGraph,
    DuplicateEdge,
    IndexOutOfRange,
    InternalEdgeInCell,
    NegativeWeight,
    NoConvergence,
    NotPositiveDefinite,
    NotPositivelyConnected,
    OrphanEncountered,
    SpectralPathsError,
    TZero,
    UnsupportedFamily,
    ZeroWeightMatrix,
    ZeroWNorm,
)
from .graph import (
    PathRecord,
    WeightedGraph,
    build_graph,
    delete_vertex,
    diameter,
    hop_distance,
    is_positively_connected,
    strip_zero_edges,
)
from .graphio import format_graph, parse_graph, read_graph, to_dot, write_graph
from .eigen import (
    EigenPair,
    cholesky,
    dominant_pair,
    full_eigen,
    grounded_laplacian,
    rayleigh_c,
)
from .paths import (
    ORPHAN,
    ROOT,
    DescentReport,
    PotentialFunction,
    SpectralTree,
    averaging_residual,
    grounded_eigenfunction,
    spectral_path,
    spectral_tree,
    stretch,
    symmetric_spectral_path,
    verify_descent,
)
from .quotient import (
    Partition,
    QuotientGraph,
    lift,
    lifted_eigenfunction,
    quotient_graph,
    refine_partition,
)
from .families import (
    FamilyParams,
    analytic_quotient,
    gen_block_path,
    gen_broom_block,
    gen_double_broom,
    gen_weighted_cycle,
    generate,
    limit_graph,
    planar_coordinates,
)
from .spread import (
    SpreadSolution,
    estimate_global_spread,
    spread_function,
    spread_path,
)
from .experiments import (
    BlockPathReport,
    PerturbationReport,
    StretchBoundReport,
    SweepResult,
    SweepRow,
    block_path_report,
    doubling_schedule,
    perturbation_trial,
    random_pair_probability,
    rw_stretch_report,
    sweep_double_broom,
    sweep_weighted_cycle,
)

__version__ = "1.0.0"

__all__ = [
    "AllVertexWeightsZero",
    "BadParams",
    "BlockPathReport",
    "DescentReport",
    "DisconnectedGraph",
    "DuplicateEdge",
    "EigenPair",
    "FamilyParams",
    "IndexOutOfRange",
    "InternalEdgeInCell",
    "NegativeWeight",
    "NoConvergence",
    "NotPositiveDefinite",
    "NotPositivelyConnected",
    "ORPHAN",
    "OrphanEncountered",
    "Partition",
    "PathRecord",
    "PerturbationReport",
    "PotentialFunction",
    "QuotientGraph",
    "ROOT",
    "SpectralPathsError",
    "SpectralTree",
    "SpreadSolution",
    "StretchBoundReport",
    "SweepResult",
    "SweepRow",
    "TZero",
    "UnsupportedFamily",
    "WeightedGraph",
    "ZeroWNorm",
    "ZeroWeightMatrix",
    "analytic_quotient",
    "averaging_residual",
    "block_path_report",
    "build_graph",
    "cholesky",
    "delete_vertex",
    "diameter",
    "dominant_pair",
    "doubling_schedule",
    "estimate_global_spread",
    "format_graph",
    "full_eigen",
    "gen_block_path",
    "gen_broom_block",
    "gen_double_broom",
    "gen_weighted_cycle",
    "generate",
    "grounded_eigenfunction",
    "grounded_laplacian",
    "hop_distance",
    "is_positively_connected",
    "lift",
    "lifted_eigenfunction",
    "limit_graph",
    "parse_graph",
    "perturbation_trial",
    "planar_coordinates",
    "quotient_graph",
    "random_pair_probability",
    "rayleigh_c",
    "read_graph",
    "refine_partition",
    "rw_stretch_report",
    "spectral_path",
    "spectral_tree",
    "spread_function",
    "spread_path",
    "stretch",
    "strip_zero_edges",
    "sweep_double_broom",
    "sweep_weighted_cycle",
    "symmetric_spectral_path",
    "to_dot",
    "verify_descent",
    "write_graph",
]
