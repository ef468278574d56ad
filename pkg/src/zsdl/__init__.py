"""Exact solvers for zero forcing number and (strong) metric dimension.

The package pairs exhaustive exact solvers with a scan harness that
verifies, by brute force over enumerated small-graph families, a registry of
known relationships between Z(G), sdim(G), dim(G), path covers of trees, and
the trimming calculus of unicyclic graphs.
"""

from .graph_core import (
    DistanceMatrix,
    Graph,
    GraphClass,
    GraphError,
    GraphKind,
    all_pairs_distances,
    classify,
    connected_components,
    encode_graph6,
    leaves,
    parse_graph6,
)
from .zero_forcing import (
    ForcingChronicle,
    ZResult,
    forcing_closure,
    is_zero_forcing_set,
    partial_sun_Z,
    z_cut_vertex_lower_bound,
    zero_forcing_number,
)
from .strong_resolving import (
    DimResult,
    MmdGraph,
    SdimResult,
    is_strong_resolving_set,
    metric_dimension,
    mmd_graph,
    mmd_vertex_cover_lower_bound,
    strong_metric_dimension,
    strongly_resolves,
)
from .tree_structure import (
    PathCover,
    TreeProfile,
    dim_equals_z_characterization,
    path_cover_number,
    sdim_tree_closed_form,
    tree_profile,
    z_equals_sdim_characterization,
)
from .unicyclic import (
    StepKind,
    SunDescription,
    TrimDeltas,
    TrimStep,
    TrimTrace,
    detect_generalized_partial_sun,
    next_trim_step,
    trim_invariant_check,
    trimmed_form,
    unique_cycle,
)
from .families import (
    FamilySpec,
    enumerate_labeled_connected,
    enumerate_tree_plus_e,
    enumerate_trees,
    generate,
    parse_family_spec,
)
from .scan import (
    RatioRecord,
    RatioReport,
    ScanReport,
    ratio_explore,
    run_claim,
    run_claims,
)
from .claims import REGISTRY as CLAIMS

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
