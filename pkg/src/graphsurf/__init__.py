"""Surface-area graph invariants, normalized Schrodinger spectra, and bounds."""

from .bounds import (
    DegreeLevels,
    LowerBoundResult,
    RandicValue,
    degree_levels,
    full_report,
    gap_gamma,
    jost_mulas_q,
    lambda2_upper_cheeger,
    lambda_n_lower,
    planar_lambda2_bound,
    pluemer_bound,
    randic,
    restricted_randic,
    theta,
)
from .cheeger import CutResult, cheeger_exact, cheeger_lambda2_check, cheeger_sweep, cut_ratio
from .generators import (
    FAMILIES,
    barbell,
    bipartite_complete,
    complete,
    cycle,
    generate,
    grid,
    path,
    star,
    star_path,
    wheel,
)
from .graphs import (
    Graph,
    GraphError,
    Partition,
    boundary_weight,
    connected_components,
    diameter,
    edge_count,
    euler_planarity_check,
    is_connected,
    max_degree,
    unweighted_degree,
    volume,
    weighted_degree,
)
from .io import (
    read_edge_list,
    read_graph,
    read_graph_json,
    write_edge_list,
    write_graph_json,
)
from .spectral import (
    EigensolverError,
    SchrodingerOperator,
    Spectrum,
    build_operator,
    dirichlet_form,
    eigenvalues,
    fiedler_vector,
    jacobi_eigenvalues,
    quadratic_form,
    trace_formula_check,
)
from .surface import (
    Potential,
    SequenceProfile,
    analyze_sequence,
    cauchy_schwarz_floor,
    connectivity,
    connectivity_effective,
    effective_surface_area,
    generalized_surface_area,
    surface_area,
    surface_area_exact,
)
from .surgery import SurgeryOutcome, attach_pending_edge, cut_edge, glue_at_vertices

__version__ = "0.1.0"
