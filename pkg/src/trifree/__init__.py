"""Triangle-free subsets of the r-distance graph on the n-dimensional hypercube."""

from .bounds import (
    BoundReport,
    LevelProfile,
    binomial,
    bound_report,
    fixed_bit_size,
    frankl_bound,
    level_bound,
    lower_bound_asymptotic,
    lower_bound_probabilistic,
    optimal_sampling_probability,
    antipodal_size,
    select_antipodal_prime,
    triangle_count_formula,
    upper_bound_level_sum,
    upper_bound_r2,
)
from .constructions import (
    AlterationTrace,
    SamplingPlan,
    alteration_construction,
    antipodal_construction,
    fixed_bit_construction,
)
from .core import (
    Params,
    ParamError,
    VertexSet,
    covers,
    format_vertex,
    hamming_distance,
    is_triangle,
    level,
    parse_vertex,
    parse_vertex_set,
    format_vertex_set,
    r_neighbors,
    shadows,
)
from .oracle import OracleResult, SearchLimits, max_triangle_free_exact, sandwich_report
from .verify import (
    Violation,
    check_independent,
    check_triangle_free,
    count_triangles_graph,
    count_triangles_in_set,
)

__version__ = "0.1.0"
