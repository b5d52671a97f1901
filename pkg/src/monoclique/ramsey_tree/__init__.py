"""Ramsey tree constructions: general, biased/restricted, bias-1/2 full paths, H(W, Z)."""

from .auxgraph import AuxBipartite, build_aux_bipartite, check_aux_bipartite, degree_bound
from .grt import (
    GrtLevelStats,
    census_bounds_from_levels,
    check_census_against_levels,
    explicit_grt_levels,
    grt_lemma_checks,
    grt_level_counts,
)
from .paths import FullPath, extract_cliques, format_full_path, path_color_counters, rt_full_paths
from .rrt import (
    HALF,
    BiasSchedule,
    RrtLevel,
    RrtLevels,
    build_rrt,
    check_bag_floors,
    check_monochromatic_lower_bound,
    check_rrt_levels,
    lowest_indices,
    rrt_bag_floor,
    rrt_full_paths,
    rrt_monochromatic_lower_bound,
    rrt_weights,
    szekely_bag_check,
)
