"""Systolic simplicial complexes: curvature checks, projection rays, and
collapse certificates built from gradient matchings."""

from .core import (
    Complex,
    SubcomplexHandle,
    Verdict,
    combinatorial_distance,
    elementary_collapse,
    flag_complex,
    free_faces,
    from_facets,
    full_simplex,
    is_flag,
    is_full,
    is_pseudomanifold,
    join_simplex,
    link,
    star,
)
from .homology import first_homology
from .morse import (
    acyclicity,
    brute_force_collapsible,
    certify_collapsible,
    collapse_sequence,
    gradient_matching,
    pointer_function,
    validate_vector_field,
)
from .projection import (
    ball_tower,
    directed_geodesic,
    elementary_projection,
    enumerate_directed_geodesics,
    is_directed_geodesic,
    projection_ray,
    sphere,
)
from .verify import (
    full_cycles_shorter_than,
    is_3_convex,
    is_convex,
    is_k_large,
    is_locally_k_large,
    is_systolic,
    systole,
)
from .arborescent import (
    ball_filtration_check,
    facet_stream_generator,
    hex_disk,
    hex_plane_generator,
)

__version__ = "0.1.0"
