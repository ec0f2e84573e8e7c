"""Exact equilibrium-stress spaces and sign matroids of plane frameworks."""

from .exact_geom import (
    Line,
    Point,
    Segment,
    cross_ratio,
    intersect,
    line,
    line_through,
    pt,
    rat,
    rat_str,
)
from .framework import (
    Framework,
    Graph,
    affine_transform,
    check_equilibrium,
    degenerate_edges,
    equilibrium_matrix,
    local_sign_rules_check,
    make_framework,
    small_lemma_check,
    small_lemma_ordering,
)
from .stress_kernel import (
    StressBasis,
    is_stressable,
    solve_on_support,
    stress_basis,
)
from .sign_matroid import (
    StressMatroid,
    all_sign_vectors,
    circuits_from_basis,
    degenerate_edge_signature,
    face_poset,
    matroid_equal,
    matroid_from_basis,
    matroid_from_framework,
    sign_vector,
    sign_vectors_oracle,
    tile_dimension,
)
from .arrangements import (
    LineArrangement,
    combinatorial_type,
    crossings,
    equivalent,
    is_generic,
    perturb_preserving_type,
)
from .gadget import (
    GadgetLayout,
    build_gadget,
    build_rhombus,
    discover_circuits,
    extract_arrangement,
    gamma_prime,
    harmonic_gadget,
    k4_replace,
    matroid_invariance_harness,
    verify_gadget,
)
from .svg import emit_svg
from .exactla import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "Line", "Point", "Segment", "cross_ratio", "intersect", "line",
    "line_through", "pt", "rat", "rat_str",
    "Framework", "Graph", "affine_transform", "check_equilibrium",
    "degenerate_edges", "equilibrium_matrix", "local_sign_rules_check",
    "make_framework", "small_lemma_check", "small_lemma_ordering",
    "StressBasis", "is_stressable", "solve_on_support", "stress_basis",
    "StressMatroid", "all_sign_vectors", "circuits_from_basis",
    "degenerate_edge_signature", "face_poset", "matroid_equal",
    "matroid_from_basis", "matroid_from_framework", "sign_vector",
    "sign_vectors_oracle", "tile_dimension",
    "LineArrangement", "combinatorial_type", "crossings", "equivalent",
    "is_generic", "perturb_preserving_type",
    "GadgetLayout", "build_gadget", "build_rhombus", "discover_circuits",
    "extract_arrangement", "gamma_prime", "harmonic_gadget", "k4_replace",
    "matroid_invariance_harness", "verify_gadget",
    "emit_svg", "KERNEL_BACKEND", "__version__",
]
