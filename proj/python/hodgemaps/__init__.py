"""Hodge diffusion maps: tangent-frame estimation, exterior-derivative
matrices and Hodge-Laplacian spectral embeddings for point clouds."""

from ._core import (
    BlockSparseOperator,
    CoefficientField,
    DiffusionMap,
    Embedding,
    HodgeMatrix,
    HodgeSpectrum,
    NeighborGraph,
    TangentFrameSet,
    affinity,
    apply_exterior_derivative,
    build_ed,
    build_hodge,
    circle,
    default_bandwidth,
    diffusion_map,
    embed,
    hodge_distance,
    intrinsic_dimension,
    knn,
    local_frames,
    normalized_affinity,
    normalized_embed,
    normalizer,
    run_eval_suite,
    set_bandwidth,
    spectrum,
    sphere_grid,
    torus_grid,
    truncation_bound,
)

__all__ = [
    "BlockSparseOperator",
    "CoefficientField",
    "DiffusionMap",
    "Embedding",
    "HodgeMatrix",
    "HodgeSpectrum",
    "NeighborGraph",
    "TangentFrameSet",
    "affinity",
    "apply_exterior_derivative",
    "build_ed",
    "build_hodge",
    "circle",
    "default_bandwidth",
    "diffusion_map",
    "embed",
    "hodge_distance",
    "intrinsic_dimension",
    "knn",
    "local_frames",
    "normalized_affinity",
    "normalized_embed",
    "normalizer",
    "run_eval_suite",
    "set_bandwidth",
    "spectrum",
    "sphere_grid",
    "torus_grid",
    "truncation_bound",
]

__version__ = "0.1.0"
