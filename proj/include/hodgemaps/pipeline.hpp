#pragma once

#include <optional>

#include "hodgemaps/hodge_laplacian.hpp"
#include "hodgemaps/local_frames.hpp"
#include "hodgemaps/neighbors.hpp"

namespace hodgemaps {

/// Pipeline parameters. Defaults follow the reference experiment settings
/// (K = 30, gamma = 0.9, m = 3, tm = 1); t = 0 selects the mean
/// nearest-neighbor distance.
struct FitConfig {
    int k_order = 1;
    int knn_count = 30;
    double gamma = 0.9;
    int m = 3;
    int tm = 1;
    double t = 0.0;
    int threads = 1;
};

struct FitResult {
    NeighborGraph graph;
    TangentFrameSet frames;
    std::optional<BlockSparseOperator> ed_km1;
    BlockSparseOperator ed_k;
    HodgeMatrix hodge;
    HodgeSpectrum spec;
    Embedding embedding;  // normalized, truncation level m
    double bound = 0.0;   // truncation bound at m (0 when m covers the full spectrum)
    double t_used = 0.0;
    double seconds = 0.0;
};

// knn -> local PCA -> ED_{k-1}, ED_k -> H_{k,t} -> spectrum -> normalized
// embedding. Throws on K >= N, k > d, or a degenerate spectrum.
FitResult run_fit(const PointCloud& cloud, const FitConfig& config);

}  // namespace hodgemaps
