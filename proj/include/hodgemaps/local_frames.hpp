#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hodgemaps/neighbors.hpp"

namespace hodgemaps {

/// Per-point orthonormal tangent frames plus the global intrinsic dimension.
/// `raw_dims[i]` is the local estimate d_i; 0 marks a degenerate neighborhood
/// (all weighted displacements vanish), whose frame falls back to the leading
/// coordinate axes and which is excluded from the median.
struct TangentFrameSet {
    std::vector<Eigen::MatrixXd> frames;  // n x d each, orthonormal columns
    std::vector<int> raw_dims;
    int d = 0;
    int ambient_dim = 0;

    int size() const { return static_cast<int>(frames.size()); }
};

// Lower median of a nonempty list (the smaller middle value for even counts).
int lower_median(std::vector<int> values);

// Local PCA: per point, SVD of the Gaussian-weighted displacement matrix
// M_i = [(x_j - x_i) exp(-|x_j - x_i|^2 / 2 t^2)] over the K neighbors.
// d_i is the smallest count whose cumulative singular-value share reaches
// gamma; d is the lower median of the valid d_i; frames are the first d left
// singular vectors with a deterministic sign fix.
TangentFrameSet local_frames(const PointCloud& cloud, const NeighborGraph& graph, double gamma,
                             int threads = 1);

int intrinsic_dimension(const TangentFrameSet& frames);

}  // namespace hodgemaps
