#pragma once

#include <Eigen/Dense>

namespace hodgemaps {

// Rows are points, columns the ambient coordinates.
using PointCloud = Eigen::MatrixXd;

// Throws unless the cloud has N >= 2 points, n >= 1 columns and finite entries.
void validate_cloud(const PointCloud& cloud);

/// K-nearest-neighbor structure shared by the frame and operator builders.
/// Row i lists the K neighbors of point i by ascending distance (ties broken
/// by smaller index, the point itself excluded). `t` is the kernel bandwidth;
/// it is unset (0) until set_bandwidth is called.
struct NeighborGraph {
    Eigen::MatrixXi indices;    // N x K
    Eigen::MatrixXd distances;  // N x K, Euclidean
    int K = 0;
    double t = 0.0;

    int size() const { return static_cast<int>(indices.rows()); }
};

NeighborGraph knn(const PointCloud& cloud, int K, int threads = 1);

// Table-1 rule: mean over i of the distance to the nearest other point.
// Throws if the mean is zero (duplicate-only cloud).
double default_bandwidth(const PointCloud& cloud);

void set_bandwidth(NeighborGraph& graph, double t);

// Truncated kernel mass d_t(x_i) = sum over {i} u knn(i) of exp(-dist^2/2t^2).
// Always >= 1 since the self term contributes 1.
double normalizer(const NeighborGraph& graph, int i);

}  // namespace hodgemaps
