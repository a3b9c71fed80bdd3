#include "hodgemaps/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hodgemaps/parallel.hpp"

namespace hodgemaps {

void validate_cloud(const PointCloud& cloud) {
    if (cloud.rows() < 2) throw std::invalid_argument("point cloud needs at least 2 points");
    if (cloud.cols() < 1) throw std::invalid_argument("point cloud needs at least 1 coordinate");
    if (!cloud.allFinite()) throw std::invalid_argument("point cloud contains non-finite entries");
}

NeighborGraph knn(const PointCloud& cloud, int K, int threads) {
    validate_cloud(cloud);
    const int N = static_cast<int>(cloud.rows());
    if (K < 1 || K > N - 1) throw std::invalid_argument("knn: K must be in [1, N-1]");

    NeighborGraph graph;
    graph.K = K;
    graph.indices.resize(N, K);
    graph.distances.resize(N, K);

    parallel_for(N, threads, [&](int i) {
        std::vector<std::pair<double, int>> cand;
        cand.reserve(static_cast<std::size_t>(N - 1));
        for (int j = 0; j < N; ++j) {
            if (j == i) continue;
            cand.emplace_back((cloud.row(j) - cloud.row(i)).norm(), j);
        }
        std::partial_sort(cand.begin(), cand.begin() + K, cand.end());
        for (int l = 0; l < K; ++l) {
            graph.distances(i, l) = cand[static_cast<std::size_t>(l)].first;
            graph.indices(i, l) = cand[static_cast<std::size_t>(l)].second;
        }
    });
    return graph;
}

double default_bandwidth(const PointCloud& cloud) {
    validate_cloud(cloud);
    const int N = static_cast<int>(cloud.rows());
    double sum = 0.0;
    for (int i = 0; i < N; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (int j = 0; j < N; ++j) {
            if (j == i) continue;
            best = std::min(best, (cloud.row(j) - cloud.row(i)).norm());
        }
        sum += best;
    }
    const double t = sum / N;
    if (t <= 0.0) throw std::runtime_error("default_bandwidth: cloud consists of duplicate points only");
    return t;
}

void set_bandwidth(NeighborGraph& graph, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("bandwidth t must be positive");
    graph.t = t;
}

double normalizer(const NeighborGraph& graph, int i) {
    if (!(graph.t > 0.0)) throw std::invalid_argument("normalizer: bandwidth t not set");
    const double inv = 1.0 / (2.0 * graph.t * graph.t);
    double sum = 1.0;  // self term exp(0)
    for (int l = 0; l < graph.K; ++l) {
        const double dist = graph.distances(i, l);
        sum += std::exp(-dist * dist * inv);
    }
    return sum;
}

}  // namespace hodgemaps
