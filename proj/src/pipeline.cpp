#include "hodgemaps/pipeline.hpp"

#include <chrono>
#include <stdexcept>

namespace hodgemaps {

FitResult run_fit(const PointCloud& cloud, const FitConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    validate_cloud(cloud);
    if (config.knn_count >= cloud.rows())
        throw std::invalid_argument("run_fit: K must be smaller than the point count");
    if (config.m < 1) throw std::invalid_argument("run_fit: m must be positive");
    if (config.tm < 1) throw std::invalid_argument("run_fit: tm must be a positive integer");

    FitResult res;
    res.graph = knn(cloud, config.knn_count, config.threads);
    res.t_used = config.t > 0.0 ? config.t : default_bandwidth(cloud);
    set_bandwidth(res.graph, res.t_used);

    res.frames = local_frames(cloud, res.graph, config.gamma, config.threads);
    const int d = res.frames.d;
    if (config.k_order > d)
        throw std::invalid_argument("run_fit: k exceeds the estimated intrinsic dimension d=" +
                                    std::to_string(d));

    if (config.k_order >= 1)
        res.ed_km1 = build_ed(cloud, res.graph, res.frames, config.k_order - 1, config.threads);
    res.ed_k = build_ed(cloud, res.graph, res.frames, config.k_order, config.threads);
    res.hodge = build_hodge(res.ed_k, res.ed_km1 ? &*res.ed_km1 : nullptr);

    const int total = static_cast<int>(res.hodge.matrix.rows());
    const int m = std::min(config.m, total);
    res.spec = spectrum(res.hodge, m, config.tm);
    res.embedding = normalized_embed(res.spec, m);
    res.bound = m < total ? truncation_bound(res.spec, m) : 0.0;

    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace hodgemaps
