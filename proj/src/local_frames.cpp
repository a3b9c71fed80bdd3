#include "hodgemaps/local_frames.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hodgemaps/parallel.hpp"

namespace hodgemaps {

namespace {

void fix_column_signs(Eigen::MatrixXd& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        Eigen::Index arg = 0;
        double best = 0.0;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            const double a = std::abs(m(r, c));
            if (a > best) {
                best = a;
                arg = r;
            }
        }
        if (m(arg, c) < 0.0) m.col(c) = -m.col(c);
    }
}

}  // namespace

int lower_median(std::vector<int> values) {
    if (values.empty()) throw std::invalid_argument("lower_median: empty input");
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

TangentFrameSet local_frames(const PointCloud& cloud, const NeighborGraph& graph, double gamma,
                             int threads) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("local_frames: gamma must lie in (0,1)");
    if (!(graph.t > 0.0)) throw std::invalid_argument("local_frames: graph bandwidth t not set");
    const int N = graph.size();
    const int n = static_cast<int>(cloud.cols());
    const int K = graph.K;
    const double inv = 1.0 / (2.0 * graph.t * graph.t);

    std::vector<Eigen::MatrixXd> bases(static_cast<std::size_t>(N));  // full left factors, n x min(n,K)
    std::vector<int> raw(static_cast<std::size_t>(N), 0);

    parallel_for(N, threads, [&](int i) {
        Eigen::MatrixXd M(n, K);
        for (int l = 0; l < K; ++l) {
            const int j = graph.indices(i, l);
            const double dist = graph.distances(i, l);
            M.col(l) = (cloud.row(j) - cloud.row(i)).transpose() * std::exp(-dist * dist * inv);
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU);
        const Eigen::VectorXd& sigma = svd.singularValues();
        const double total = sigma.sum();
        if (total > 0.0) {
            double cum = 0.0;
            int est = static_cast<int>(sigma.size());  // clamp for extreme gamma
            for (Eigen::Index s = 0; s < sigma.size(); ++s) {
                cum += sigma(s);
                if (cum / total >= gamma) {
                    est = static_cast<int>(s) + 1;
                    break;
                }
            }
            raw[static_cast<std::size_t>(i)] = est;
            bases[static_cast<std::size_t>(i)] = svd.matrixU();
        }
    });

    std::vector<int> valid;
    valid.reserve(static_cast<std::size_t>(N));
    for (int est : raw)
        if (est > 0) valid.push_back(est);
    if (valid.empty()) throw std::runtime_error("local_frames: every neighborhood is degenerate");

    TangentFrameSet out;
    out.d = lower_median(valid);
    out.ambient_dim = n;
    out.raw_dims = raw;
    out.frames.resize(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        Eigen::MatrixXd frame(n, out.d);
        if (raw[static_cast<std::size_t>(i)] > 0) {
            frame = bases[static_cast<std::size_t>(i)].leftCols(out.d);
        } else {
            frame.setZero();
            for (int c = 0; c < out.d; ++c) frame(c, c) = 1.0;
        }
        fix_column_signs(frame);
        out.frames[static_cast<std::size_t>(i)] = std::move(frame);
    }
    return out;
}

int intrinsic_dimension(const TangentFrameSet& frames) { return frames.d; }

}  // namespace hodgemaps
