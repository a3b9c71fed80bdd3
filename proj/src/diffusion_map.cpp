#include "hodgemaps/diffusion_map.hpp"

#include <cmath>
#include <stdexcept>

namespace hodgemaps {

DiffusionMap diffusion_map(const PointCloud& cloud, double epsilon, int m) {
    validate_cloud(cloud);
    const int N = static_cast<int>(cloud.rows());
    if (!(epsilon > 0.0)) throw std::invalid_argument("diffusion_map: epsilon must be positive");
    if (m < 1 || m >= N) throw std::invalid_argument("diffusion_map: m must lie in [1, N-1]");

    Eigen::MatrixXd g(N, N);
    for (int i = 0; i < N; ++i) {
        g(i, i) = 1.0;
        for (int j = i + 1; j < N; ++j) {
            const double w = std::exp(-(cloud.row(i) - cloud.row(j)).squaredNorm() / epsilon);
            g(i, j) = w;
            g(j, i) = w;
        }
    }
    const Eigen::VectorXd degree = g.rowwise().sum();

    DiffusionMap out;
    out.epsilon = epsilon;
    out.transition = degree.cwiseInverse().asDiagonal() * g;

    // S = D^{-1/2} G D^{-1/2} is symmetric and similar to P = D^{-1} G.
    const Eigen::VectorXd dsqrt_inv = degree.cwiseSqrt().cwiseInverse();
    Eigen::MatrixXd s = dsqrt_inv.asDiagonal() * g * dsqrt_inv.asDiagonal();
    s = ((s + s.transpose()) * 0.5).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
    if (solver.info() != Eigen::Success) throw std::runtime_error("diffusion_map: eigendecomposition failed");

    out.eigenvalues = solver.eigenvalues().reverse();
    // phi_l = D^{-1/2} psi_l maps conjugate eigenvectors back to P's.
    Eigen::MatrixXd phi = dsqrt_inv.asDiagonal() * solver.eigenvectors().rowwise().reverse();

    out.coordinates.resize(N, m);
    for (int l = 0; l < m; ++l)
        out.coordinates.col(l) = out.eigenvalues(l + 1) * phi.col(l + 1);  // skip the trivial pair
    return out;
}

}  // namespace hodgemaps
