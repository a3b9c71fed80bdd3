#include "hodgemaps/hodge_laplacian.hpp"

#include <cmath>
#include <stdexcept>

namespace hodgemaps {

HodgeMatrix build_hodge(const BlockSparseOperator& ed_k, const BlockSparseOperator* ed_km1) {
    const int k = ed_k.order;
    if (k >= 1 && ed_km1 == nullptr) throw std::invalid_argument("build_hodge: ED_{k-1} required for k >= 1");
    if (k == 0 && ed_km1 != nullptr) throw std::invalid_argument("build_hodge: ED_{k-1} must be absent for k = 0");
    if (ed_km1 != nullptr) {
        if (ed_km1->order != k - 1) throw std::invalid_argument("build_hodge: ED_{k-1} has wrong order");
        if (ed_km1->N != ed_k.N || ed_km1->d != ed_k.d || ed_km1->t != ed_k.t)
            throw std::invalid_argument("build_hodge: operators built from different graphs");
        if (ed_km1->block_rows != ed_k.block_cols)
            throw std::invalid_argument("build_hodge: block dimensions do not chain");
    }

    const double inv_t4 = 1.0 / (ed_k.t * ed_k.t * ed_k.t * ed_k.t);
    const Eigen::Index size = static_cast<Eigen::Index>(ed_k.N) * ed_k.block_cols;

    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(size, size);
    if (ed_k.block_rows > 0) {  // absent for k = d
        const Eigen::SparseMatrix<double> up = ed_k.to_sparse();
        acc += (k + 1) * inv_t4 * Eigen::MatrixXd(Eigen::SparseMatrix<double>(up.transpose() * up));
    }
    if (ed_km1 != nullptr) {
        const Eigen::SparseMatrix<double> down = ed_km1->to_sparse();
        acc += k * inv_t4 * Eigen::MatrixXd(Eigen::SparseMatrix<double>(down * down.transpose()));
    }

    HodgeMatrix hodge;
    hodge.order = k;
    hodge.N = ed_k.N;
    hodge.d = ed_k.d;
    hodge.t = ed_k.t;
    hodge.block_size = ed_k.block_cols;
    hodge.matrix = acc.selfadjointView<Eigen::Upper>();  // exact symmetry
    return hodge;
}

HodgeSpectrum spectrum(const HodgeMatrix& hodge, int m_request, int tm) {
    const Eigen::Index size = hodge.matrix.rows();
    if (m_request < 1 || m_request > size) throw std::invalid_argument("spectrum: m_request out of range");
    if (tm < 1) throw std::invalid_argument("spectrum: tm must be a positive integer");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hodge.matrix);
    if (solver.info() != Eigen::Success) throw std::runtime_error("spectrum: eigendecomposition failed");

    HodgeSpectrum spec;
    spec.order = hodge.order;
    spec.N = hodge.N;
    spec.block_size = hodge.block_size;
    spec.tm = tm;
    spec.t = hodge.t;
    spec.eigenvalues = solver.eigenvalues().reverse();
    spec.eigenvectors = solver.eigenvectors().rowwise().reverse();

    const double top = spec.eigenvalues(0);
    const double floor = -1e-8 * std::max(top, 0.0);
    if (spec.eigenvalues(size - 1) < floor)
        throw std::runtime_error("spectrum: matrix is not positive semidefinite");
    for (Eigen::Index l = 0; l < size; ++l)
        if (spec.eigenvalues(l) < 0.0) spec.eigenvalues(l) = 0.0;
    return spec;
}

namespace {

Eigen::VectorXd powered_eigenvalues(const HodgeSpectrum& spec) {
    Eigen::VectorXd lam = spec.eigenvalues;
    for (Eigen::Index l = 0; l < lam.size(); ++l) lam(l) = std::pow(lam(l), spec.tm);
    return lam;
}

}  // namespace

double affinity(const HodgeSpectrum& spec, int i, int j) {
    const Eigen::VectorXd lam = powered_eigenvalues(spec);
    // H^tm(i,j) = B_i diag(lambda^tm) B_j^T with B_p the C x L rows of point p.
    const Eigen::MatrixXd block =
        spec.point_rows(i) * lam.asDiagonal() * spec.point_rows(j).transpose();
    return block.squaredNorm();
}

double normalized_affinity(const HodgeSpectrum& spec, int i, int j) {
    const double top = spec.eigenvalues(0);
    if (!(top > 0.0)) throw std::runtime_error("normalized_affinity: degenerate spectrum (lambda_1 = 0)");
    const double scale = std::pow(top, 2.0 * spec.tm);
    return affinity(spec, i, j) / scale;
}

namespace {

Eigen::VectorXd half_powers(const HodgeSpectrum& spec, int m, bool normalized) {
    if (m < 1 || m > spec.count()) throw std::invalid_argument("embed: m out of range");
    Eigen::VectorXd lam_half(m);
    for (int l = 0; l < m; ++l) lam_half(l) = std::pow(spec.eigenvalues(l), 0.5 * spec.tm);
    if (normalized) {
        const double top = spec.eigenvalues(0);
        if (!(top > 0.0)) throw std::runtime_error("normalized_embed: degenerate spectrum (lambda_1 = 0)");
        lam_half /= std::pow(top, 0.5 * spec.tm);
    }
    return lam_half;
}

Eigen::MatrixXd eta_matrix(const HodgeSpectrum& spec, const Eigen::VectorXd& lam_half, int i) {
    const int m = static_cast<int>(lam_half.size());
    const auto rows = spec.point_rows(i);  // C x L
    const Eigen::MatrixXd gram = rows.leftCols(m).transpose() * rows.leftCols(m);
    Eigen::MatrixXd eta = lam_half.asDiagonal() * gram * lam_half.asDiagonal();
    return ((eta + eta.transpose()) * 0.5).eval();  // exact symmetry
}

Embedding embed_impl(const HodgeSpectrum& spec, int m, bool normalized) {
    const Eigen::VectorXd lam_half = half_powers(spec, m, normalized);
    Embedding out;
    out.m = m;
    out.tm = spec.tm;
    out.normalized = normalized;
    out.eta.reserve(static_cast<std::size_t>(spec.N));
    for (int i = 0; i < spec.N; ++i) out.eta.push_back(eta_matrix(spec, lam_half, i));
    return out;
}

}  // namespace

Embedding embed(const HodgeSpectrum& spec, int m) { return embed_impl(spec, m, false); }

Embedding normalized_embed(const HodgeSpectrum& spec, int m) { return embed_impl(spec, m, true); }

Eigen::MatrixXd embedding_matrix(const HodgeSpectrum& spec, int m, int i, bool normalized) {
    return eta_matrix(spec, half_powers(spec, m, normalized), i);
}

double hodge_distance(const Embedding& embedding, int i, int j) {
    const Eigen::MatrixXd& a = embedding.eta[static_cast<std::size_t>(i)];
    const Eigen::MatrixXd& b = embedding.eta[static_cast<std::size_t>(j)];
    return a.squaredNorm() + b.squaredNorm() - 2.0 * a.cwiseProduct(b).sum();
}

double truncation_bound(const HodgeSpectrum& spec, int m) {
    if (m < 1 || m >= spec.count()) throw std::invalid_argument("truncation_bound: need 1 <= m < eigenpair count");
    const double top = spec.eigenvalues(0);
    if (!(top > 0.0)) throw std::invalid_argument("truncation_bound: lambda_1 must be positive");
    const double ratio = spec.eigenvalues(m) / top;
    const double total = static_cast<double>(spec.N) * spec.block_size;
    return std::pow(ratio, spec.tm) * (total * total - static_cast<double>(m) * m);
}

}  // namespace hodgemaps
