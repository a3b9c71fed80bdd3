#include "hodgemaps/exterior_derivative.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hodgemaps/parallel.hpp"

namespace hodgemaps {

namespace {

// det of the (k+1)x(k+1) concatenation [a_M | G(M, J)] for every (M, J) pair,
// written into `block` (rows M, columns J).
void fill_det_block(const Eigen::VectorXd& a, const Eigen::MatrixXd& gram,
                    const std::vector<MultiIndex>& rows_idx, const std::vector<MultiIndex>& cols_idx,
                    double scale, Eigen::MatrixXd& block, Eigen::MatrixXd& scratch) {
    const int kp1 = static_cast<int>(scratch.rows());
    for (std::size_t mi = 0; mi < rows_idx.size(); ++mi) {
        const MultiIndex& M = rows_idx[mi];
        for (std::size_t ji = 0; ji < cols_idx.size(); ++ji) {
            const MultiIndex& J = cols_idx[ji];
            for (int r = 0; r < kp1; ++r) {
                scratch(r, 0) = a(M[static_cast<std::size_t>(r)]);
                for (int c = 1; c < kp1; ++c)
                    scratch(r, c) = gram(M[static_cast<std::size_t>(r)], J[static_cast<std::size_t>(c - 1)]);
            }
            block(static_cast<Eigen::Index>(mi), static_cast<Eigen::Index>(ji)) =
                scale * scratch.determinant();
        }
    }
}

}  // namespace

const Eigen::MatrixXd* BlockSparseOperator::block(int i, int j) const {
    for (const auto& [col, b] : rows[static_cast<std::size_t>(i)])
        if (col == j) return &b;
    return nullptr;
}

Eigen::MatrixXd BlockSparseOperator::multiply(const Eigen::MatrixXd& field_values) const {
    if (field_values.rows() != N || field_values.cols() != block_cols)
        throw std::invalid_argument("BlockSparseOperator: field shape mismatch");
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(N, block_rows);
    for (int i = 0; i < N; ++i) {
        for (const auto& [col, b] : rows[static_cast<std::size_t>(i)])
            out.row(i) += (b * field_values.row(col).transpose()).transpose();
    }
    return out;
}

Eigen::SparseMatrix<double> BlockSparseOperator::to_sparse() const {
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(rows.size() * 32 * static_cast<std::size_t>(block_rows * block_cols + 1));
    for (int i = 0; i < N; ++i) {
        for (const auto& [col, b] : rows[static_cast<std::size_t>(i)])
            for (int r = 0; r < block_rows; ++r)
                for (int c = 0; c < block_cols; ++c)
                    trips.emplace_back(i * block_rows + r, col * block_cols + c, b(r, c));
    }
    Eigen::SparseMatrix<double> sp(static_cast<Eigen::Index>(N) * block_rows,
                                   static_cast<Eigen::Index>(N) * block_cols);
    sp.setFromTriplets(trips.begin(), trips.end());
    return sp;
}

Eigen::VectorXd displacement_vector(const PointCloud& cloud, const TangentFrameSet& frames, int i,
                                    int j, double t) {
    if (i == j) return Eigen::VectorXd::Zero(frames.d);
    const Eigen::VectorXd delta = (cloud.row(j) - cloud.row(i)).transpose();
    const double w = std::exp(-delta.squaredNorm() / (2.0 * t * t));
    return w * (frames.frames[static_cast<std::size_t>(i)].transpose() * delta);
}

BlockSparseOperator build_ed(const PointCloud& cloud, const NeighborGraph& graph,
                             const TangentFrameSet& frames, int k, int threads) {
    const int d = frames.d;
    if (k < 0 || k > d) throw std::invalid_argument("build_ed: k must lie in [0, d]");
    if (!(graph.t > 0.0)) throw std::invalid_argument("build_ed: graph bandwidth t not set");
    if (frames.size() != graph.size()) throw std::invalid_argument("build_ed: frames/graph size mismatch");

    const int N = graph.size();
    const auto rows_idx = enumerate_multi_indices(d, k + 1);
    const auto cols_idx = enumerate_multi_indices(d, k);

    BlockSparseOperator ed;
    ed.order = k;
    ed.N = N;
    ed.d = d;
    ed.t = graph.t;
    ed.block_rows = static_cast<int>(rows_idx.size());
    ed.block_cols = static_cast<int>(cols_idx.size());
    ed.rows.resize(static_cast<std::size_t>(N));

    const double inv = 1.0 / (2.0 * graph.t * graph.t);

    parallel_for(N, threads, [&](int i) {
        const Eigen::MatrixXd& Oi = frames.frames[static_cast<std::size_t>(i)];
        const double inv_norm = 1.0 / normalizer(graph, i);

        std::vector<std::pair<int, Eigen::MatrixXd>> row;
        row.reserve(static_cast<std::size_t>(graph.K) + 1);

        Eigen::MatrixXd scratch(k + 1, k + 1);
        Eigen::VectorXd a_sum = Eigen::VectorXd::Zero(d);
        for (int l = 0; l < graph.K; ++l) {
            const int j = graph.indices(i, l);
            const Eigen::VectorXd delta = (cloud.row(j) - cloud.row(i)).transpose();
            const Eigen::VectorXd a = std::exp(-delta.squaredNorm() * inv) * (Oi.transpose() * delta);
            a_sum += a;
            Eigen::MatrixXd block(ed.block_rows, ed.block_cols);
            const Eigen::MatrixXd gram = Oi.transpose() * frames.frames[static_cast<std::size_t>(j)];
            fill_det_block(a, gram, rows_idx, cols_idx, inv_norm, block, scratch);
            row.emplace_back(j, std::move(block));
        }

        // Diagonal: -ED^2(i), so that the single matrix realizes ED^1 - ED^2.
        Eigen::MatrixXd diag(ed.block_rows, ed.block_cols);
        const Eigen::MatrixXd gram_self = Oi.transpose() * Oi;
        fill_det_block(a_sum, gram_self, rows_idx, cols_idx, -inv_norm, diag, scratch);
        row.emplace_back(i, std::move(diag));

        std::sort(row.begin(), row.end(),
                  [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
        ed.rows[static_cast<std::size_t>(i)] = std::move(row);
    });
    return ed;
}

CoefficientField apply_exterior_derivative(const BlockSparseOperator& ed, const CoefficientField& f) {
    if (f.order != ed.order) throw std::invalid_argument("apply_exterior_derivative: field order mismatch");
    CoefficientField out;
    out.order = ed.order + 1;
    out.values = ed.multiply(f.values);
    out.values *= std::sqrt(static_cast<double>(ed.order + 1)) / (ed.t * ed.t);
    return out;
}

}  // namespace hodgemaps
