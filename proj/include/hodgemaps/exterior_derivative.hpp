#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "hodgemaps/local_frames.hpp"
#include "hodgemaps/multiindex.hpp"
#include "hodgemaps/neighbors.hpp"

namespace hodgemaps {

/// Frame coefficients of a k-differential array: row i holds the C(d,k)
/// coefficients of the field at point i in lexicographic multi-index order.
struct CoefficientField {
    int order = 0;
    Eigen::MatrixXd values;  // N x C(d,k)

    int size() const { return static_cast<int>(values.rows()); }
};

/// Block matrix estimating the exterior derivative intrinsically: an N x N
/// grid of dense C(d,k+1) x C(d,k) blocks, present only for j in {i} u knn(i).
/// Rows (columns) are ordered by the lexicographic enumeration of order-(k+1)
/// (order-k) multi-indices. For k = d the blocks have zero rows.
struct BlockSparseOperator {
    int order = 0;  // k
    int N = 0;
    int d = 0;
    double t = 0.0;
    int block_rows = 0;  // C(d,k+1)
    int block_cols = 0;  // C(d,k)
    // Per block-row, (column index, block) pairs sorted by column index.
    std::vector<std::vector<std::pair<int, Eigen::MatrixXd>>> rows;

    const Eigen::MatrixXd* block(int i, int j) const;

    // Unscaled block-matrix action: out.row(i) = sum_j block(i,j) * f.row(j).
    Eigen::MatrixXd multiply(const Eigen::MatrixXd& field_values) const;

    Eigen::SparseMatrix<double> to_sparse() const;
};

// A(i,j) = exp(-|x_i-x_j|^2 / 2t^2) O(x_i)^T (x_j - x_i); zero for j = i.
Eigen::VectorXd displacement_vector(const PointCloud& cloud, const TangentFrameSet& frames, int i,
                                    int j, double t);

// Assembles ED_k = ED^1_k - ED^2_k over the neighbor graph. Off-diagonal
// blocks hold det([A_M(i,j) | O_M^T(x_i) O^J(x_j)]) / d_t(x_i); the diagonal
// holds the negated ED^2 term so one matrix realizes the difference.
BlockSparseOperator build_ed(const PointCloud& cloud, const NeighborGraph& graph,
                             const TangentFrameSet& frames, int k, int threads = 1);

// g = (sqrt(k+1)/t^2) ED_k f, the estimated exterior derivative in frame
// coefficients of order k+1.
CoefficientField apply_exterior_derivative(const BlockSparseOperator& ed, const CoefficientField& f);

}  // namespace hodgemaps
