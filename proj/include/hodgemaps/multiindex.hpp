#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace hodgemaps {

// Strictly increasing tuple of 0-based axis indices in [0, d).
// The empty tuple is the single multi-index of order 0.
using MultiIndex = std::vector<int>;

std::int64_t binomial(int n, int k);

// All order-k multi-indices over [0, d) in lexicographic order.
// Returns C(d,k) entries; empty for k > d; the single empty tuple for k = 0.
std::vector<MultiIndex> enumerate_multi_indices(int d, int k);

// Lexicographic rank of `idx` among all multi-indices of its order over [0, d).
int multi_index_rank(const MultiIndex& idx, int d);

// Matrix of k-by-k minors det(R[M, L]) of a d-by-d matrix, rows/columns
// indexed by the lexicographic multi-index enumeration. For orthogonal R this
// is the rotation induced on wedge-basis coefficients.
Eigen::MatrixXd compound_matrix(const Eigen::MatrixXd& R, int k);

}  // namespace hodgemaps
