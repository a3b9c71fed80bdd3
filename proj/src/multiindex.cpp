#include "hodgemaps/multiindex.hpp"

#include <stdexcept>

namespace hodgemaps {

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::vector<MultiIndex> enumerate_multi_indices(int d, int k) {
    if (d < 0 || k < 0) throw std::invalid_argument("enumerate_multi_indices: d and k must be nonnegative");
    std::vector<MultiIndex> out;
    if (k > d) return out;
    out.reserve(static_cast<std::size_t>(binomial(d, k)));
    MultiIndex cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (k == 0) break;
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == d - k + pos) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

int multi_index_rank(const MultiIndex& idx, int d) {
    const int k = static_cast<int>(idx.size());
    std::int64_t rank = 0;
    int prev = -1;
    for (int pos = 0; pos < k; ++pos) {
        for (int v = prev + 1; v < idx[pos]; ++v) {
            rank += binomial(d - 1 - v, k - 1 - pos);
        }
        prev = idx[pos];
    }
    return static_cast<int>(rank);
}

Eigen::MatrixXd compound_matrix(const Eigen::MatrixXd& R, int k) {
    if (R.rows() != R.cols()) throw std::invalid_argument("compound_matrix: square matrix required");
    const int d = static_cast<int>(R.rows());
    const auto indices = enumerate_multi_indices(d, k);
    const auto c = static_cast<Eigen::Index>(indices.size());
    Eigen::MatrixXd out(c, c);
    Eigen::MatrixXd minor(k, k);
    for (Eigen::Index a = 0; a < c; ++a) {
        for (Eigen::Index b = 0; b < c; ++b) {
            for (int r = 0; r < k; ++r)
                for (int s = 0; s < k; ++s) minor(r, s) = R(indices[a][r], indices[b][s]);
            out(a, b) = k == 0 ? 1.0 : minor.determinant();
        }
    }
    return out;
}

}  // namespace hodgemaps
