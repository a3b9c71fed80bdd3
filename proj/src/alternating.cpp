#include "hodgemaps/alternating.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hodgemaps {

namespace {

std::size_t pow_size(int n, int k) {
    std::size_t s = 1;
    for (int i = 0; i < k; ++i) {
        if (n > 0 && s > (std::size_t{1} << 27) / static_cast<std::size_t>(n))
            throw std::invalid_argument("AlternatingArray: n^k table too large for the dense representation");
        s *= static_cast<std::size_t>(n);
    }
    return s;
}

int permutation_sign(std::span<const int> perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Visits every index tuple in [0,n)^k in row-major order.
template <typename F>
void for_each_tuple(int n, int k, F&& fn) {
    std::vector<int> idx(k, 0);
    while (true) {
        fn(std::span<const int>(idx));
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - 1) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[pos];
    }
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

AlternatingArray::AlternatingArray(int order, int ambient_dim)
    : order_(order), dim_(ambient_dim), data_(pow_size(ambient_dim, order), 0.0) {
    if (order < 0 || ambient_dim < 1) throw std::invalid_argument("AlternatingArray: order >= 0 and n >= 1 required");
}

AlternatingArray AlternatingArray::basis_vector(int ambient_dim, int axis) {
    AlternatingArray a(1, ambient_dim);
    a.data_[static_cast<std::size_t>(axis)] = 1.0;
    return a;
}

AlternatingArray AlternatingArray::from_vector(const Eigen::VectorXd& v) {
    AlternatingArray a(1, static_cast<int>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) a.data_[static_cast<std::size_t>(i)] = v(i);
    return a;
}

std::size_t AlternatingArray::flat(std::span<const int> idx) const {
    std::size_t f = 0;
    for (int i : idx) f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    return f;
}

AlternatingArray& AlternatingArray::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

AlternatingArray& AlternatingArray::operator+=(const AlternatingArray& other) {
    if (order_ != other.order_ || dim_ != other.dim_)
        throw std::invalid_argument("AlternatingArray: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

AlternatingArray AlternatingArray::operator-(const AlternatingArray& other) const {
    if (order_ != other.order_ || dim_ != other.dim_)
        throw std::invalid_argument("AlternatingArray: shape mismatch");
    AlternatingArray out(order_, dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
    return out;
}

double AlternatingArray::frobenius_norm() const {
    return std::sqrt(frobenius_inner(*this, *this));
}

double AlternatingArray::antisymmetry_violation() const {
    double worst = 0.0;
    std::vector<int> swapped(order_);
    for_each_tuple(dim_, order_, [&](std::span<const int> idx) {
        for (int a = 0; a + 1 < order_; ++a) {
            std::copy(idx.begin(), idx.end(), swapped.begin());
            std::swap(swapped[a], swapped[a + 1]);
            worst = std::max(worst, std::abs((*this)(swapped) + (*this)(idx)));
        }
    });
    return worst;
}

AlternatingArray wedge_arrays(const AlternatingArray& a, const AlternatingArray& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("wedge_arrays: mismatched ambient dimensions");
    const int k1 = a.order();
    const int k2 = b.order();
    const int k = k1 + k2;
    const int n = a.ambient_dim();
    AlternatingArray out(k, n);

    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> ia(k1), ib(k2);
    const double scale = 1.0 / (factorial(k1) * factorial(k2));
    // (w1 ^ w2)(i) = scale * sum_sigma sgn(sigma) w1(i_sigma(1..k1)) w2(i_sigma(k1+1..k))
    do {
        const int sign = permutation_sign(perm);
        for_each_tuple(n, k, [&](std::span<const int> idx) {
            for (int p = 0; p < k1; ++p) ia[p] = idx[perm[p]];
            for (int p = 0; p < k2; ++p) ib[p] = idx[perm[k1 + p]];
            out(idx) += sign * scale * a(ia) * b(ib);
        });
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

double frobenius_inner(const AlternatingArray& a, const AlternatingArray& b) {
    if (a.order() != b.order() || a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("frobenius_inner: shape mismatch");
    double s = 0.0;
    const auto& da = a.data();
    const auto& db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) s += da[i] * db[i];
    return s;
}

AlternatingArray wedge_basis_element(const Eigen::MatrixXd& frame, const MultiIndex& J) {
    const int n = static_cast<int>(frame.rows());
    const int k = static_cast<int>(J.size());
    AlternatingArray acc(0, n);
    acc.data()[0] = 1.0;
    for (int j : J) acc = wedge_arrays(acc, AlternatingArray::from_vector(frame.col(j)));
    acc *= 1.0 / std::sqrt(factorial(k));
    return acc;
}

Eigen::VectorXd project_alternating(const AlternatingArray& w, const Eigen::MatrixXd& frame) {
    const int d = static_cast<int>(frame.cols());
    const auto indices = enumerate_multi_indices(d, w.order());
    Eigen::VectorXd coeffs(static_cast<Eigen::Index>(indices.size()));
    for (std::size_t l = 0; l < indices.size(); ++l)
        coeffs(static_cast<Eigen::Index>(l)) = frobenius_inner(w, wedge_basis_element(frame, indices[l]));
    return coeffs;
}

}  // namespace hodgemaps
