#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "hodgemaps/multiindex.hpp"

namespace hodgemaps {

/// Dense k-dimensional array over R^n, antisymmetric under index permutations.
///
/// This is the explicit (size n^k) representation of an alternating form. The
/// production operator assembly never materializes these; they back the
/// wedge/projection oracles and small-instance tests.
class AlternatingArray {
public:
    AlternatingArray(int order, int ambient_dim);

    static AlternatingArray basis_vector(int ambient_dim, int axis);
    static AlternatingArray from_vector(const Eigen::VectorXd& v);

    int order() const { return order_; }
    int ambient_dim() const { return dim_; }

    double operator()(std::span<const int> idx) const { return data_[flat(idx)]; }
    double& operator()(std::span<const int> idx) { return data_[flat(idx)]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    AlternatingArray& operator*=(double s);
    AlternatingArray& operator+=(const AlternatingArray& other);
    AlternatingArray operator-(const AlternatingArray& other) const;

    double frobenius_norm() const;

    // Largest |f(sigma(idx)) - sgn(sigma) f(idx)| over all entries and all
    // transpositions; zero for a genuinely alternating array.
    double antisymmetry_violation() const;

private:
    std::size_t flat(std::span<const int> idx) const;

    int order_;
    int dim_;
    std::vector<double> data_;
};

AlternatingArray wedge_arrays(const AlternatingArray& a, const AlternatingArray& b);

double frobenius_inner(const AlternatingArray& a, const AlternatingArray& b);

// Unit-norm wedge basis element O_J = (1/sqrt(k!)) O_{j1} ^ ... ^ O_{jk}
// built from the columns of an orthonormal frame (n x d).
AlternatingArray wedge_basis_element(const Eigen::MatrixXd& frame, const MultiIndex& J);

// Coefficients <w, O_J>_F of the orthogonal projection of w onto the span of
// the wedge basis of `frame`, in lexicographic multi-index order.
Eigen::VectorXd project_alternating(const AlternatingArray& w, const Eigen::MatrixXd& frame);

}  // namespace hodgemaps
