#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hodgemaps/alternating.hpp"
#include "hodgemaps/multiindex.hpp"

using namespace hodgemaps;

namespace {

Eigen::MatrixXd random_orthonormal(int n, int d, std::mt19937& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd g(n, d);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < d; ++c) g(r, c) = normal(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    return Eigen::MatrixXd(qr.householderQ()).leftCols(d);
}

AlternatingArray random_one_array(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = uni(rng);
    return AlternatingArray::from_vector(v);
}

}  // namespace

TEST_CASE("multi-index enumeration is lexicographic and complete") {
    const auto idx32 = enumerate_multi_indices(3, 2);
    REQUIRE(idx32.size() == 3);
    CHECK(idx32[0] == MultiIndex{0, 1});
    CHECK(idx32[1] == MultiIndex{0, 2});
    CHECK(idx32[2] == MultiIndex{1, 2});

    const auto idx50 = enumerate_multi_indices(5, 0);
    REQUIRE(idx50.size() == 1);
    CHECK(idx50[0].empty());

    CHECK(enumerate_multi_indices(2, 3).empty());

    for (int d = 0; d <= 6; ++d)
        for (int k = 0; k <= d + 1; ++k) {
            const auto all = enumerate_multi_indices(d, k);
            CHECK(static_cast<std::int64_t>(all.size()) == binomial(d, k));
            for (std::size_t l = 0; l < all.size(); ++l)
                CHECK(multi_index_rank(all[l], d) == static_cast<int>(l));
        }
}

TEST_CASE("wedge of coordinate 1-arrays") {
    const auto e1 = AlternatingArray::basis_vector(2, 0);
    const auto e2 = AlternatingArray::basis_vector(2, 1);

    const auto w = wedge_arrays(e1, e2);
    const int i01[] = {0, 1}, i10[] = {1, 0}, i00[] = {0, 0}, i11[] = {1, 1};
    CHECK(w(i01) == doctest::Approx(1.0));
    CHECK(w(i10) == doctest::Approx(-1.0));
    CHECK(w(i00) == doctest::Approx(0.0));
    CHECK(w(i11) == doctest::Approx(0.0));

    const auto zero = wedge_arrays(e1, e1);
    CHECK(zero.frobenius_norm() == doctest::Approx(0.0));

    auto flipped = wedge_arrays(e2, e1);
    flipped *= -1.0;
    CHECK((w - flipped).frobenius_norm() == doctest::Approx(0.0));
}

TEST_CASE("frobenius inner product") {
    const auto e1 = AlternatingArray::basis_vector(2, 0);
    const auto e2 = AlternatingArray::basis_vector(2, 1);
    const auto w = wedge_arrays(e1, e2);
    CHECK(frobenius_inner(w, w) == doctest::Approx(2.0));

    const AlternatingArray zero(2, 2);
    CHECK(frobenius_inner(w, zero) == 0.0);

    auto unit = w;
    unit *= 1.0 / std::sqrt(2.0);
    CHECK(frobenius_inner(unit, unit) == doctest::Approx(1.0));

    const AlternatingArray other_shape(2, 3);
    CHECK_THROWS_AS((void)frobenius_inner(w, other_shape), std::invalid_argument);
}

TEST_CASE("wedge requires matching ambient dimension") {
    const auto a = AlternatingArray::basis_vector(2, 0);
    const auto b = AlternatingArray::basis_vector(3, 0);
    CHECK_THROWS_AS((void)wedge_arrays(a, b), std::invalid_argument);
}

TEST_CASE("wedge output is alternating and associative") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 5; ++rep) {
        const auto a = random_one_array(4, rng);
        const auto b = random_one_array(4, rng);
        const auto c = random_one_array(4, rng);
        const auto ab = wedge_arrays(a, b);
        CHECK(ab.antisymmetry_violation() <= 1e-14);
        const auto abc_left = wedge_arrays(ab, c);
        const auto abc_right = wedge_arrays(a, wedge_arrays(b, c));
        CHECK(abc_left.antisymmetry_violation() <= 1e-13);
        CHECK((abc_left - abc_right).frobenius_norm() <= 1e-12);
    }
}

TEST_CASE("wedge basis is orthonormal for orthonormal frames") {
    std::mt19937 rng(11);
    const auto frame = random_orthonormal(5, 3, rng);
    for (int k = 1; k <= 3; ++k) {
        const auto indices = enumerate_multi_indices(3, k);
        for (std::size_t a = 0; a < indices.size(); ++a)
            for (std::size_t b = 0; b < indices.size(); ++b) {
                const double inner = frobenius_inner(wedge_basis_element(frame, indices[a]),
                                                     wedge_basis_element(frame, indices[b]));
                CHECK(inner == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));
            }
    }
}

TEST_CASE("projection onto a tangent wedge basis") {
    Eigen::MatrixXd axes = Eigen::MatrixXd::Identity(3, 2);

    SUBCASE("wedge basis element projects to a unit coefficient") {
        const auto w = wedge_basis_element(axes, {0, 1});
        const Eigen::VectorXd c = project_alternating(w, axes);
        REQUIRE(c.size() == 1);
        CHECK(c(0) == doctest::Approx(1.0));
    }

    SUBCASE("arrays built from complement directions project to zero") {
        const auto e3 = AlternatingArray::basis_vector(3, 2);
        const auto e1 = AlternatingArray::basis_vector(3, 0);
        const auto w = wedge_arrays(e1, e3);
        const Eigen::VectorXd c = project_alternating(w, axes);
        CHECK(c.cwiseAbs().maxCoeff() <= 1e-15);
    }

    SUBCASE("projection is idempotent on reconstructed arrays") {
        std::mt19937 rng(23);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        const auto frame = random_orthonormal(3, 2, rng);
        const auto indices = enumerate_multi_indices(2, 2);
        Eigen::VectorXd coeff(indices.size());
        for (Eigen::Index l = 0; l < coeff.size(); ++l) coeff(l) = uni(rng);

        AlternatingArray w(2, 3);
        for (std::size_t l = 0; l < indices.size(); ++l) {
            auto term = wedge_basis_element(frame, indices[l]);
            term *= coeff(static_cast<Eigen::Index>(l));
            w += term;
        }
        const Eigen::VectorXd back = project_alternating(w, frame);
        CHECK((back - coeff).cwiseAbs().maxCoeff() <= 1e-12);
    }

    SUBCASE("projection is a contraction") {
        std::mt19937 rng(29);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        const auto frame = random_orthonormal(4, 3, rng);
        for (int rep = 0; rep < 5; ++rep) {
            const auto w = wedge_arrays(random_one_array(4, rng), random_one_array(4, rng));
            const Eigen::VectorXd c = project_alternating(w, frame);
            CHECK(c.norm() <= w.frobenius_norm() * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("compound matrix matches wedge-basis coefficients") {
    std::mt19937 rng(31);
    const int d = 3;
    const Eigen::MatrixXd frame = random_orthonormal(5, d, rng);
    const Eigen::MatrixXd rot = random_orthonormal(d, d, rng);
    const Eigen::MatrixXd rotated = frame * rot;

    for (int k = 1; k <= d; ++k) {
        const Eigen::MatrixXd comp = compound_matrix(rot, k);
        const auto indices = enumerate_multi_indices(d, k);
        // column L of the compound holds the coefficients of O'_L in {O_J}
        for (std::size_t L = 0; L < indices.size(); ++L) {
            const auto rotated_basis = wedge_basis_element(rotated, indices[L]);
            const Eigen::VectorXd coeff = project_alternating(rotated_basis, frame);
            for (std::size_t J = 0; J < indices.size(); ++J)
                CHECK(coeff(static_cast<Eigen::Index>(J)) ==
                      doctest::Approx(comp(static_cast<Eigen::Index>(J), static_cast<Eigen::Index>(L)))
                          .epsilon(1e-10));
        }
        // orthogonality carries over to the compound
        const Eigen::MatrixXd gram = comp.transpose() * comp;
        CHECK((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() <=
              1e-12);
    }
}
