#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hodgemaps/datasets.hpp"

using namespace hodgemaps;

TEST_CASE("torus grid") {
    const PointCloud cloud = torus_grid(50);
    REQUIRE(cloud.rows() == 2500);
    REQUIRE(cloud.cols() == 3);

    // (u, v) = (0, 0) sits at grid offsets (25, 25)
    const Eigen::RowVector3d at_origin = cloud.row(25 * 50 + 25);
    CHECK(at_origin(0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(std::abs(at_origin(1)) <= 1e-12);
    CHECK(std::abs(at_origin(2)) <= 1e-12);

    for (Eigen::Index i = 0; i < cloud.rows(); ++i) {
        const double ring = std::sqrt(cloud(i, 0) * cloud(i, 0) + cloud(i, 1) * cloud(i, 1)) - 2.0;
        CHECK(std::abs(ring * ring + cloud(i, 2) * cloud(i, 2) - 1.0) <= 1e-12);
    }

    CHECK(torus_grid(20).rows() == 400);
    CHECK_THROWS_AS((void)torus_grid(1), std::invalid_argument);
}

TEST_CASE("sphere grid") {
    const PointCloud cloud = sphere_grid(50);
    REQUIRE(cloud.rows() == 2500);
    for (Eigen::Index i = 0; i < cloud.rows(); ++i)
        CHECK(std::abs(cloud.row(i).norm() - 1.0) <= 1e-12);

    // (u, v) = (0, 1/2) maps to (1, 0, 0)
    const Eigen::RowVector3d equator = sphere_grid(2).row(1);
    CHECK(equator(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(equator(1)) <= 1e-12);
    CHECK(std::abs(equator(2)) <= 1e-12);

    // the v = 0 column collapses to the pole and the duplicates are kept
    const PointCloud tiny = sphere_grid(2);
    REQUIRE(tiny.rows() == 4);
    CHECK((tiny.row(0) - tiny.row(2)).norm() == 0.0);
    CHECK(tiny(0, 2) == doctest::Approx(1.0));
}

TEST_CASE("circle and its analytic forms") {
    const PointCloud four = circle(4);
    REQUIRE(four.rows() == 4);
    CHECK((four.row(0) - Eigen::RowVector2d(1, 0)).norm() <= 1e-15);
    CHECK((four.row(1) - Eigen::RowVector2d(0, 1)).norm() <= 1e-12);
    CHECK((four.row(2) - Eigen::RowVector2d(-1, 0)).norm() <= 1e-12);
    CHECK((four.row(3) - Eigen::RowVector2d(0, -1)).norm() <= 1e-12);
    CHECK_THROWS_AS((void)circle(3), std::invalid_argument);

    const CircleForm sine = circle_zero_form("sin");
    CHECK(sine.value(0.0) == doctest::Approx(0.0));
    CHECK(sine.derivative(0.0) == doctest::Approx(1.0));

    const CircleForm constant = circle_zero_form("const");
    for (double th : {0.0, 1.0, 2.5}) CHECK(constant.derivative(th) == 0.0);

    CHECK_THROWS_AS((void)circle_zero_form("nope"), std::invalid_argument);
}

TEST_CASE("generators are deterministic") {
    const PointCloud a = torus_grid(13);
    const PointCloud b = torus_grid(13);
    CHECK(a == b);
    const PointCloud c = sphere_grid(9);
    const PointCloud d = sphere_grid(9);
    CHECK(c == d);
}
