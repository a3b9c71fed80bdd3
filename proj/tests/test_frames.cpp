#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "hodgemaps/io.hpp"
#include "hodgemaps/local_frames.hpp"

using namespace hodgemaps;

namespace {

PointCloud planar_cloud(int N, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    PointCloud cloud(N, 3);
    for (int i = 0; i < N; ++i) {
        cloud(i, 0) = uni(rng);
        cloud(i, 1) = uni(rng);
        cloud(i, 2) = 0.0;
    }
    return cloud;
}

TangentFrameSet frames_of(const PointCloud& cloud, int K, double gamma = 0.9) {
    NeighborGraph graph = knn(cloud, K);
    set_bandwidth(graph, default_bandwidth(cloud));
    return local_frames(cloud, graph, gamma);
}

}  // namespace

TEST_CASE("lower median") {
    CHECK(lower_median({2, 2, 2}) == 2);
    CHECK(lower_median({1, 2, 2, 3}) == 2);
    CHECK(lower_median({1, 3}) == 1);
    CHECK(lower_median({5}) == 5);
    CHECK_THROWS_AS((void)lower_median({}), std::invalid_argument);
}

TEST_CASE("coplanar points yield d=2 with the xy-plane as tangent space") {
    const PointCloud cloud = planar_cloud(60, 3);
    const TangentFrameSet frames = frames_of(cloud, 8);
    CHECK(intrinsic_dimension(frames) == 2);

    Eigen::Matrix3d truth = Eigen::Matrix3d::Zero();
    truth(0, 0) = truth(1, 1) = 1.0;
    for (const auto& frame : frames.frames) {
        const Eigen::Matrix3d proj = frame * frame.transpose();
        CHECK((proj - truth).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("collinear points yield d=1") {
    PointCloud cloud(30, 3);
    cloud.setZero();
    for (int i = 0; i < 30; ++i) cloud(i, 0) = 0.11 * i;
    const TangentFrameSet frames = frames_of(cloud, 4);
    CHECK(frames.d == 1);
    for (const auto& frame : frames.frames) {
        CHECK(std::abs(frame(0, 0)) == doctest::Approx(1.0));
    }
}

TEST_CASE("frame columns are orthonormal") {
    std::mt19937 rng(5);
    std::normal_distribution<double> normal(0.0, 1.0);
    PointCloud cloud(80, 4);
    for (Eigen::Index i = 0; i < cloud.rows(); ++i)
        for (Eigen::Index j = 0; j < 4; ++j) cloud(i, j) = normal(rng);
    const TangentFrameSet frames = frames_of(cloud, 10);
    for (const auto& frame : frames.frames) {
        const Eigen::MatrixXd gram = frame.transpose() * frame;
        CHECK((gram - Eigen::MatrixXd::Identity(frames.d, frames.d)).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("tangent span does not depend on the neighbor order") {
    const PointCloud cloud = planar_cloud(40, 9);
    NeighborGraph graph = knn(cloud, 7);
    set_bandwidth(graph, default_bandwidth(cloud));
    const TangentFrameSet base = local_frames(cloud, graph, 0.9);

    NeighborGraph shuffled = graph;
    std::mt19937 rng(10);
    for (Eigen::Index i = 0; i < shuffled.indices.rows(); ++i) {
        std::vector<int> order(static_cast<std::size_t>(shuffled.K));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const Eigen::VectorXi idx_row = shuffled.indices.row(i);
        const Eigen::VectorXd dist_row = shuffled.distances.row(i);
        for (int l = 0; l < shuffled.K; ++l) {
            shuffled.indices(i, l) = idx_row(order[static_cast<std::size_t>(l)]);
            shuffled.distances(i, l) = dist_row(order[static_cast<std::size_t>(l)]);
        }
    }
    const TangentFrameSet permuted = local_frames(cloud, shuffled, 0.9);
    REQUIRE(permuted.d == base.d);
    for (int i = 0; i < base.size(); ++i) {
        const Eigen::MatrixXd pa =
            base.frames[static_cast<std::size_t>(i)] * base.frames[static_cast<std::size_t>(i)].transpose();
        const Eigen::MatrixXd pb = permuted.frames[static_cast<std::size_t>(i)] *
                                   permuted.frames[static_cast<std::size_t>(i)].transpose();
        CHECK((pa - pb).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("degenerate neighborhoods") {
    SUBCASE("all-duplicate cloud cannot be framed") {
        PointCloud cloud(6, 2);
        cloud.setOnes();
        NeighborGraph graph = knn(cloud, 3);
        set_bandwidth(graph, 1.0);
        CHECK_THROWS_AS((void)local_frames(cloud, graph, 0.9), std::runtime_error);
    }

    SUBCASE("a duplicate cluster falls back to coordinate axes") {
        // 5 copies of the origin plus a planar crowd; K small enough that the
        // cluster only sees itself.
        PointCloud cloud(45, 3);
        cloud.topRows(5).setZero();
        const PointCloud crowd = planar_cloud(40, 13);
        cloud.bottomRows(40) = crowd.rowwise() + Eigen::RowVector3d(10.0, 0.0, 0.0);
        const TangentFrameSet frames = frames_of(cloud, 4);
        CHECK(frames.d == 2);
        for (int i = 0; i < 5; ++i) {
            CHECK(frames.raw_dims[static_cast<std::size_t>(i)] == 0);
            CHECK(frames.frames[static_cast<std::size_t>(i)](0, 0) == 1.0);
            CHECK(frames.frames[static_cast<std::size_t>(i)](1, 1) == 1.0);
        }
    }
}

TEST_CASE("gamma at the extremes stays clamped") {
    const PointCloud cloud = planar_cloud(30, 21);
    const TangentFrameSet lo = frames_of(cloud, 6, 1e-9);
    CHECK(lo.d == 1);
    const TangentFrameSet hi = frames_of(cloud, 6, 1.0 - 1e-12);
    CHECK(hi.d >= 2);  // sigma_3 = 0 exactly, so the share reaches gamma at 2
    CHECK(hi.d <= 3);
}

TEST_CASE("frames serialize and round-trip") {
    const PointCloud cloud = planar_cloud(25, 33);
    const TangentFrameSet frames = frames_of(cloud, 6);
    const std::string path = (std::filesystem::temp_directory_path() / "frames_rt.txt").string();
    write_frames(path, frames);
    const TangentFrameSet back = read_frames(path);
    REQUIRE(back.d == frames.d);
    REQUIRE(back.size() == frames.size());
    for (int i = 0; i < frames.size(); ++i)
        CHECK(back.frames[static_cast<std::size_t>(i)] == frames.frames[static_cast<std::size_t>(i)]);
    std::filesystem::remove(path);
}
