#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "hodgemaps/datasets.hpp"
#include "hodgemaps/diffusion_map.hpp"
#include "hodgemaps/io.hpp"
#include "hodgemaps/pipeline.hpp"

using namespace hodgemaps;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("diffusion map baseline") {
    SUBCASE("two coincident points") {
        PointCloud cloud(2, 1);
        cloud << 5.0, 5.0;
        const DiffusionMap dm = diffusion_map(cloud, 1.0, 1);
        CHECK(dm.transition(0, 0) == doctest::Approx(0.5));
        CHECK(dm.transition(0, 1) == doctest::Approx(0.5));
        CHECK(dm.transition(1, 0) == doctest::Approx(0.5));
    }

    SUBCASE("stochastic structure on a random cloud") {
        std::mt19937 rng(91);
        std::normal_distribution<double> normal(0.0, 1.0);
        PointCloud cloud(30, 3);
        for (Eigen::Index i = 0; i < 30; ++i)
            for (Eigen::Index j = 0; j < 3; ++j) cloud(i, j) = normal(rng);
        const DiffusionMap dm = diffusion_map(cloud, 0.8, 4);

        const Eigen::VectorXd row_sums = dm.transition.rowwise().sum();
        CHECK((row_sums.array() - 1.0).abs().maxCoeff() <= 1e-12);
        CHECK(dm.transition.minCoeff() >= 0.0);
        CHECK(dm.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(dm.eigenvalues.maxCoeff() <= 1.0 + 1e-10);
        CHECK(dm.eigenvalues.minCoeff() >= -1.0 - 1e-10);

        // constants are P-invariant
        const Eigen::VectorXd ones = Eigen::VectorXd::Ones(30);
        CHECK((dm.transition * ones - ones).cwiseAbs().maxCoeff() <= 1e-12);

        CHECK(dm.coordinates.rows() == 30);
        CHECK(dm.coordinates.cols() == 4);
    }

    SUBCASE("argument validation") {
        PointCloud cloud(4, 1);
        cloud << 0, 1, 2, 3;
        CHECK_THROWS_AS((void)diffusion_map(cloud, 0.0, 1), std::invalid_argument);
        CHECK_THROWS_AS((void)diffusion_map(cloud, 1.0, 4), std::invalid_argument);
    }
}

TEST_CASE("points CSV round-trips through comments and 17-digit decimals") {
    const std::string path = temp_path("points_rt.csv");
    {
        std::ofstream out(path);
        out << "# generated fixture\n";
        out << "0.1,0.2,0.30000000000000004\n";
        out << "\n";
        out << "1.0e-3, -2.5,0.0\n";
    }
    const PointCloud cloud = read_points_csv(path);
    REQUIRE(cloud.rows() == 2);
    REQUIRE(cloud.cols() == 3);
    CHECK(cloud(0, 2) == 0.30000000000000004);

    const std::string path2 = temp_path("points_rt2.csv");
    write_points_csv(path2, cloud);
    const PointCloud back = read_points_csv(path2);
    CHECK(back == cloud);  // bitwise, thanks to round-trip formatting

    std::filesystem::remove(path);
    std::filesystem::remove(path2);
}

TEST_CASE("format_double round-trips doubles exactly") {
    std::mt19937 rng(97);
    std::uniform_real_distribution<double> uni(-1e6, 1e6);
    for (int rep = 0; rep < 200; ++rep) {
        const double v = uni(rng) * std::pow(10.0, rep % 7 - 3);
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("embedding artifacts") {
    const PointCloud cloud = circle(64);
    FitConfig config;
    config.k_order = 0;
    config.knn_count = 8;
    const FitResult fit = run_fit(cloud, config);

    SUBCASE("embedding CSV has the upper-triangle column count") {
        const std::string path = temp_path("embedding.csv");
        write_embedding_csv(path, fit.embedding);
        std::ifstream in(path);
        std::string header;
        std::getline(in, header);
        CHECK(header == "index,(1 1),(1 2),(1 3),(2 2),(2 3),(3 3)");
        int rows = 0;
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) ++rows;
        CHECK(rows == 64);
        std::filesystem::remove(path);
    }

    SUBCASE("diagonal CSV carries the m diagonal entries") {
        const std::string path = temp_path("embedding_diag.csv");
        write_diagonal_csv(path, fit.embedding);
        std::ifstream in(path);
        std::string header;
        std::getline(in, header);
        CHECK(header == "index,(1 1),(2 2),(3 3)");
        std::filesystem::remove(path);
    }

    SUBCASE("eigenvalues CSV is descending") {
        const std::string path = temp_path("eigenvalues.csv");
        write_eigenvalues_csv(path, fit.spec.eigenvalues);
        std::ifstream in(path);
        double prev = std::numeric_limits<double>::infinity();
        double v = 0.0;
        int count = 0;
        while (in >> v) {
            CHECK(v <= prev);
            prev = v;
            ++count;
        }
        CHECK(count == fit.spec.count());
        std::filesystem::remove(path);
    }

    SUBCASE("spectrum cache reproduces embeddings") {
        const std::string path = temp_path("spectrum.txt");
        write_spectrum_cache(path, fit.spec, 8);
        const HodgeSpectrum cached = read_spectrum_cache(path);
        CHECK(cached.count() == 8);
        CHECK(cached.t == fit.spec.t);
        const Embedding direct = normalized_embed(fit.spec, 3);
        const Embedding from_cache = normalized_embed(cached, 3);
        for (int i = 0; i < direct.size(); ++i)
            CHECK((direct.eta[static_cast<std::size_t>(i)] -
                   from_cache.eta[static_cast<std::size_t>(i)])
                      .cwiseAbs()
                      .maxCoeff() == 0.0);
        std::filesystem::remove(path);
    }
}

TEST_CASE("svg scatter writes a well-formed file") {
    const std::string path = temp_path("scatter.svg");
    write_svg_scatter(path, {0.0, 1.0, 2.0}, {1.0, 0.5, 2.0}, "demo");
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content.find("<svg") != std::string::npos);
    CHECK(content.find("</svg>") != std::string::npos);
    CHECK(content.find("circle") != std::string::npos);
    std::filesystem::remove(path);
}
