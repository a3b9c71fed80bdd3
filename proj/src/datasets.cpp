#include "hodgemaps/datasets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hodgemaps {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

PointCloud torus_grid(int steps) {
    if (steps < 2) throw std::invalid_argument("torus_grid: steps >= 2 required");
    PointCloud cloud(static_cast<Eigen::Index>(steps) * steps, 3);
    Eigen::Index row = 0;
    for (int i = 0; i < steps; ++i) {
        const double u = static_cast<double>(i) / steps - 0.5;
        for (int j = 0; j < steps; ++j) {
            const double v = static_cast<double>(j) / steps - 0.5;
            const double ring = 2.0 + std::cos(kTwoPi * v);
            cloud(row, 0) = ring * std::cos(kTwoPi * u);
            cloud(row, 1) = ring * std::sin(kTwoPi * u);
            cloud(row, 2) = std::sin(kTwoPi * v);
            ++row;
        }
    }
    return cloud;
}

PointCloud sphere_grid(int steps) {
    if (steps < 2) throw std::invalid_argument("sphere_grid: steps >= 2 required");
    PointCloud cloud(static_cast<Eigen::Index>(steps) * steps, 3);
    Eigen::Index row = 0;
    for (int i = 0; i < steps; ++i) {
        const double u = static_cast<double>(i) / steps;
        for (int j = 0; j < steps; ++j) {
            const double v = static_cast<double>(j) / steps;
            cloud(row, 0) = std::cos(kTwoPi * u) * std::sin(std::numbers::pi * v);
            cloud(row, 1) = std::sin(kTwoPi * u) * std::sin(std::numbers::pi * v);
            cloud(row, 2) = std::cos(std::numbers::pi * v);
            ++row;
        }
    }
    return cloud;
}

PointCloud circle(int N) {
    if (N < 4) throw std::invalid_argument("circle: N >= 4 required");
    PointCloud cloud(N, 2);
    for (int i = 0; i < N; ++i) {
        const double theta = circle_angle(i, N);
        cloud(i, 0) = std::cos(theta);
        cloud(i, 1) = std::sin(theta);
    }
    return cloud;
}

double circle_angle(int i, int N) { return kTwoPi * i / N; }

CircleForm circle_zero_form(const std::string& name) {
    if (name == "sin")
        return {name, [](double th) { return std::sin(th); }, [](double th) { return std::cos(th); }};
    if (name == "cos")
        return {name, [](double th) { return std::cos(th); }, [](double th) { return -std::sin(th); }};
    if (name == "sin2")
        return {name, [](double th) { return std::sin(2.0 * th); },
                [](double th) { return 2.0 * std::cos(2.0 * th); }};
    if (name == "const") return {name, [](double) { return 1.0; }, [](double) { return 0.0; }};
    throw std::invalid_argument("circle_zero_form: unknown form '" + name + "'");
}

}  // namespace hodgemaps
