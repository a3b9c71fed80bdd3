#pragma once

#include <functional>
#include <string>

#include "hodgemaps/neighbors.hpp"

namespace hodgemaps {

// steps x steps grid on the torus (x y z) = ((2+cos 2pi v) cos 2pi u,
// (2+cos 2pi v) sin 2pi u, sin 2pi v) with u, v on (i-1)/steps - 1/2.
// Rows ordered lexicographically in (i, j), u outer.
PointCloud torus_grid(int steps);

// steps x steps grid on the unit sphere (cos 2pi u sin pi v, sin 2pi u sin pi v,
// cos pi v) with u, v on (i-1)/steps. The v = 0 row collapses to the pole and
// the duplicate points are kept as generated.
PointCloud sphere_grid(int steps);

// N equispaced points (cos theta_i, sin theta_i), theta_i = 2 pi i / N.
PointCloud circle(int N);

/// Scalar function on the circle, parametrized by angle, with its derivative.
/// `derivative` is the coefficient of the exterior derivative in the unit
/// tangent frame (-sin theta, cos theta).
struct CircleForm {
    std::string name;
    std::function<double(double)> value;
    std::function<double(double)> derivative;
};

// Named analytic zero-forms: "sin", "cos", "sin2", "const".
CircleForm circle_zero_form(const std::string& name);

double circle_angle(int i, int N);

}  // namespace hodgemaps
