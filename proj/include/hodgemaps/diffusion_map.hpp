#pragma once

#include <Eigen/Dense>

#include "hodgemaps/neighbors.hpp"

namespace hodgemaps {

/// Classical diffusion map: row-stochastic kernel matrix P and the top
/// nontrivial spectral coordinates psi_i = (lambda_1 phi_1(i), ...).
struct DiffusionMap {
    Eigen::MatrixXd transition;   // N x N row-stochastic
    double epsilon = 0.0;
    Eigen::VectorXd eigenvalues;  // descending, includes the trivial leading 1
    Eigen::MatrixXd coordinates;  // N x m, nontrivial coordinates scaled by eigenvalues
};

// Gaussian affinities exp(-|x_i-x_j|^2/epsilon) with unit self-affinity,
// row-normalized; the eigenproblem is solved through the symmetric conjugate
// D^{1/2} P D^{-1/2}.
DiffusionMap diffusion_map(const PointCloud& cloud, double epsilon, int m);

}  // namespace hodgemaps
