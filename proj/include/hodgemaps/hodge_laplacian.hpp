#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hodgemaps/exterior_derivative.hpp"

namespace hodgemaps {

/// Dense symmetric Hodge-Laplacian matrix of order k, an N x N grid of
/// C(d,k) x C(d,k) blocks.
struct HodgeMatrix {
    int order = 0;
    int N = 0;
    int d = 0;
    double t = 0.0;
    int block_size = 0;  // C(d,k)
    Eigen::MatrixXd matrix;

    Eigen::Block<const Eigen::MatrixXd> block(int i, int j) const {
        return matrix.block(static_cast<Eigen::Index>(i) * block_size,
                            static_cast<Eigen::Index>(j) * block_size, block_size, block_size);
    }
};

// H_{k,t} = (1/t^4) ((k+1) ED_k^T ED_k + k ED_{k-1} ED_{k-1}^T).
// `ed_km1` must be given exactly when k >= 1. Symmetric by construction
// (upper triangle mirrored), positive semidefinite up to roundoff.
HodgeMatrix build_hodge(const BlockSparseOperator& ed_k, const BlockSparseOperator* ed_km1);

/// Full eigendecomposition of a Hodge-Laplacian matrix: eigenvalues in
/// descending order (tiny negatives clamped to zero after the PSD check) and
/// orthonormal eigenvectors partitioned into N blocks of length C(d,k).
struct HodgeSpectrum {
    int order = 0;
    int N = 0;
    int block_size = 0;
    int tm = 1;
    double t = 0.0;
    Eigen::VectorXd eigenvalues;   // descending, clamped at zero
    Eigen::MatrixXd eigenvectors;  // (N*C) x L, column l pairs with eigenvalues(l)

    int count() const { return static_cast<int>(eigenvalues.size()); }

    // i-th block of eigenvector l.
    Eigen::Block<const Eigen::MatrixXd> vector_block(int l, int i) const {
        return eigenvectors.block(static_cast<Eigen::Index>(i) * block_size, l, block_size, 1);
    }

    // Rows of the eigenvector matrix belonging to point i, C x L.
    Eigen::Block<const Eigen::MatrixXd> point_rows(int i) const {
        return eigenvectors.middleRows(static_cast<Eigen::Index>(i) * block_size, block_size);
    }
};

HodgeSpectrum spectrum(const HodgeMatrix& hodge, int m_request, int tm);

// |H^tm(i,j)|_F^2 from the stored eigenpairs.
double affinity(const HodgeSpectrum& spec, int i, int j);
// Affinity divided by lambda_1^(2 tm). Throws when lambda_1 = 0.
double normalized_affinity(const HodgeSpectrum& spec, int i, int j);

/// Per-point m x m embedding matrices eta(x_i).
struct Embedding {
    int m = 0;
    int tm = 1;
    bool normalized = false;
    std::vector<Eigen::MatrixXd> eta;

    int size() const { return static_cast<int>(eta.size()); }
};

Embedding embed(const HodgeSpectrum& spec, int m);
Embedding normalized_embed(const HodgeSpectrum& spec, int m);

// Single-point eta(x_i) without materializing the whole embedding.
Eigen::MatrixXd embedding_matrix(const HodgeSpectrum& spec, int m, int i, bool normalized);

// Squared Hodge diffusion distance |eta(x_i) - eta(x_j)|_F^2, evaluated via
// the three-term inner-product expansion.
double hodge_distance(const Embedding& embedding, int i, int j);

// (lambda_{m+1}/lambda_1)^tm ((N C)^2 - m^2), the normalized truncation-error
// bound.
double truncation_bound(const HodgeSpectrum& spec, int m);

}  // namespace hodgemaps
